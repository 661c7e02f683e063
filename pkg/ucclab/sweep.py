#!/usr/bin/env python
"""Provides exhaustive and seeded parameter sweeps over the constructions.

Every sweep builds its instance list up front in a canonical order, checks
the instances through pmap and reports pass/fail counts together with the
first failing instance.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
import time
from itertools import combinations, permutations

import numpy as np

from ucclab import ArgumentError, SuitabilityError, VerificationError
from ucclab import iter_bits
from ucclab.family import DEFAULT_CLOSURE_CAP
from ucclab.generators import GridSpec, canonical_swap_map, generate
from ucclab.graph import BipartiteGraph, check_prop1_all
from ucclab.graph import edge_rarity_violations, graph_satisfies_ucc
from ucclab.graph import maximal_stable_sets
from ucclab.io.graph import graph_to_dict
from ucclab.symmetry import find_swap_automorphism, is_swap_automorphism
from ucclab.symmetry import membership_counts_invariant, rare_pair_via_swap
from ucclab.translates import apply_shift, cyclic_translates
from ucclab.translates import enumerate_suitable, standard_shift_index
from ucclab.translates import validate_suitable, verify_section3
from ucclab.util import pmap, serialize_dict

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
RANDOM_GRAPHS = 500
RANDOM_CLASS_MAX = 7
SHIFT_SAMPLE = 50


class SweepReport(object):
    """Aggregate outcome of a sweep."""

    def __init__(self, name, total, failures, counterexample=None,
                 elapsed=0.0, params=None):
        self.name = name
        self.total = total
        self.failures = failures
        self.counterexample = counterexample
        self.elapsed = elapsed
        self.params = params or {}

    @property
    def passed(self):
        return self.failures == 0

    def __repr__(self):
        return serialize_dict(self.to_dict(), full=False)

    def to_dict(self):
        return {'sweep': self.name, 'instances': self.total,
                'failures': self.failures,
                'counterexample': self.counterexample,
                'elapsed': round(self.elapsed, 3),
                'params': self.params, 'passed': self.passed}


def _run(name, check, instances, n_jobs=1, params=None):
    start = time.time()
    outcomes = pmap(check, instances, n_jobs=n_jobs)
    failed = [outcome for outcome in outcomes if outcome is not None]
    report = SweepReport(name, len(instances), len(failed),
                         counterexample=failed[0] if failed else None,
                         elapsed=time.time() - start, params=params)
    logger.info('sweep %s: %d instances, %d failures, %.2f sec' %
                (name, report.total, report.failures, report.elapsed))
    return report


def _pattern_graph(n_x, n_y, pattern):
    # bits j*n_x .. (j+1)*n_x - 1 of pattern are the neighborhood of y_j
    row = (1 << n_x) - 1
    neighborhoods = [(pattern >> (j * n_x)) & row for j in range(n_y)]
    return BipartiteGraph.from_y_neighborhoods(
        ['x%d' % i for i in range(n_x)], ['y%d' % j for j in range(n_y)],
        neighborhoods)


def _all_patterns(max_x, max_y):
    for n_x in range(1, max_x + 1):
        for n_y in range(1, max_y + 1):
            for pattern in range(1 << (n_x * n_y)):
                yield n_x, n_y, pattern


def _check_prop1(args):
    n_x, n_y, pattern, closure_cap = args
    graph = _pattern_graph(n_x, n_y, pattern)
    for report in check_prop1_all(graph, closure_cap=closure_cap):
        if not report.agrees:
            result = report.to_dict()
            result['graph'] = graph_to_dict(graph)
            return result
    return None


def sweep_prop1(max_x=3, max_y=3, closure_cap=DEFAULT_CLOSURE_CAP, n_jobs=1):
    """Rare iff abundant, on every graph up to max_x + max_y vertices with
    minimum degree 1."""
    if max_x < 1 or max_y < 1:
        raise ArgumentError('ERROR: class sizes must be >= 1')
    instances = [(n_x, n_y, pattern, closure_cap)
                 for n_x, n_y, pattern in _all_patterns(max_x, max_y)
                 if _pattern_graph(n_x, n_y, pattern).min_degree() >= 1]
    return _run('prop1', _check_prop1, instances, n_jobs=n_jobs,
                params={'max_x': max_x, 'max_y': max_y})


def _random_patterns(count, class_max, seed):
    random_state = np.random.RandomState(seed)
    for _ in range(count):
        n_x = random_state.randint(1, class_max + 1)
        n_y = random_state.randint(1, class_max + 1)
        density = random_state.uniform(0.2, 0.8)
        cells = random_state.rand(n_x * n_y) < density
        pattern = sum(1 << b for b in np.flatnonzero(cells).tolist())
        yield n_x, n_y, pattern or 1


def _check_edge_rarity(args):
    n_x, n_y, pattern = args
    graph = _pattern_graph(n_x, n_y, pattern)
    stable_sets = maximal_stable_sets(graph)
    violations = edge_rarity_violations(graph, stable_sets=stable_sets)
    if violations or not graph_satisfies_ucc(graph, stable_sets).holds:
        return {'graph': graph_to_dict(graph),
                'violations': [[graph.label(x), graph.label(y)]
                               for x, y in violations]}
    return None


def sweep_edge_rarity(max_x=3, max_y=3, samples=RANDOM_GRAPHS,
                      class_max=RANDOM_CLASS_MAX, seed=DEFAULT_SEED,
                      n_jobs=1):
    """Every edge has a rare endpoint: exhaustive small graphs plus seeded
    random graphs."""
    instances = [(n_x, n_y, pattern)
                 for n_x, n_y, pattern in _all_patterns(max_x, max_y)
                 if pattern]
    instances.extend(_random_patterns(samples, class_max, seed))
    return _run('edge-rarity', _check_edge_rarity, instances, n_jobs=n_jobs,
                params={'max_x': max_x, 'max_y': max_y, 'samples': samples,
                        'class_max': class_max, 'seed': seed})


def _check_construction(args):
    construction, closure_cap = args
    report = verify_section3(construction, closure_cap=closure_cap)
    if report.passed:
        return None
    result = report.to_dict()
    result['construction'] = repr(construction)
    return result


def _check_translates(args):
    n, elements, closure_cap = args
    return _check_construction((cyclic_translates(elements, n), closure_cap))


def sweep_translates(max_n=7, closure_cap=DEFAULT_CLOSURE_CAP, n_jobs=1):
    """Copy-augmented automorphism and closure check for every nonempty
    R in Z_n, n <= max_n."""
    if max_n < 1:
        raise ArgumentError('ERROR: max_n must be >= 1')
    instances = [(n, list(iter_bits(mask)), closure_cap)
                 for n in range(1, max_n + 1)
                 for mask in range(1, 1 << n)]
    return _run('translates', _check_translates, instances, n_jobs=n_jobs,
                params={'max_n': max_n})


def _full_period_sets(n):
    """Bitsets R in Z_n with n distinct translates."""
    return [mask for mask in range(1, 1 << n)
            if cyclic_translates(list(iter_bits(mask)), n).k == n]


def _check_shift(args):
    n, elements, anchor, l, m, closure_cap = args
    translates = cyclic_translates(elements, n, anchor=anchor)
    shifted = apply_shift(translates, standard_shift_index(n, l, m))
    return _check_construction((shifted, closure_cap))


def sweep_shift(ns=(5, 6, 7), elements=None, anchor=None, ls=None, ms=None,
                sample=SHIFT_SAMPLE, seed=DEFAULT_SEED,
                closure_cap=DEFAULT_CLOSURE_CAP, n_jobs=1):
    """Shift automorphism and closure check over standard shift indices.

    With elements given only that R is used; otherwise every R with n
    distinct translates, sampled down to sample sets (seeded) per n. ls and
    ms default to every l in 1..n and every m in 0..l-1.
    """
    random_state = np.random.RandomState(seed)
    instances = []
    for n in ns:
        if elements is not None:
            masks = [sum(1 << e for e in set(elements))]
        else:
            masks = _full_period_sets(n)
            if len(masks) > sample:
                chosen = random_state.choice(len(masks), sample, replace=False)
                masks = [masks[i] for i in sorted(chosen.tolist())]
        for mask in masks:
            for l in (ls or range(1, n + 1)):
                if l > n:
                    continue
                for m in (ms if ms is not None else range(l)):
                    instances.append((n, list(iter_bits(mask)), anchor, l, m,
                                      closure_cap))
    return _run('shift', _check_shift, instances, n_jobs=n_jobs,
                params={'ns': list(ns), 'sample': sample, 'seed': seed})


def _accepted_by_validation(n, max_l):
    accepted = set()
    for size in range(max_l + 1):
        for index_set in combinations(range(n), size):
            for images in permutations(index_set):
                for r in range(n):
                    try:
                        accepted.add(validate_suitable(n, index_set, images, r))
                    except SuitabilityError:
                        pass
    return accepted


def _check_suitable(args):
    n, max_l = args
    enumerated = enumerate_suitable(n, max_l)
    accepted = _accepted_by_validation(n, max_l)
    missing_standard = [(l, m) for l in range(1, max_l + 1) for m in range(l)
                        if standard_shift_index(n, l, m) not in accepted]
    if set(enumerated) != accepted or len(enumerated) != len(accepted) or \
            missing_standard:
        return {'n': n, 'enumerated': len(enumerated),
                'accepted': len(accepted),
                'missing_standard': missing_standard}
    return None


def sweep_suitable(max_n=6, max_l=4, n_jobs=1):
    """enumerate_suitable against validate_suitable over the same space."""
    instances = [(n, min(max_l, n)) for n in range(1, max_n + 1)]
    return _run('suitable', _check_suitable, instances, n_jobs=n_jobs,
                params={'max_n': max_n, 'max_l': max_l})


def graph_zoo(max_hypercube=3):
    """Instances of the graph families with a known or searchable swap map."""
    specs = [GridSpec('cylinder', m=m, n=n) for m in (4, 6) for n in (2, 3)]
    specs.append(GridSpec('torus', m=4, n=4))
    specs.extend(GridSpec('grid', m=m, n=n)
                 for m, n in ((2, 2), (2, 3), (3, 4), (4, 4)))
    specs.extend(GridSpec('hypercube', d=d)
                 for d in range(1, max_hypercube + 1))
    specs.extend(GridSpec('crown', n=n) for n in (2, 3, 4))
    specs.extend(GridSpec('moebius', n=n) for n in (6, 10))
    return specs


def _check_zoo(spec):
    graph = generate(spec)
    if spec.kind in ('grid', 'cylinder', 'torus'):
        f = canonical_swap_map(spec, graph)
    else:
        f = find_swap_automorphism(graph).bijection
    if f is None or not is_swap_automorphism(graph, f):
        return {'graph': repr(spec), 'swap_automorphism': False}
    stable_sets = maximal_stable_sets(graph)
    try:
        a, b = rare_pair_via_swap(graph, f, stable_sets=stable_sets)
    except VerificationError:
        return {'graph': repr(spec), 'rare_pair': None}
    if not membership_counts_invariant(graph, f, stable_sets=stable_sets) or \
            not graph_satisfies_ucc(graph, stable_sets).holds:
        return {'graph': repr(spec), 'rare_pair': [graph.label(a),
                                                   graph.label(b)]}
    return None


def sweep_graphs(max_hypercube=3, n_jobs=1):
    """Swap map, rare pair and membership-count invariance on the zoo."""
    specs = graph_zoo(max_hypercube=max_hypercube)
    return _run('graphs', _check_zoo, specs, n_jobs=n_jobs,
                params={'instances': [repr(s) for s in specs],
                        'max_hypercube': max_hypercube})

