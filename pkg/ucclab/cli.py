#!/usr/bin/env python
"""Provides the ucc-lab command line.

Exit codes: 0 verified positive, 1 verified negative, 2 usage or argument
error, 3 a resource cap was exceeded.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import json
import logging
import os
import sys

import requests

from ucclab import ArgumentError, PreconditionError, ResourceLimitError
from ucclab import VerificationError
from ucclab import __version__
from ucclab import util
from ucclab.family import DEFAULT_CLOSURE_CAP, union_closure, verify_ucc
from ucclab.generators import KINDS, GridSpec, canonical_swap_map
from ucclab.generators import degree_two_neighbor_rare_check, generate
from ucclab.graph import DEFAULT_SET_CAP, DEFAULT_VERTEX_CAP
from ucclab.graph import check_prop1, check_prop1_all, graph_satisfies_ucc
from ucclab.graph import incidence_graph, maximal_stable_sets, rare_vertices
from ucclab.io.family import construction_from_dict, construction_to_dict
from ucclab.io.family import family_to_json, family_to_text, from_label
from ucclab.io.family import load_family, to_label
from ucclab.io.graph import dumps_graph, load_graph
from ucclab.io.symmetry import bijection_to_dict, load_bijection
from ucclab.io.symmetry import load_suitable
from ucclab.sweep import DEFAULT_SEED, RANDOM_CLASS_MAX, RANDOM_GRAPHS
from ucclab.sweep import SHIFT_SAMPLE, sweep_edge_rarity, sweep_graphs
from ucclab.sweep import sweep_prop1, sweep_shift, sweep_suitable
from ucclab.sweep import sweep_translates
from ucclab.symmetry import DEFAULT_SEARCH_BUDGET, find_swap_automorphism
from ucclab.symmetry import is_swap_automorphism, membership_counts_invariant
from ucclab.symmetry import rare_pair_via_swap
from ucclab.translates import apply_shift, as_translate_family
from ucclab.translates import cyclic_translates, standard_shift_index
from ucclab.translates import validate_suitable, verify_section3
from ucclab.util import configure_logging, serialize_dict

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

CLOSURE_CAP_ENV = 'UCC_LAB_CLOSURE_CAP'
FORMATS = ('text', 'json')


class RunConfig(object):
    """Options shared by every command.

    Parameters
    ----------
    closure_cap : int or None
        Largest union closure; None falls back to $UCC_LAB_CLOSURE_CAP and
        then to DEFAULT_CLOSURE_CAP.

    vertex_cap, set_cap : int
        Limits of the maximal stable set enumeration.

    search_budget : int
        Node limit of the swap automorphism search.

    deterministic : bool
        Forces n_jobs = 1.

    one_based : bool
        Element labels 1..n with label n standing for 0.

    fmt : string
        Report format, text or json.
    """

    def __init__(self, command=None, action=None, input=None, output=None,
                 closure_cap=None, vertex_cap=DEFAULT_VERTEX_CAP,
                 set_cap=DEFAULT_SET_CAP, search_budget=DEFAULT_SEARCH_BUDGET,
                 deterministic=False, one_based=False, fmt='text', n_jobs=1,
                 seed=DEFAULT_SEED, verbosity=0, log_file=None,
                 environ=None):
        environ = os.environ if environ is None else environ
        if closure_cap is None and environ.get(CLOSURE_CAP_ENV):
            try:
                closure_cap = int(environ[CLOSURE_CAP_ENV])
            except ValueError:
                raise ArgumentError('ERROR: %s must be an integer, got %s' %
                                    (CLOSURE_CAP_ENV,
                                     environ[CLOSURE_CAP_ENV]))
        self.command = command
        self.action = action
        self.input = input
        self.output = output
        self.closure_cap = DEFAULT_CLOSURE_CAP if closure_cap is None \
            else closure_cap
        self.vertex_cap = vertex_cap
        self.set_cap = set_cap
        self.search_budget = search_budget
        self.deterministic = deterministic
        self.one_based = one_based
        self.fmt = fmt
        self.n_jobs = 1 if deterministic else n_jobs
        self.seed = seed
        self.verbosity = verbosity
        self.log_file = log_file
        self.validate()

    @classmethod
    def from_args(cls, args, environ=None):
        return cls(command=args.command, action=args.action,
                   input=args.input, output=args.output,
                   closure_cap=args.closure_cap, vertex_cap=args.vertex_cap,
                   set_cap=args.set_cap, search_budget=args.search_budget,
                   deterministic=args.deterministic,
                   one_based=args.one_based, fmt=args.format,
                   n_jobs=args.n_jobs, seed=args.seed,
                   verbosity=args.verbose, log_file=args.log_file,
                   environ=environ)

    def validate(self):
        for name in ('closure_cap', 'vertex_cap', 'set_cap', 'search_budget'):
            if getattr(self, name) < 1:
                raise ArgumentError('ERROR: %s must be positive, got %d' %
                                    (name, getattr(self, name)))
        if self.fmt not in FORMATS:
            raise ArgumentError('ERROR: format must be one of %s' %
                                ', '.join(FORMATS))
        if self.n_jobs == 0:
            raise ArgumentError('ERROR: n_jobs must be nonzero')
        return self

    def enumerator_opts(self):
        return {'vertex_cap': self.vertex_cap, 'set_cap': self.set_cap,
                'n_jobs': self.n_jobs}

    def to_dict(self):
        return dict((k, v) for k, v in self.__dict__.items())


def _int_list(text):
    try:
        return [int(token) for token in text.replace(' ', '').split(',')
                if token]
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected comma separated integers, got %s' % text)


def _render(data):
    """Aligned text of a report, nested dictionaries as sections."""
    flat = dict((k, v) for k, v in data.items() if not isinstance(v, dict))
    text = [serialize_dict(flat)] if flat else []
    for key in sorted(k for k, v in data.items() if isinstance(v, dict)):
        text.append('[%s]' % key)
        text.append(_render(data[key]))
    return '\n'.join(text)


def _emit(config, data):
    if config.fmt == 'json':
        util.write(json.dumps(data, sort_keys=True), config.output)
    else:
        util.write(_render(data), config.output)


def _emit_family(config, family, one_based, construction=None):
    if config.fmt == 'json':
        record = None
        if construction is not None:
            record = construction_to_dict(construction)
        util.write(family_to_json(family, one_based, record), config.output)
    else:
        util.write(family_to_text(family, one_based), config.output)


def _relabel(data, universe_size, one_based):
    """Abundant elements and frequencies in display labels."""
    data = dict(data)
    if 'abundant' in data:
        data['abundant'] = [to_label(x, universe_size, one_based)
                            for x in data['abundant']]
    if 'frequencies' in data:
        data['frequencies'] = dict(
            (str(to_label(x, universe_size, one_based)), count)
            for x, count in enumerate(data['frequencies']))
    return data


# family commands

def _translates_from_args(config, args):
    if args.set is None or args.n is None:
        raise ArgumentError('ERROR: give the set with --set and the modulus '
                            'with --n')
    elements = [from_label(x, args.n, config.one_based) for x in args.set]
    anchor = None
    if args.anchor is not None:
        anchor = from_label(args.anchor, args.n, config.one_based)
    return cyclic_translates(elements, args.n, anchor=anchor,
                             offset=args.offset)


def _load_family(config, args):
    return load_family(args.input or '-', universe_size=args.universe,
                       one_based=config.one_based)


def family_translates(config, args):
    translates = _translates_from_args(config, args)
    logger.info('%r has %d distinct translates' % (translates, translates.k))
    _emit_family(config, translates.to_family(), config.one_based,
                 construction=translates)
    return EXIT_OK


def _shift_index(args, n):
    if args.index is not None:
        return load_suitable(args.index)
    if args.I is not None:
        if args.q is None or args.r is None:
            raise ArgumentError('ERROR: --I needs --q and --r')
        return validate_suitable(n, args.I, args.q, args.r)
    if args.l is not None:
        return standard_shift_index(n, args.l, args.m)
    raise ArgumentError('ERROR: give --l and --m, --I, --q and --r, '
                        'or --index')


def family_shift(config, args):
    if args.set is not None:
        translates = _translates_from_args(config, args)
        one_based = config.one_based
    else:
        doc = _load_family(config, args)
        family, one_based = doc.family, doc.one_based
        anchor = None
        if args.anchor is not None:
            anchor = from_label(args.anchor, family.universe_size, one_based)
        record = doc.construction
        if anchor is None and record and record.get('kind') == 'translates':
            translates = construction_from_dict(record, family)
        else:
            translates = as_translate_family(family, anchor=anchor)
        if translates is None:
            raise PreconditionError('ERROR: the input is not an indexed '
                                    'family of cyclic translates')
    shifted = apply_shift(translates, _shift_index(args, translates.n))
    if shifted.collisions():
        logger.warning('members %s coincide as sets' % shifted.collisions())
    _emit_family(config, shifted.to_family(), one_based, construction=shifted)
    return EXIT_OK


def family_closure(config, args):
    doc = _load_family(config, args)
    closure = union_closure(doc.family, cap=config.closure_cap)
    logger.info('closure has %d sets' % len(closure))
    _emit_family(config, closure, doc.one_based)
    return EXIT_OK


def _generic_full_check(config, family):
    graph = incidence_graph(family)
    data = {'kind': 'generic'}
    result = find_swap_automorphism(graph, budget=config.search_budget)
    data['swap_search'] = result.to_dict()
    passed = True
    if graph.number_of_edges() > 0:
        witness = graph_satisfies_ucc(graph, **config.enumerator_opts())
        data['graph_ucc'] = witness.holds
        if result.exists:
            assert is_swap_automorphism(graph, result.bijection)
            passed = witness.holds
    return data, passed


def family_verify(config, args):
    doc = _load_family(config, args)
    family = doc.family
    n = family.universe_size
    report = verify_ucc(family, cap=config.closure_cap)
    data = {'ucc': _relabel(report.to_dict(), n, doc.one_based)}
    passed = report.holds
    if args.full:
        construction = None
        if doc.construction:
            construction = construction_from_dict(doc.construction, family)
        elif n > 0:
            construction = as_translate_family(family)
        if construction is not None:
            section = verify_section3(construction,
                                      closure_cap=config.closure_cap,
                                      **config.enumerator_opts())
            data['full'] = _relabel(section.to_dict(), n, doc.one_based)
            passed = passed and section.passed
        else:
            data['full'], full_passed = _generic_full_check(config, family)
            passed = passed and full_passed
    _emit(config, data)
    return EXIT_OK if passed else EXIT_NEGATIVE


# graph commands

def _graph_from_args(args, required_kind=False):
    if args.kind is not None:
        spec = GridSpec(args.kind, m=args.m, n=args.n, d=args.d)
        return generate(spec), spec
    if required_kind:
        raise ArgumentError('ERROR: --kind is required')
    return load_graph(args.input or '-'), None


def graph_gen(config, args):
    graph, _ = _graph_from_args(args, required_kind=True)
    if args.node_link:
        fmt = 'node-link'
    elif config.fmt == 'json' or (config.output or '').endswith('.json'):
        fmt = 'json'
    else:
        fmt = 'edgelist'
    util.write(dumps_graph(graph, fmt), config.output)
    return EXIT_OK


def graph_mis(config, args):
    graph, _ = _graph_from_args(args)
    stable_sets = maximal_stable_sets(graph, **config.enumerator_opts())
    labels = graph.labels
    if config.fmt == 'json':
        _emit(config, {
            'count': len(stable_sets),
            'sets': [[labels[v] for v in s] for s in stable_sets.vertex_lists()],
            'membership': dict((labels[v], stable_sets.membership_count(v))
                               for v in range(len(graph)))})
    else:
        util.write('\n'.join(' '.join(labels[v] for v in s)
                             for s in stable_sets.vertex_lists()),
                   config.output)
    return EXIT_OK


def graph_rare(config, args):
    graph, _ = _graph_from_args(args)
    stable_sets = maximal_stable_sets(graph, **config.enumerator_opts())
    rare = rare_vertices(graph, stable_sets=stable_sets)
    _emit(config, {'x': [graph.label(v) for v in rare.x],
                   'y': [graph.label(v) for v in rare.y],
                   'stable_sets': len(stable_sets)})
    return EXIT_OK if rare.x and rare.y else EXIT_NEGATIVE


def _emit_bijection(config, f):
    if config.fmt == 'json':
        util.write(json.dumps(bijection_to_dict(f), sort_keys=True),
                   config.output)
    else:
        labels = f.graph.labels
        util.write('\n'.join('%s -> %s' % (labels[v], labels[f(v)])
                             for v in range(len(f))), config.output)


def graph_swapmap(config, args):
    graph, spec = _graph_from_args(args, required_kind=True)
    f = canonical_swap_map(spec, graph)
    assert is_swap_automorphism(graph, f), \
        'ERROR: canonical map of %r does not swap the classes' % spec
    _emit_bijection(config, f)
    return EXIT_OK


def graph_autosearch(config, args):
    graph, _ = _graph_from_args(args)
    result = find_swap_automorphism(graph, budget=config.search_budget)
    if result.exists:
        assert is_swap_automorphism(graph, result.bijection)
    _emit(config, result.to_dict())
    return EXIT_OK if result.exists else EXIT_NEGATIVE


def graph_check_ucc(config, args):
    graph, _ = _graph_from_args(args)
    stable_sets = maximal_stable_sets(graph, **config.enumerator_opts())
    witness = graph_satisfies_ucc(graph, stable_sets=stable_sets)
    label = graph.label
    data = {'holds': witness.holds,
            'x_witness': None if witness.x_witness is None
            else label(witness.x_witness),
            'y_witness': None if witness.y_witness is None
            else label(witness.y_witness),
            'stable_sets': len(stable_sets),
            'degree_two': degree_two_neighbor_rare_check(
                graph, stable_sets=stable_sets).to_dict(graph)}
    if args.map is not None:
        f = load_bijection(args.map, graph)
        a, b = rare_pair_via_swap(graph, f, stable_sets=stable_sets)
        data['rare_pair'] = [label(a), label(b)]
        data['membership_invariant'] = membership_counts_invariant(
            graph, f, stable_sets=stable_sets)
    _emit(config, data)
    return EXIT_OK if witness.holds else EXIT_NEGATIVE


def check_prop1_command(config, args):
    graph, _ = _graph_from_args(args)
    if args.x is not None:
        reports = [check_prop1(graph, graph.index(args.x),
                               closure_cap=config.closure_cap,
                               **config.enumerator_opts())]
    else:
        reports = check_prop1_all(graph, closure_cap=config.closure_cap,
                                  **config.enumerator_opts())
    agrees = all(report.agrees for report in reports)
    if config.fmt == 'json':
        _emit(config, {'agrees': agrees,
                       'reports': [report.to_dict() for report in reports]})
    else:
        util.write('\n\n'.join(serialize_dict(report.to_dict())
                               for report in reports), config.output)
    return EXIT_OK if agrees else EXIT_NEGATIVE


# sweeps

def sweep_command(config, args):
    name = args.action
    if name == 'prop1':
        report = sweep_prop1(max_x=args.max_x, max_y=args.max_y,
                             closure_cap=config.closure_cap,
                             n_jobs=config.n_jobs)
    elif name == 'edge-rarity':
        report = sweep_edge_rarity(max_x=args.max_x, max_y=args.max_y,
                                   samples=args.samples,
                                   class_max=args.class_max,
                                   seed=config.seed, n_jobs=config.n_jobs)
    elif name == 'translates':
        report = sweep_translates(max_n=args.max_n,
                                  closure_cap=config.closure_cap,
                                  n_jobs=config.n_jobs)
    elif name == 'shift':
        elements, anchor = None, None
        if args.set is not None:
            if len(args.n) != 1:
                raise ArgumentError('ERROR: --set needs exactly one --n')
            n = args.n[0]
            elements = [from_label(x, n, config.one_based) for x in args.set]
            if args.anchor is not None:
                anchor = from_label(args.anchor, n, config.one_based)
        report = sweep_shift(ns=args.n, elements=elements, anchor=anchor,
                             ls=None if args.all_l else args.l,
                             ms=None if args.all_m else args.m,
                             sample=args.sample, seed=config.seed,
                             closure_cap=config.closure_cap,
                             n_jobs=config.n_jobs)
    elif name == 'suitable':
        report = sweep_suitable(max_n=args.max_n, max_l=args.max_l,
                                n_jobs=config.n_jobs)
    else:
        report = sweep_graphs(max_hypercube=args.max_hypercube,
                              n_jobs=config.n_jobs)
    _emit(config, report.to_dict())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--in', dest='input', default=None,
                        help='input file, URL or - for stdin')
    common.add_argument('--out', dest='output', default=None,
                        help='output file (default stdout)')
    common.add_argument('--format', choices=FORMATS, default='text')
    common.add_argument('--one-based', action='store_true',
                        help='element labels 1..n, label n meaning 0')
    common.add_argument('--closure-cap', type=int, default=None)
    common.add_argument('--vertex-cap', type=int, default=DEFAULT_VERTEX_CAP)
    common.add_argument('--set-cap', type=int, default=DEFAULT_SET_CAP)
    common.add_argument('--search-budget', type=int,
                        default=DEFAULT_SEARCH_BUDGET)
    common.add_argument('--deterministic', action='store_true',
                        help='single process everywhere')
    common.add_argument('--n-jobs', type=int, default=1)
    common.add_argument('--seed', type=int, default=DEFAULT_SEED)
    common.add_argument('-v', '--verbose', action='count', default=0)
    common.add_argument('--log-file', default=None)
    return common


def _add_kind_options(parser):
    parser.add_argument('--kind', choices=KINDS, default=None)
    parser.add_argument('--m', type=int, default=None)
    parser.add_argument('--n', type=int, default=None)
    parser.add_argument('--d', type=int, default=None)


def _add_set_options(parser):
    parser.add_argument('--set', type=_int_list, default=None,
                        help='translated set, e.g. 1,2,4,7')
    parser.add_argument('--n', type=int, default=None, help='modulus')
    parser.add_argument('--anchor', type=int, default=None)
    parser.add_argument('--offset', type=int, default=0)
    parser.add_argument('--universe', type=int, default=None,
                        help='universe size of headerless text input')


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='ucc-lab',
        description='Exact checks of the union-closed sets conjecture on '
                    'families and bipartite graphs.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    family = commands.add_parser('family', help='set families')
    actions = family.add_subparsers(dest='action')
    actions.required = True
    p = actions.add_parser('translates', parents=[common],
                           help='cyclic translates of a set')
    _add_set_options(p)
    p.set_defaults(handler=family_translates)
    p = actions.add_parser('shift', parents=[common],
                           help='anchor shift of a translate family')
    _add_set_options(p)
    p.add_argument('--l', type=int, default=None)
    p.add_argument('--m', type=int, default=0)
    p.add_argument('--I', type=_int_list, default=None)
    p.add_argument('--q', type=_int_list, default=None,
                   help='images of the sorted indices of I')
    p.add_argument('--r', type=int, default=None)
    p.add_argument('--index', default=None, help='suitable index JSON file')
    p.set_defaults(handler=family_shift)
    p = actions.add_parser('closure', parents=[common],
                           help='generated union-closed family')
    p.add_argument('--universe', type=int, default=None)
    p.set_defaults(handler=family_closure)
    p = actions.add_parser('verify', parents=[common],
                           help='abundant element check')
    p.add_argument('--universe', type=int, default=None)
    p.add_argument('--full', action='store_true',
                   help='also check the swap automorphism and graph form')
    p.set_defaults(handler=family_verify)

    graph = commands.add_parser('graph', help='bipartite graphs')
    actions = graph.add_subparsers(dest='action')
    actions.required = True
    for name, handler in (('gen', graph_gen), ('mis', graph_mis),
                          ('rare', graph_rare), ('swapmap', graph_swapmap),
                          ('autosearch', graph_autosearch),
                          ('check-ucc', graph_check_ucc)):
        p = actions.add_parser(name, parents=[common])
        _add_kind_options(p)
        p.set_defaults(handler=handler)
        if name == 'gen':
            p.add_argument('--node-link', action='store_true',
                           help='networkx node-link JSON')
        if name == 'check-ucc':
            p.add_argument('--map', default=None,
                           help='swap automorphism JSON file')

    check = commands.add_parser('check', help='rare/abundant agreement')
    actions = check.add_subparsers(dest='action')
    actions.required = True
    p = actions.add_parser('prop1', parents=[common])
    _add_kind_options(p)
    p.add_argument('--x', default=None, help='label of one X vertex')
    p.set_defaults(handler=check_prop1_command)

    sweep = commands.add_parser('sweep', help='parameter sweeps')
    actions = sweep.add_subparsers(dest='action')
    actions.required = True
    for name in ('prop1', 'edge-rarity'):
        p = actions.add_parser(name, parents=[common])
        p.add_argument('--max-x', type=int, default=3)
        p.add_argument('--max-y', type=int, default=3)
        if name == 'edge-rarity':
            p.add_argument('--samples', type=int, default=RANDOM_GRAPHS)
            p.add_argument('--class-max', type=int, default=RANDOM_CLASS_MAX)
    p = actions.add_parser('translates', parents=[common])
    p.add_argument('--max-n', type=int, default=7)
    p = actions.add_parser('shift', parents=[common])
    p.add_argument('--n', type=_int_list, default=[5, 6, 7])
    p.add_argument('--set', type=_int_list, default=None)
    p.add_argument('--anchor', type=int, default=None)
    p.add_argument('--l', type=_int_list, default=None)
    p.add_argument('--all-l', action='store_true')
    p.add_argument('--m', type=_int_list, default=None)
    p.add_argument('--all-m', action='store_true')
    p.add_argument('--sample', type=int, default=SHIFT_SAMPLE)
    p = actions.add_parser('suitable', parents=[common])
    p.add_argument('--max-n', type=int, default=6)
    p.add_argument('--max-l', type=int, default=4)
    p = actions.add_parser('graphs', parents=[common])
    p.add_argument('--max-hypercube', type=int, default=3)
    for p in actions.choices.values():
        p.set_defaults(handler=sweep_command)
    return parser


def run(argv=None, environ=None):
    """Parse argv, run the command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    package_logger = logging.getLogger('ucclab')
    configure_logging(package_logger, verbosity=args.verbose,
                      filename=args.log_file)
    try:
        config = RunConfig.from_args(args, environ=environ)
        logger.debug(serialize_dict(config.to_dict()))
        return args.handler(config, args)
    except ResourceLimitError as e:
        logger.error('%s (cap %s = %s)' % (e, e.cap_name, e.cap))
        return EXIT_RESOURCE
    except VerificationError as e:
        logger.error(str(e))
        return EXIT_NEGATIVE
    except ArgumentError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (IOError, OSError, requests.RequestException) as e:
        logger.error('ERROR: %s' % e)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
