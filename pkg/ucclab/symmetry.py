#!/usr/bin/env python
"""Provides class-swapping automorphisms of bipartite graphs.

A swap automorphism maps X onto Y and Y onto X while preserving edges; a
graph with one has a rare vertex in both classes.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
from itertools import permutations

from sklearn.base import BaseEstimator
from toolz import frequencies

from ucclab import ArgumentError, PreconditionError, ResourceLimitError
from ucclab import VerificationError
from ucclab import iter_bits
from ucclab.graph import X_SIDE, maximal_stable_sets
from ucclab.util import serialize_dict

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 2 * 10 ** 6
BRUTE_FORCE_CLASS_CAP = 4

FOUND = 'found'
CLASS_SIZES_DIFFER = 'class_sizes_differ'
DEGREES_DIFFER = 'degree_multisets_differ'
EXHAUSTED = 'exhausted'


class VertexBijection(object):
    """Total bijection on the vertex indices of a graph, as a lookup table."""

    def __init__(self, graph, table):
        table = tuple(int(v) for v in table)
        if len(table) != len(graph) or \
                sorted(table) != list(range(len(graph))):
            raise ArgumentError(
                'ERROR: map is not a bijection on the %d vertices' %
                len(graph))
        self.graph = graph
        self.table = table

    @classmethod
    def from_labels(cls, graph, mapping):
        """Build from a label -> label dictionary covering every vertex."""
        mapping = dict((str(k), str(v)) for k, v in mapping.items())
        if len(mapping) != len(graph):
            raise ArgumentError('ERROR: map covers %d of %d vertices' %
                                (len(mapping), len(graph)))
        table = [graph.index(mapping[label]) if label in mapping else -1
                 for label in graph.labels]
        return cls(graph, table)

    def __call__(self, vertex):
        return self.table[vertex]

    def __len__(self):
        return len(self.table)

    def __eq__(self, other):
        if not isinstance(other, VertexBijection):
            return NotImplemented
        return self.table == other.table and self.graph == other.graph

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return 'VertexBijection(%s)' % (self.table,)

    def label_map(self):
        """Label -> label dictionary."""
        labels = self.graph.labels
        return dict((labels[v], labels[w]) for v, w in enumerate(self.table))

    def image(self, bitset):
        """Image of a vertex bitset."""
        mapped = 0
        for v in iter_bits(bitset):
            mapped |= 1 << self.table[v]
        return mapped


def is_automorphism(graph, f):
    """True iff f(N(v)) = N(f(v)) for every vertex v."""
    if len(f) != len(graph):
        raise ArgumentError('ERROR: map has %d entries, graph has %d vertices'
                            % (len(f), len(graph)))
    adjacency = graph.adjacency
    for v in range(len(graph)):
        if f.image(adjacency[v]) != adjacency[f(v)]:
            return False
    return True


def swaps_classes(graph, f):
    """True iff f maps X into Y and Y into X."""
    return all(graph.side(f(v)) != graph.side(v) for v in range(len(graph)))


def is_swap_automorphism(graph, f):
    """Automorphism exchanging the two bipartition classes."""
    return is_automorphism(graph, f) and swaps_classes(graph, f)


class SwapSearchResult(object):
    """Outcome of a swap automorphism search.

    status is FOUND, CLASS_SIZES_DIFFER or DEGREES_DIFFER (absent with a
    counting proof) or EXHAUSTED (absent after a complete search).
    """

    def __init__(self, bijection, status, nodes=0):
        self.bijection = bijection
        self.status = status
        self.nodes = nodes

    @property
    def exists(self):
        return self.bijection is not None

    def to_dict(self):
        result = {'status': self.status, 'nodes': self.nodes}
        if self.bijection is not None:
            result['map'] = self.bijection.label_map()
        return result


def _signatures(graph):
    degrees = [graph.degree(v) for v in range(len(graph))]
    return [(degrees[v], tuple(sorted(degrees[u] for u in graph.neighbors(v))))
            for v in range(len(graph))]


def _search_order(graph):
    # breadth first, so each vertex after the first of its component has an
    # already placed neighbor
    order, seen = [], 0
    for root in range(len(graph)):
        if (seen >> root) & 1:
            continue
        seen |= 1 << root
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            fresh = graph.adjacency[v] & ~seen
            seen |= fresh
            queue.extend(iter_bits(fresh))
    return order


class SwapAutomorphismSearch(BaseEstimator):
    """Backtracking search for a swap automorphism.

    Vertices are placed in breadth-first order; each is mapped to an unused
    vertex of the opposite class with the same degree and neighbor-degree
    multiset, consistent with the adjacencies to already placed vertices.

    Parameters
    ----------
    budget : int (default 2000000)
        Largest number of tentative assignments before giving up with a
        ResourceLimitError, which is distinct from a proven absence.
    """

    def __init__(self, budget=DEFAULT_SEARCH_BUDGET):
        self.budget = budget

    def __repr__(self):
        return serialize_dict(self.get_params(), offset='large')

    def search(self, graph):
        """Return a SwapSearchResult."""
        if graph.n_x != graph.n_y:
            return SwapSearchResult(None, CLASS_SIZES_DIFFER)
        degrees_x = frequencies(graph.degree(v) for v in graph.x_vertices)
        degrees_y = frequencies(graph.degree(v) for v in graph.y_vertices)
        if degrees_x != degrees_y:
            return SwapSearchResult(None, DEGREES_DIFFER)
        self._graph = graph
        self._signatures = _signatures(graph)
        self._order = _search_order(graph)
        self._table = [-1] * len(graph)
        self._nodes = 0
        found = self._place(0, 0, 0)
        nodes = self._nodes
        logger.debug('swap search on %r: %s after %d nodes' %
                     (graph, found, nodes))
        if found:
            return SwapSearchResult(VertexBijection(graph, self._table),
                                    FOUND, nodes)
        return SwapSearchResult(None, EXHAUSTED, nodes)

    def _consistent(self, v, w, placed, used):
        # used holds exactly the images of the placed vertices
        adjacency = self._graph.adjacency
        mapped = 0
        for u in iter_bits(adjacency[v] & placed):
            mapped |= 1 << self._table[u]
        return mapped == adjacency[w] & used

    def _place(self, depth, placed, used):
        if depth == len(self._order):
            return True
        graph = self._graph
        v = self._order[depth]
        opposite = graph.y_mask if v < graph.n_x else graph.x_mask
        for w in iter_bits(opposite & ~used):
            if self._signatures[w] != self._signatures[v]:
                continue
            self._nodes += 1
            if self._nodes > self.budget:
                raise ResourceLimitError(
                    'ERROR: swap automorphism search exceeded %d nodes' %
                    self.budget, cap_name='search_budget', cap=self.budget)
            if not self._consistent(v, w, placed, used):
                continue
            self._table[v] = w
            if self._place(depth + 1, placed | (1 << v), used | (1 << w)):
                return True
            self._table[v] = -1
        return False


def find_swap_automorphism(graph, **opts):
    """Search for a swap automorphism; see SwapAutomorphismSearch."""
    return SwapAutomorphismSearch(**opts).search(graph)


def brute_force_swap_automorphisms(graph):
    """Oracle: every swap automorphism, by trying all class permutations."""
    if graph.n_x != graph.n_y:
        return []
    if graph.n_x > BRUTE_FORCE_CLASS_CAP:
        raise ResourceLimitError(
            'ERROR: brute force limited to classes of %d vertices' %
            BRUTE_FORCE_CLASS_CAP,
            cap_name='brute_force_class_cap', cap=BRUTE_FORCE_CLASS_CAP)
    xs = list(graph.x_vertices)
    ys = list(graph.y_vertices)
    found = []
    for x_images in permutations(ys):
        for y_images in permutations(xs):
            f = VertexBijection(graph, list(x_images) + list(y_images))
            if is_automorphism(graph, f):
                found.append(f)
    return found


def membership_counts_invariant(graph, f, stable_sets=None, **opts):
    """True iff every vertex and its image lie in equally many stable sets."""
    if stable_sets is None:
        stable_sets = maximal_stable_sets(graph, **opts)
    return all(stable_sets.membership_count(v) ==
               stable_sets.membership_count(f(v))
               for v in range(len(graph)))


def rare_pair_via_swap(graph, f, stable_sets=None, **opts):
    """Least rare a in X and its image f(a) in Y, both confirmed rare."""
    if graph.number_of_edges() == 0:
        raise ArgumentError('ERROR: the graph formulation needs an edge')
    if not is_swap_automorphism(graph, f):
        raise PreconditionError('ERROR: map is not a swap automorphism')
    if stable_sets is None:
        stable_sets = maximal_stable_sets(graph, **opts)
    rare_x = stable_sets.rare(X_SIDE)
    if not rare_x:
        raise VerificationError(
            'ERROR: no rare vertex in X despite a swap automorphism')
    a = rare_x[0]
    b = f(a)
    if not stable_sets.is_rare(b):
        raise VerificationError(
            'ERROR: image %s of rare %s is not rare' % (graph.label(b),
                                                        graph.label(a)))
    return a, b
