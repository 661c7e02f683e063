#!/usr/bin/env python
"""Provides labeled bipartite grid, cylinder, torus and related graphs.

Product graphs label vertices "(i,j)"; class X holds the vertices with even
coordinate sum.

>>> g = generate(GridSpec('cylinder', m=4, n=2))
>>> len(g), g.number_of_edges()
(8, 12)
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging

import networkx as nx

from ucclab import ArgumentError
from ucclab.graph import BipartiteGraph, maximal_stable_sets
from ucclab.symmetry import VertexBijection

logger = logging.getLogger(__name__)

KINDS = ('grid', 'cylinder', 'torus', 'hypercube', 'crown', 'moebius')
PRODUCT_KINDS = ('grid', 'cylinder', 'torus')


class GridSpec(object):
    """Kind and parameters of a generated graph.

    Parameters
    ----------
    kind : string
        One of grid, cylinder, torus, hypercube, crown, moebius.

    m, n : int
        Sizes of the two factors for grid (P_m x P_n), cylinder (C_m x P_n)
        and torus (C_m x C_n); n alone for crown and moebius (vertex count of
        the ladder).

    d : int
        Dimension of the hypercube.
    """

    def __init__(self, kind, m=None, n=None, d=None):
        if kind not in KINDS:
            raise ArgumentError('ERROR: unknown graph kind %s, expected one '
                                'of %s' % (kind, ', '.join(KINDS)))
        self.kind = kind
        self.m = m
        self.n = n
        self.d = d
        self.validate()

    def __repr__(self):
        if self.kind in PRODUCT_KINDS:
            return '%s(%d,%d)' % (self.kind, self.m, self.n)
        if self.kind == 'hypercube':
            return 'hypercube(%d)' % self.d
        return '%s(%d)' % (self.kind, self.n)

    def _require(self, name, minimum):
        value = getattr(self, name)
        if value is None or value < minimum:
            raise ArgumentError('ERROR: %s needs %s >= %d, got %s' %
                                (self.kind, name, minimum, value))

    def validate(self):
        """Check the parameters and refuse non-bipartite instances."""
        if self.kind == 'grid':
            self._require('m', 1)
            self._require('n', 1)
        elif self.kind == 'cylinder':
            self._require('m', 3)
            self._require('n', 1)
            if self.m % 2:
                raise ArgumentError(
                    'ERROR: cylinder C_%d x P_%d is not bipartite: the cycle '
                    'length m must be even' % (self.m, self.n))
        elif self.kind == 'torus':
            self._require('m', 3)
            self._require('n', 3)
            if self.m % 2 or self.n % 2:
                raise ArgumentError(
                    'ERROR: torus C_%d x C_%d is not bipartite: both m and n '
                    'must be even' % (self.m, self.n))
        elif self.kind == 'hypercube':
            self._require('d', 1)
        elif self.kind == 'crown':
            self._require('n', 2)
        elif self.kind == 'moebius':
            self._require('n', 6)
            if self.n % 2 or (self.n // 2) % 2 == 0:
                raise ArgumentError(
                    'ERROR: Moebius ladder on %s vertices is not bipartite: '
                    'n must be even with n/2 odd' % self.n)
        return self


def _pair_label(node):
    return '(%d,%d)' % node


def _product_graph(spec):
    periodic = {'grid': (False, False),
                'cylinder': (True, False),
                'torus': (True, True)}[spec.kind]
    graph = nx.grid_2d_graph(spec.m, spec.n, periodic=periodic)
    x_nodes = [u for u in graph.nodes() if (u[0] + u[1]) % 2 == 0]
    return BipartiteGraph.from_networkx(graph, x_nodes, label=_pair_label)


def _bits(node):
    # hypercube_graph(1) has plain integer nodes
    return node if isinstance(node, tuple) else (node,)


def _hypercube_graph(spec):
    graph = nx.hypercube_graph(spec.d)
    x_nodes = [u for u in graph.nodes() if sum(_bits(u)) % 2 == 0]
    return BipartiteGraph.from_networkx(
        graph, x_nodes, label=lambda u: ''.join(str(b) for b in _bits(u)))


def _crown_graph(spec):
    n = spec.n
    graph = nx.complete_bipartite_graph(n, n)
    graph.remove_edges_from((i, n + i) for i in range(n))

    def label(u):
        return 'u%d' % u if u < n else 'v%d' % (u - n)
    return BipartiteGraph.from_networkx(graph, range(n), label=label)


def _moebius_graph(spec):
    n = spec.n
    graph = nx.cycle_graph(n)
    graph.add_edges_from((i, i + n // 2) for i in range(n // 2))
    x_nodes = [u for u in graph.nodes() if u % 2 == 0]
    return BipartiteGraph.from_networkx(graph, x_nodes, label=str)


def generate(spec):
    """Labeled bipartite graph of the given spec."""
    spec.validate()
    if spec.kind in PRODUCT_KINDS:
        graph = _product_graph(spec)
    elif spec.kind == 'hypercube':
        graph = _hypercube_graph(spec)
    elif spec.kind == 'crown':
        graph = _crown_graph(spec)
    else:
        graph = _moebius_graph(spec)
    assert nx.is_bipartite(graph.to_networkx()), \
        'ERROR: generated %r is not bipartite' % spec
    logger.debug('generated %r: %r' % (spec, graph))
    return graph


def canonical_swap_map(spec, graph=None):
    """Row shift for cylinders and tori, axis reflection for grids.

    Cylinder and torus: (i, j) -> ((i + 1) mod m, j).
    Grid: (i, j) -> (m - 1 - i, j) when m is even, else (i, n - 1 - j).
    """
    spec.validate()
    m, n = spec.m, spec.n
    if spec.kind in ('cylinder', 'torus'):
        def move(i, j):
            return (i + 1) % m, j
    elif spec.kind == 'grid':
        if m % 2 == 0:
            def move(i, j):
                return m - 1 - i, j
        elif n % 2 == 0:
            def move(i, j):
                return i, n - 1 - j
        else:
            raise ArgumentError(
                'ERROR: grid P_%d x P_%d has no reflection swapping the '
                'classes: one side must be even' % (m, n))
    else:
        raise ArgumentError(
            'ERROR: no canonical swap map for %s; use the automorphism search'
            % spec.kind)
    if graph is None:
        graph = generate(spec)
    mapping = dict((_pair_label((i, j)), _pair_label(move(i, j)))
                   for i in range(m) for j in range(n))
    return VertexBijection.from_labels(graph, mapping)


class DegreeTwoReport(object):
    """Neighbors of degree-2 vertices and which of them are not rare."""

    def __init__(self, degree_two, checked, violations):
        self.degree_two = degree_two
        self.checked = checked
        self.violations = violations

    @property
    def vacuous(self):
        return not self.degree_two

    @property
    def holds(self):
        return not self.violations

    def to_dict(self, graph):
        return {'degree_two': [graph.label(v) for v in self.degree_two],
                'checked_neighbors': [graph.label(v) for v in self.checked],
                'violations': [graph.label(v) for v in self.violations],
                'vacuous': self.vacuous, 'holds': self.holds}


def degree_two_neighbor_rare_check(graph, stable_sets=None, **opts):
    """Check that every neighbor of a degree-2 vertex is rare."""
    degree_two = [v for v in range(len(graph)) if graph.degree(v) == 2]
    if not degree_two:
        return DegreeTwoReport([], [], [])
    if stable_sets is None:
        stable_sets = maximal_stable_sets(graph, **opts)
    checked = sorted(set(u for v in degree_two for u in graph.neighbors(v)))
    violations = [u for u in checked if not stable_sets.is_rare(u)]
    return DegreeTwoReport(degree_two, checked, violations)
