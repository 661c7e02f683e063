#!/usr/bin/env python
"""Provides bipartite graphs, maximal stable sets and rare vertices.

Vertices are indexed 0..V-1 with class X first (0..|X|-1) and class Y after
it. Neighborhoods are integer bitsets over vertex indices.

>>> g = BipartiteGraph(['a', 'c'], ['b', 'd'],
...                    [('a', 'b'), ('c', 'b'), ('c', 'd')])
>>> [[g.label(v) for v in s] for s in maximal_stable_sets(g).vertex_lists()]
[['a', 'c'], ['a', 'd'], ['b', 'd']]
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
from collections import namedtuple

import networkx as nx
import numpy as np
from sklearn.base import BaseEstimator

from ucclab import ArgumentError, RangeError, ResourceLimitError
from ucclab import iter_bits, popcount
from ucclab.family import DEFAULT_CLOSURE_CAP, SetFamily
from ucclab.family import element_frequencies, union_closure
from ucclab.util import pmap, serialize_dict, timeit

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 40
DEFAULT_SET_CAP = 10 ** 6
BRUTE_FORCE_VERTEX_CAP = 20

X_SIDE = 'x'
Y_SIDE = 'y'


class BipartiteGraph(object):
    """Bipartite graph with labeled classes X and Y.

    Parameters
    ----------
    x_labels : list
        Labels of the X vertices, in index order.

    y_labels : list
        Labels of the Y vertices, in index order.

    edges : iterable of (label, label)
        Edges, each joining an X vertex and a Y vertex (either order).

    Labels are stored as strings and must be unique across both classes.
    """

    def __init__(self, x_labels, y_labels, edges=()):
        labels = [str(label) for label in x_labels] + \
            [str(label) for label in y_labels]
        self._init_vertices(labels, len(x_labels))
        adjacency = [0] * len(labels)
        for first, second in edges:
            u = self.index(first)
            v = self.index(second)
            if self.side(u) == self.side(v):
                raise ArgumentError(
                    'ERROR: edge %s-%s joins two vertices of class %s' %
                    (first, second, self.side(u)))
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        self.adjacency = tuple(adjacency)

    def _init_vertices(self, labels, n_x):
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise ArgumentError('ERROR: duplicate vertex label %s' % label)
            index[label] = i
        self.labels = tuple(labels)
        self.n_x = n_x
        self.n_y = len(labels) - n_x
        self._index = index
        self.x_mask = (1 << n_x) - 1
        self.y_mask = ((1 << len(labels)) - 1) ^ self.x_mask

    @classmethod
    def from_y_neighborhoods(cls, x_labels, y_labels, neighborhoods):
        """Build from one bitset over X indices per Y vertex."""
        graph = cls.__new__(cls)
        labels = [str(label) for label in x_labels] + \
            [str(label) for label in y_labels]
        graph._init_vertices(labels, len(x_labels))
        if len(neighborhoods) != graph.n_y:
            raise ArgumentError('ERROR: expected %d neighborhoods, got %d' %
                                (graph.n_y, len(neighborhoods)))
        adjacency = [0] * len(labels)
        for j, neighborhood in enumerate(neighborhoods):
            if neighborhood & ~graph.x_mask:
                raise RangeError('ERROR: neighborhood of %s leaves class X' %
                                 graph.labels[graph.n_x + j])
            y = graph.n_x + j
            adjacency[y] = neighborhood
            for x in iter_bits(neighborhood):
                adjacency[x] |= 1 << y
        graph.adjacency = tuple(adjacency)
        return graph

    @classmethod
    def from_networkx(cls, graph, x_nodes, label=str):
        """Build from a networkx graph given the nodes of class X."""
        x_nodes = sorted(x_nodes)
        x_set = set(x_nodes)
        y_nodes = sorted(u for u in graph.nodes() if u not in x_set)
        edges = [(label(u), label(v)) for u, v in graph.edges()]
        return cls([label(u) for u in x_nodes],
                   [label(u) for u in y_nodes], edges)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.labels == other.labels and self.n_x == other.n_x and
                self.adjacency == other.adjacency)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.labels, self.n_x, self.adjacency))

    def __repr__(self):
        return 'BipartiteGraph(|X|=%d, |Y|=%d, edges=%d)' % (
            self.n_x, self.n_y, self.number_of_edges())

    @property
    def x_vertices(self):
        return range(self.n_x)

    @property
    def y_vertices(self):
        return range(self.n_x, len(self.labels))

    def index(self, label):
        """Vertex index of a label."""
        try:
            return self._index[str(label)]
        except KeyError:
            raise RangeError('ERROR: unknown vertex label %s' % label)

    def label(self, vertex):
        return self.labels[vertex]

    def side(self, vertex):
        if vertex < 0 or vertex >= len(self.labels):
            raise RangeError('ERROR: vertex %d out of range' % vertex)
        return X_SIDE if vertex < self.n_x else Y_SIDE

    def degree(self, vertex):
        return popcount(self.adjacency[vertex])

    def neighbors(self, vertex):
        return list(iter_bits(self.adjacency[vertex]))

    def has_edge(self, u, v):
        return bool((self.adjacency[u] >> v) & 1)

    def number_of_edges(self):
        return sum(popcount(self.adjacency[x]) for x in self.x_vertices)

    def edges(self):
        """Edges as (x, y) index pairs, sorted."""
        return [(x, y) for x in self.x_vertices
                for y in iter_bits(self.adjacency[x])]

    def min_degree(self):
        if len(self.labels) == 0:
            return 0
        return min(self.degree(v) for v in range(len(self.labels)))

    def to_networkx(self):
        """Labeled networkx graph with the 'bipartite' node attribute."""
        graph = nx.Graph()
        for v, label in enumerate(self.labels):
            graph.add_node(label, bipartite=0 if v < self.n_x else 1)
        graph.add_edges_from((self.labels[x], self.labels[y])
                             for x, y in self.edges())
        return graph


def incidence_graph(family):
    """Incidence graph: X = universe elements, Y = one vertex per member.

    Indexed duplicate members give distinct Y vertices with identical
    neighborhoods.
    """
    x_labels = [str(x) for x in range(family.universe_size)]
    y_labels = ['S%d' % i for i in range(len(family))]
    return BipartiteGraph.from_y_neighborhoods(x_labels, y_labels,
                                               list(family.members))


def incidence_family(graph, side=X_SIDE):
    """Indexed family of neighborhoods read off the opposite class.

    For side X: {N(y) : y in Y} over universe X (indices 0..|X|-1).
    For side Y: {N(x) : x in X} over universe Y (indices 0..|Y|-1).
    """
    if side == X_SIDE:
        members = [graph.adjacency[y] & graph.x_mask
                   for y in graph.y_vertices]
        return SetFamily(graph.n_x, members, allow_duplicates=True)
    if side == Y_SIDE:
        members = [graph.adjacency[x] >> graph.n_x for x in graph.x_vertices]
        return SetFamily(graph.n_y, members, allow_duplicates=True)
    raise ArgumentError('ERROR: side must be "x" or "y", got %s' % side)


def _canonical_key(bitset):
    return tuple(iter_bits(bitset))


class StableSetCollection(object):
    """All maximal stable sets of a graph with per-vertex membership counts."""

    def __init__(self, graph, sets):
        self.graph = graph
        self.sets = tuple(sorted(sets, key=_canonical_key))
        counts = np.zeros(len(graph), dtype=np.int64)
        for stable_set in self.sets:
            for v in iter_bits(stable_set):
                counts[v] += 1
        self.counts = counts

    def __len__(self):
        return len(self.sets)

    def vertex_lists(self):
        return [list(iter_bits(stable_set)) for stable_set in self.sets]

    def membership_count(self, vertex):
        return int(self.counts[vertex])

    def is_rare(self, vertex):
        """At most half: 2 * count <= total."""
        return 2 * self.membership_count(vertex) <= len(self.sets)

    def rare(self, side):
        vertices = self.graph.x_vertices if side == X_SIDE \
            else self.graph.y_vertices
        return [v for v in vertices if self.is_rare(v)]

    def verify(self):
        """Check every stored set is stable and maximal and the counts agree."""
        adjacency = self.graph.adjacency
        for stable_set in self.sets:
            for v in range(len(self.graph)):
                inside = (stable_set >> v) & 1
                if inside and adjacency[v] & stable_set:
                    return False
                if not inside and not adjacency[v] & stable_set:
                    return False
        recount = StableSetCollection(self.graph, self.sets).counts
        return bool(np.array_equal(recount, self.counts)) and \
            len(set(self.sets)) == len(self.sets)


def _non_adjacency(graph):
    full = (1 << len(graph)) - 1
    return tuple(full & ~graph.adjacency[v] & ~(1 << v)
                 for v in range(len(graph)))


def _pivot(candidates, excluded, non_adjacency):
    best, pivot = -1, None
    for u in iter_bits(candidates | excluded):
        score = popcount(candidates & non_adjacency[u])
        if score > best:
            best, pivot = score, u
    return pivot


def _expand(current, candidates, excluded, non_adjacency, set_cap, out):
    # maximal cliques of the complement are the maximal stable sets
    if not candidates and not excluded:
        out.append(current)
        if len(out) > set_cap:
            raise ResourceLimitError(
                'ERROR: more than %d maximal stable sets' % set_cap,
                cap_name='set_cap', cap=set_cap)
        return
    pivot = _pivot(candidates, excluded, non_adjacency)
    for v in iter_bits(candidates & ~non_adjacency[pivot]):
        bit = 1 << v
        _expand(current | bit,
                candidates & non_adjacency[v],
                excluded & non_adjacency[v],
                non_adjacency, set_cap, out)
        candidates &= ~bit
        excluded |= bit


def _enumerate_branch(args):
    current, candidates, excluded, non_adjacency, set_cap = args
    out = []
    _expand(current, candidates, excluded, non_adjacency, set_cap, out)
    return out


def _root_branches(graph, non_adjacency, set_cap):
    candidates = (1 << len(graph)) - 1
    excluded = 0
    if not candidates:
        return [(0, 0, 0, non_adjacency, set_cap)]
    pivot = _pivot(candidates, excluded, non_adjacency)
    branches = []
    for v in iter_bits(candidates & ~non_adjacency[pivot]):
        bit = 1 << v
        branches.append((bit, candidates & non_adjacency[v],
                         excluded & non_adjacency[v], non_adjacency, set_cap))
        candidates &= ~bit
        excluded |= bit
    return branches


class MaximalStableSetEnumerator(BaseEstimator):
    """Enumerate maximal stable sets by pivoting Bron-Kerbosch on bitsets.

    Parameters
    ----------
    vertex_cap : int (default 40)
        Largest vertex count accepted.

    set_cap : int (default 1000000)
        Largest number of maximal stable sets produced before giving up.

    n_jobs : int (default 1)
        Number of workers the top-level branches are spread over; the
        result is canonically sorted so it does not depend on n_jobs.
    """

    def __init__(self, vertex_cap=DEFAULT_VERTEX_CAP, set_cap=DEFAULT_SET_CAP,
                 n_jobs=1):
        self.vertex_cap = vertex_cap
        self.set_cap = set_cap
        self.n_jobs = n_jobs

    def __repr__(self):
        return serialize_dict(self.get_params(), offset='large')

    @timeit
    def transform(self, graph):
        """Return the StableSetCollection of the graph."""
        if len(graph) > self.vertex_cap:
            raise ResourceLimitError(
                'ERROR: graph has %d vertices, above the cap of %d' %
                (len(graph), self.vertex_cap),
                cap_name='vertex_cap', cap=self.vertex_cap)
        non_adjacency = _non_adjacency(graph)
        if self.n_jobs == 1:
            sets = _enumerate_branch(
                (0, (1 << len(graph)) - 1, 0, non_adjacency, self.set_cap))
        else:
            branches = _root_branches(graph, non_adjacency, self.set_cap)
            sets = [s for part in pmap(_enumerate_branch, branches,
                                       n_jobs=self.n_jobs) for s in part]
            if len(sets) > self.set_cap:
                raise ResourceLimitError(
                    'ERROR: more than %d maximal stable sets' % self.set_cap,
                    cap_name='set_cap', cap=self.set_cap)
        logger.debug('%r: %d maximal stable sets' % (graph, len(sets)))
        return StableSetCollection(graph, sets)


def maximal_stable_sets(graph, **opts):
    """Return every maximal stable set of the graph, canonically ordered."""
    return MaximalStableSetEnumerator(**opts).transform(graph)


def brute_force_maximal_stable_sets(graph):
    """Oracle: scan all 2^V vertex subsets."""
    size = len(graph)
    if size > BRUTE_FORCE_VERTEX_CAP:
        raise ResourceLimitError(
            'ERROR: brute force limited to %d vertices, got %d' %
            (BRUTE_FORCE_VERTEX_CAP, size),
            cap_name='brute_force_vertex_cap', cap=BRUTE_FORCE_VERTEX_CAP)
    adjacency = graph.adjacency
    sets = []
    for subset in range(1 << size):
        stable = all(not adjacency[v] & subset for v in iter_bits(subset))
        if not stable:
            continue
        outside = ((1 << size) - 1) & ~subset
        if all(adjacency[v] & subset for v in iter_bits(outside)):
            sets.append(subset)
    return StableSetCollection(graph, sets)


RareVertices = namedtuple('RareVertices', ['x', 'y'])

UCCWitness = namedtuple('UCCWitness', ['holds', 'x_witness', 'y_witness'])


def rare_vertices(graph, stable_sets=None, **opts):
    """Rare vertices of each class: 2 * membership count <= total."""
    if len(graph) == 0:
        raise ArgumentError('ERROR: graph has no vertices')
    if stable_sets is None:
        stable_sets = maximal_stable_sets(graph, **opts)
    return RareVertices(stable_sets.rare(X_SIDE), stable_sets.rare(Y_SIDE))


def graph_satisfies_ucc(graph, stable_sets=None, **opts):
    """True with the least rare vertex of each class iff both classes have one."""
    if graph.number_of_edges() == 0:
        raise ArgumentError('ERROR: the graph formulation needs an edge')
    rare = rare_vertices(graph, stable_sets=stable_sets, **opts)
    x_witness = rare.x[0] if rare.x else None
    y_witness = rare.y[0] if rare.y else None
    holds = x_witness is not None and y_witness is not None
    return UCCWitness(holds, x_witness, y_witness)


def edge_rarity_violations(graph, stable_sets=None, **opts):
    """Edges (x, y) with neither endpoint rare."""
    if stable_sets is None:
        stable_sets = maximal_stable_sets(graph, **opts)
    return [(x, y) for x, y in graph.edges()
            if not stable_sets.is_rare(x) and not stable_sets.is_rare(y)]


class Prop1Report(object):
    """Rarity of x in G against abundance of x in <F^X>."""

    def __init__(self, vertex, label, rare, abundant, count, total,
                 frequency, closure_size):
        self.vertex = vertex
        self.label = label
        self.rare = rare
        self.abundant = abundant
        self.count = count
        self.total = total
        self.frequency = frequency
        self.closure_size = closure_size
        self.agrees = rare == abundant

    def to_dict(self):
        return {'vertex': self.label, 'rare': self.rare,
                'abundant': self.abundant, 'agrees': self.agrees,
                'membership_count': self.count, 'stable_sets': self.total,
                'frequency': self.frequency,
                'closure_size': self.closure_size}


def _require_positive_degree(graph):
    for v in range(len(graph)):
        if graph.degree(v) == 0:
            raise ArgumentError(
                'ERROR: vertex %s is isolated; the rare/abundant '
                'correspondence is checked on graphs of minimum degree 1' %
                graph.label(v))


def check_prop1_all(graph, closure_cap=DEFAULT_CLOSURE_CAP, **opts):
    """Prop1Report for every x in X, sharing one enumeration and closure."""
    _require_positive_degree(graph)
    stable_sets = maximal_stable_sets(graph, **opts)
    closure = union_closure(incidence_family(graph, X_SIDE), cap=closure_cap)
    frequencies = element_frequencies(closure)
    reports = []
    for x in graph.x_vertices:
        count = stable_sets.membership_count(x)
        frequency = int(frequencies[x])
        reports.append(Prop1Report(
            x, graph.label(x),
            rare=stable_sets.is_rare(x),
            abundant=2 * frequency >= len(closure),
            count=count, total=len(stable_sets),
            frequency=frequency, closure_size=len(closure)))
    return reports


def check_prop1(graph, x, closure_cap=DEFAULT_CLOSURE_CAP, **opts):
    """Compare rarity of x (an X vertex index) with its abundance in <F^X>."""
    if graph.side(x) != X_SIDE:
        raise ArgumentError('ERROR: vertex %s is not in class X' %
                            graph.label(x))
    return check_prop1_all(graph, closure_cap=closure_cap, **opts)[x]

