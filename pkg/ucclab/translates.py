#!/usr/bin/env python
"""Provides cyclic translate families, r-suitable indices and anchor shifts.

A translate family over Z_n lists A, A+1, ..., A+(k-1) for a base tuple A,
with (A+i)(j) = A(j) + i mod n. Position 0 of the tuple is the anchor. An
r-suitable index (I, q) selects the members whose anchors are permuted by q.

>>> t = cyclic_translates([1, 2, 4, 0], 7, anchor=1)
>>> t.k, t.member(1)
(7, (2, 3, 5, 1))
>>> s = apply_shift(t, standard_shift_index(7, 3, 1))
>>> s.member(0), s.member(2)
((2, 2, 4, 0), (1, 4, 6, 2))
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
from itertools import combinations, permutations

from ucclab import ArgumentError, PreconditionError, RangeError
from ucclab import ResourceLimitError, SuitabilityError
from ucclab import iter_bits, popcount, to_bitset
from ucclab.family import DEFAULT_CLOSURE_CAP, SetFamily, verify_ucc
from ucclab.graph import BipartiteGraph, graph_satisfies_ucc
from ucclab.graph import incidence_graph, maximal_stable_sets
from ucclab.symmetry import VertexBijection, is_swap_automorphism
from ucclab.util import timeit

logger = logging.getLogger(__name__)

SUITABLE_MAX_N = 8


def _rotate(bitset, shift, n):
    """Bitset of {x + shift mod n : x in bitset}."""
    shift %= n
    full = (1 << n) - 1
    return ((bitset << shift) | (bitset >> (n - shift))) & full


class TranslateFamily(object):
    """The k distinct cyclic translates of a base tuple over Z_n."""

    def __init__(self, n, base, k):
        self.n = n
        self.base = tuple(base)
        self.k = k

    def __repr__(self):
        return 'TranslateFamily(n=%d, base=%s, k=%d)' % (
            self.n, self.base, self.k)

    def __eq__(self, other):
        if not isinstance(other, TranslateFamily):
            return NotImplemented
        return (self.n, self.base, self.k) == (other.n, other.base, other.k)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.n, self.base, self.k))

    @property
    def anchor(self):
        return self.base[0]

    @property
    def copies(self):
        return self.n // self.k

    def member(self, i):
        """Tuple A + i."""
        return tuple((a + i) % self.n for a in self.base)

    def member_set(self, i):
        return to_bitset(self.member(i))

    def to_family(self):
        """Indexed family A, A+1, ..., A+(k-1) over universe Z_n."""
        return SetFamily(self.n, [self.member_set(i) for i in range(self.k)],
                         allow_duplicates=True)


def cyclic_translates(elements, n, anchor=None, offset=0):
    """Translate family of R = elements over Z_n.

    The base tuple is R sorted ascending, rotated so that the anchor (default
    min R) sits at position 0, then translated by offset.
    """
    if n < 1:
        raise ArgumentError('ERROR: modulus must be >= 1, got %d' % n)
    ordered = sorted(set(elements))
    if not ordered:
        raise ArgumentError('ERROR: the translated set must be nonempty')
    for element in ordered:
        if element < 0 or element >= n:
            raise RangeError('ERROR: element %d outside Z_%d' % (element, n))
    if anchor is None:
        anchor = ordered[0]
    if anchor not in ordered:
        raise ArgumentError('ERROR: anchor %d is not an element of %s' %
                            (anchor, ordered))
    position = ordered.index(anchor)
    rotated = ordered[position:] + ordered[:position]
    base = tuple((a + offset) % n for a in rotated)
    base_set = to_bitset(base)
    k = next(t for t in range(1, n + 1) if _rotate(base_set, t, n) == base_set)
    assert n % k == 0, 'ERROR: period %d does not divide %d' % (k, n)
    return TranslateFamily(n, base, k)


def as_translate_family(family, anchor=None):
    """Recognize an indexed family whose member i is member 0 translated by i.

    Returns the TranslateFamily, or None when the family is not of that form.
    """
    n = family.universe_size
    if n < 1 or len(family) == 0 or family.members[0] == 0:
        return None
    first = list(iter_bits(family.members[0]))
    if anchor is not None and anchor not in first:
        return None
    translates = cyclic_translates(first, n, anchor=anchor)
    if translates.k != len(family):
        return None
    for i, member in enumerate(family.members):
        if member != translates.member_set(i):
            return None
    return translates


class SuitableIndex(object):
    """Validated r-suitable index (I, q) over Z_n."""

    def __init__(self, n, index_set, q, r):
        self.n = n
        self.index_set = tuple(sorted(index_set))
        self.q = dict(q)
        self.r = r

    def images(self):
        """q(i) for i in I, in increasing order of i."""
        return tuple(self.q[i] for i in self.index_set)

    def key(self):
        return (self.n, len(self.index_set), self.index_set, self.r,
                self.images())

    def __eq__(self, other):
        if not isinstance(other, SuitableIndex):
            return NotImplemented
        return self.key() == other.key()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return 'SuitableIndex(n=%d, I=%s, q=%s, r=%d)' % (
            self.n, list(self.index_set), list(self.images()), self.r)


def _as_table(index_set, q):
    if isinstance(q, dict):
        return dict((int(k), int(v)) for k, v in q.items())
    images = list(q)
    if len(images) != len(index_set):
        raise ArgumentError('ERROR: q lists %d images for %d indices' %
                            (len(images), len(index_set)))
    return dict(zip(sorted(index_set), images))


def validate_suitable(n, index_set, q, r):
    """Return the SuitableIndex or raise naming the failing condition.

    q is a dict i -> q(i), or the images of the indices in increasing order.
    Condition 1: I = r - I. Condition 2: r - i = q(r - q(i)) for i in I.
    All arithmetic is mod n.
    """
    if n < 1:
        raise ArgumentError('ERROR: modulus must be >= 1, got %d' % n)
    index_set = sorted(set(index_set))
    for i in index_set:
        if i < 0 or i >= n:
            raise RangeError('ERROR: index %d outside Z_%d' % (i, n))
    if r < 0 or r >= n:
        raise RangeError('ERROR: r = %d outside Z_%d' % (r, n))
    table = _as_table(index_set, q)
    if sorted(table) != index_set or sorted(table.values()) != index_set:
        raise ArgumentError('ERROR: q is not a bijection on I = %s' %
                            index_set)
    members = set(index_set)
    for i in index_set:
        if (r - i) % n not in members:
            raise SuitabilityError(
                'ERROR: condition 1 fails: r - %d = %d is not in I = %s' %
                (i, (r - i) % n, index_set), condition=1, witness=i)
    for i in index_set:
        if (r - i) % n != table[(r - table[i]) % n]:
            raise SuitabilityError(
                'ERROR: condition 2 fails at i = %d: r - i = %d but '
                'q(r - q(i)) = %d' %
                (i, (r - i) % n, table[(r - table[i]) % n]),
                condition=2, witness=i)
    return SuitableIndex(n, index_set, table, r)


def enumerate_suitable(n, max_l):
    """Every r-suitable (I, q, r) over Z_n with |I| <= max_l.

    Ordered by |I|, then I, then r, then the images of q.
    """
    if n < 1 or max_l < 0:
        raise ArgumentError('ERROR: need n >= 1 and max_l >= 0')
    if n > SUITABLE_MAX_N or max_l > n:
        raise ResourceLimitError(
            'ERROR: enumeration limited to n <= %d and max_l <= n' %
            SUITABLE_MAX_N, cap_name='suitable_max_n', cap=SUITABLE_MAX_N)
    found = []
    for size in range(max_l + 1):
        for index_set in combinations(range(n), size):
            members = set(index_set)
            for r in range(n):
                # reflection i -> r - i must stay inside I
                reflect = dict((i, (r - i) % n) for i in index_set)
                if any(reflect[i] not in members for i in index_set):
                    continue
                for images in permutations(index_set):
                    q = dict(zip(index_set, images))
                    if all(q[reflect[q[i]]] == reflect[i] for i in index_set):
                        found.append(SuitableIndex(n, index_set, q, r))
    logger.debug('Z_%d, |I| <= %d: %d suitable indices' %
                 (n, max_l, len(found)))
    return found


def standard_shift_index(n, l, m):
    """I = {0..l-1}, q(i) = (i + m) mod l, r = l - 1."""
    if l < 1 or l > n:
        raise ArgumentError('ERROR: need 1 <= l <= n, got l = %d, n = %d' %
                            (l, n))
    if m < 0 or m >= n:
        raise ArgumentError('ERROR: need 0 <= m < n, got m = %d, n = %d' %
                            (m, n))
    index_set = list(range(l))
    q = dict((i, (i + m) % l) for i in index_set)
    return validate_suitable(n, index_set, q, l - 1)


class ShiftedFamily(object):
    """P_{I,q} applied to a translate family with k = n.

    Member i keeps the tuple A + i, except that for i in I its anchor is
    replaced by the anchor of A + q(i).
    """

    def __init__(self, source, index):
        self.source = source
        self.index = index
        n = source.n
        tuples = []
        for i in range(n):
            member = source.member(i)
            if i in index.q:
                member = (source.member(index.q[i])[0],) + member[1:]
            tuples.append(member)
        self.tuples = tuple(tuples)
        self.members = tuple(to_bitset(t) for t in self.tuples)
        assert self.to_family().universe() == (1 << n) - 1, \
            'ERROR: shifted family does not cover Z_%d' % n

    @property
    def n(self):
        return self.source.n

    def member(self, i):
        return self.tuples[i]

    def to_family(self):
        """Indexed family of the member sets (repeated tuple elements collapse)."""
        return SetFamily(self.n, self.members, allow_duplicates=True)

    def cardinalities(self):
        return [popcount(member) for member in self.members]

    def collisions(self):
        """Pairs (i, j), i < j, of indexed members equal as sets."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.members[i] == self.members[j]]


def apply_shift(translates, index):
    """ShiftedFamily of a translate family with n members."""
    if index.n != translates.n:
        raise ArgumentError('ERROR: index is over Z_%d, family over Z_%d' %
                            (index.n, translates.n))
    if translates.k != translates.n:
        raise PreconditionError(
            'ERROR: the shift needs n = %d distinct translates, family has %d'
            % (translates.n, translates.k))
    return ShiftedFamily(translates, index)


def thm_automorphism(shifted, graph=None):
    """Swap map on the incidence graph of a shifted family.

    Member i -> element r + A(1) - i; element a -> member r + A(1) - a.
    """
    if graph is None:
        graph = incidence_graph(shifted.to_family())
    n = shifted.n
    pivot = shifted.index.r + shifted.source.anchor
    table = [n + (pivot - a) % n for a in range(n)] + \
        [(pivot - i) % n for i in range(n)]
    return VertexBijection(graph, table)


def augmented_incidence_graph(translates):
    """Incidence graph with n/k copies (A+i)_c of every translate."""
    n, k, copies = translates.n, translates.k, translates.copies
    x_labels = [str(x) for x in range(n)]
    y_labels = []
    neighborhoods = []
    for i in range(k):
        for c in range(1, copies + 1):
            y_labels.append('A+%d_%d' % (i, c))
            neighborhoods.append(translates.member_set(i))
    return BipartiteGraph.from_y_neighborhoods(x_labels, y_labels,
                                               neighborhoods)


def prop4_automorphism(translates, graph=None):
    """Swap map on the copy-augmented incidence graph.

    (A+i)_c -> element c*k - i; element a -> (A + (k - a mod k) mod k) with
    copy floor(a / k) + 1.
    """
    if graph is None:
        graph = augmented_incidence_graph(translates)
    n, k, copies = translates.n, translates.k, translates.copies

    def y_index(i, c):
        return n + i * copies + (c - 1)
    table = [0] * (2 * n)
    for a in range(n):
        table[a] = y_index((k - a % k) % k, a // k + 1)
    for i in range(k):
        for c in range(1, copies + 1):
            table[y_index(i, c)] = (c * k - i) % n
    return VertexBijection(graph, table)


class Section3Report(object):
    """Explicit automorphism, graph formulation and closure check together."""

    def __init__(self, kind, automorphism_ok, graph_ucc, family_ucc,
                 cardinalities, collisions=()):
        self.kind = kind
        self.automorphism_ok = automorphism_ok
        self.graph_ucc = graph_ucc
        self.family_ucc = family_ucc
        self.cardinalities = sorted(cardinalities)
        self.collisions = list(collisions)

    @property
    def passed(self):
        return (self.automorphism_ok and self.graph_ucc.holds and
                self.family_ucc.holds)

    def to_dict(self):
        return {'kind': self.kind,
                'automorphism': self.automorphism_ok,
                'graph_ucc': self.graph_ucc.holds,
                'family_ucc': self.family_ucc.holds,
                'abundant': self.family_ucc.abundant,
                'closure_size': self.family_ucc.closure_size,
                'cardinalities': self.cardinalities,
                'collisions': [list(pair) for pair in self.collisions],
                'passed': self.passed}


@timeit
def verify_section3(construction, closure_cap=DEFAULT_CLOSURE_CAP, **opts):
    """Run all three checks on a TranslateFamily or a ShiftedFamily."""
    if isinstance(construction, ShiftedFamily):
        family = construction.to_family()
        graph = incidence_graph(family)
        f = thm_automorphism(construction, graph)
        kind, collisions = 'shift', construction.collisions()
    elif isinstance(construction, TranslateFamily):
        family = construction.to_family()
        graph = augmented_incidence_graph(construction)
        f = prop4_automorphism(construction, graph)
        kind, collisions = 'translates', []
    else:
        raise ArgumentError('ERROR: expected a translate or shifted family, '
                            'got %r' % (construction,))
    automorphism_ok = is_swap_automorphism(graph, f)
    stable_sets = maximal_stable_sets(graph, **opts)
    graph_ucc = graph_satisfies_ucc(graph, stable_sets=stable_sets)
    family_ucc = verify_ucc(family, cap=closure_cap)
    report = Section3Report(kind, automorphism_ok, graph_ucc, family_ucc,
                            [popcount(m) for m in family.members], collisions)
    if collisions:
        logger.info('%r: members %s coincide as sets' %
                    (construction, collisions))
    logger.debug('%s check of %r: passed=%s' % (kind, construction,
                                                report.passed))
    return report
