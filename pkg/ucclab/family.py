#!/usr/bin/env python
"""Provides set families, union closure and abundance checks.

Members are stored as integer bitsets over the universe {0, ..., u-1}.

>>> family = make_family([[1], [2]], 3)
>>> closure = union_closure(family)
>>> closure.sets()
[[], [1], [2], [1, 2]]
>>> abundant_elements(closure)
[1, 2]
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging

import numpy as np

from ucclab import ArgumentError, RangeError, ResourceLimitError
from ucclab import iter_bits, to_bitset
from ucclab.util import timeit

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 2 ** 22
MAX_UNIVERSE = 128

_WORD = 64
_WORD_MASK = (1 << _WORD) - 1


class SetFamily(object):
    """Finite family of subsets of {0, ..., universe_size - 1}.

    Parameters
    ----------
    universe_size : int
        Size u of the universe, 0 <= u <= MAX_UNIVERSE.

    members : iterable of int
        Member bitsets.

    allow_duplicates : bool (default False)
        If True the family is indexed: insertion order and repeated members
        are kept. If False duplicates collapse and members are sorted by
        bitset value.
    """

    def __init__(self, universe_size, members=(), allow_duplicates=False):
        if universe_size < 0:
            raise ArgumentError(
                'ERROR: universe size must be >= 0, got %d' % universe_size)
        if universe_size > MAX_UNIVERSE:
            raise ArgumentError(
                'ERROR: universe size %d exceeds the supported maximum %d' %
                (universe_size, MAX_UNIVERSE))
        full = (1 << universe_size) - 1
        members = list(members)
        for member in members:
            if member < 0 or member & ~full:
                raise RangeError(
                    'ERROR: member %s has elements outside universe of size %d'
                    % (sorted(iter_bits(member)), universe_size))
        if not allow_duplicates:
            members = sorted(set(members))
        self.universe_size = universe_size
        self.members = tuple(members)
        self.allow_duplicates = allow_duplicates

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return (self.universe_size == other.universe_size and
                self.members == other.members and
                self.allow_duplicates == other.allow_duplicates)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.universe_size, self.members, self.allow_duplicates))

    def __repr__(self):
        return 'SetFamily(universe_size=%d, sets=%s, allow_duplicates=%s)' % (
            self.universe_size, self.sets(), self.allow_duplicates)

    def sets(self):
        """Members as ascending element lists, in member order."""
        return [list(iter_bits(member)) for member in self.members]

    def universe(self):
        """Bitset of U(F), the elements occurring in some member."""
        union = 0
        for member in self.members:
            union |= member
        return union


def make_family(sets, universe_size, allow_duplicates=False):
    """Build a family from element lists.

    Repeated elements inside one list collapse, so [2, 2, 4, 0] is {0, 2, 4}.
    """
    if universe_size < 0:
        raise ArgumentError(
            'ERROR: universe size must be >= 0, got %d' % universe_size)
    members = []
    for elements in sets:
        for element in elements:
            if element < 0 or element >= universe_size:
                raise RangeError(
                    'ERROR: element %d outside universe {0..%d}' %
                    (element, universe_size - 1))
        members.append(to_bitset(elements))
    return SetFamily(universe_size, members, allow_duplicates=allow_duplicates)


def union_closure(family, cap=DEFAULT_CLOSURE_CAP):
    """Return <F>, all unions of subcollections of F, including the empty set.

    Each distinct generator is unioned with every set known so far; the known
    sets stay union closed after every generator, so a generator already known
    adds nothing.
    """
    known = set([0])
    generators = sorted(set(family.members))
    for generator in generators:
        if generator in known:
            continue
        new_sets = set()
        for member in list(known):
            union = member | generator
            if union not in known and union not in new_sets:
                new_sets.add(union)
                if len(known) + len(new_sets) > cap:
                    raise ResourceLimitError(
                        'ERROR: union closure exceeds the cap of %d sets' % cap,
                        cap_name='closure_cap', cap=cap)
        known |= new_sets
    logger.debug('closure of %d generators has %d sets' %
                 (len(generators), len(known)))
    return SetFamily(family.universe_size, known)


def element_frequencies(family):
    """Vector of per-element member counts, indexed by element."""
    size = family.universe_size
    counts = np.zeros(size, dtype=np.int64)
    if size == 0 or len(family) == 0:
        return counts
    for word in range((size + _WORD - 1) // _WORD):
        shift = word * _WORD
        column = np.array([(member >> shift) & _WORD_MASK
                           for member in family.members], dtype=np.uint64)
        for bit in range(min(_WORD, size - shift)):
            hits = (column >> np.uint64(bit)) & np.uint64(1)
            counts[shift + bit] = int(hits.sum())
    return counts


def element_frequency(family, x):
    """Number of members of the family containing x."""
    if x < 0 or x >= family.universe_size:
        raise RangeError('ERROR: element %d outside universe {0..%d}' %
                         (x, family.universe_size - 1))
    return sum(1 for member in family.members if (member >> x) & 1)


def abundant_elements(family):
    """Elements x with 2 * frequency(x) >= |F|, in increasing order."""
    counts = element_frequencies(family)
    size = len(family)
    return [x for x in range(family.universe_size) if 2 * counts[x] >= size]


def is_union_closed(family):
    """True iff the union of any two members is a member."""
    members = set(family.members)
    ordered = sorted(members)
    for i, first in enumerate(ordered):
        for second in ordered[i + 1:]:
            if first | second not in members:
                return False
    return True


class UCCReport(object):
    """Outcome of the union-closed check on <F>."""

    def __init__(self, closure, frequencies, abundant):
        self.closure = closure
        self.frequencies = [int(count) for count in frequencies]
        self.abundant = list(abundant)
        self.vacuous = closure.members == (0,)
        self.holds = self.vacuous or len(self.abundant) > 0

    @property
    def closure_size(self):
        return len(self.closure)

    def to_dict(self):
        return {'closure_size': self.closure_size,
                'universe_size': self.closure.universe_size,
                'frequencies': self.frequencies,
                'abundant': self.abundant,
                'holds': self.holds,
                'vacuous': self.vacuous}


@timeit
def verify_ucc(family, cap=DEFAULT_CLOSURE_CAP):
    """Check that <F> is {empty set} or has an abundant element."""
    closure = union_closure(family, cap=cap)
    frequencies = element_frequencies(closure)
    abundant = [x for x in range(closure.universe_size)
                if 2 * frequencies[x] >= len(closure)]
    report = UCCReport(closure, frequencies, abundant)
    logger.debug('ucc check: closure=%d abundant=%s holds=%s' %
                 (report.closure_size, report.abundant, report.holds))
    return report
