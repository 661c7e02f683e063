#!/usr/bin/env python
"""Provides the error hierarchy and bitset helpers shared by all modules."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

__author__ = "ucclab developers"
__copyright__ = "Copyright 2026, ucclab developers"
__license__ = "MIT"
__version__ = "v0.1.0"
__status__ = "Development"


class UCCLabError(Exception):
    """Base class of every error raised by ucclab."""


class ArgumentError(UCCLabError, ValueError):
    """Malformed argument."""


class RangeError(ArgumentError):
    """Element, vertex or index outside its range."""


class PreconditionError(ArgumentError):
    """A documented precondition of an operation does not hold."""


class SuitabilityError(ArgumentError):
    """An index set fails one of the two r-suitability conditions."""

    def __init__(self, message, condition=None, witness=None):
        super(SuitabilityError, self).__init__(message)
        self.condition = condition
        self.witness = witness


class VerificationError(UCCLabError):
    """A computed result failed the check made before returning it."""


class ResourceLimitError(UCCLabError):
    """A configured cap was exceeded before the computation finished."""

    def __init__(self, message, cap_name=None, cap=None):
        super(ResourceLimitError, self).__init__(message)
        self.cap_name = cap_name
        self.cap = cap


def popcount(bitset):
    """Number of elements in a bitset.

    >>> popcount(0b10110)
    3
    """
    return bin(bitset).count('1')


def iter_bits(bitset):
    """Yield the positions of the set bits in increasing order.

    >>> list(iter_bits(0b10110))
    [1, 2, 4]
    """
    while bitset:
        low = bitset & -bitset
        yield low.bit_length() - 1
        bitset ^= low


def to_bitset(elements):
    """Bitset holding the given non-negative integers."""
    bitset = 0
    for element in elements:
        bitset |= 1 << element
    return bitset
