#!/usr/bin/env python
"""Provides io of set families in JSON and plain text.

JSON: {"universe": u, "one_based": bool, "sets": [[int, ...], ...]} with the
optional keys "indexed" and "construction". Text: one set per line, elements
separated by whitespace, "-" for the empty set, "#" starting a comment. A
header comment "# universe=7 one_based=true indexed=true" is honored.

In one-based mode element labels run 1..u and label u stands for element 0.

>>> doc = family_from_text(['# universe=7 one_based=true indexed=false',
...                         '2 4 7', '1 3 5'])
>>> doc.family.sets()
[[0, 2, 4], [1, 3, 5]]
>>> family_to_text(doc.family, one_based=True).splitlines()[1:]
['1 3 5', '2 4 7']
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import logging
from collections import namedtuple

from ucclab import ArgumentError, RangeError
from ucclab import iter_bits
from ucclab import util
from ucclab.family import make_family
from ucclab.io.symmetry import suitable_from_dict, suitable_to_dict
from ucclab.translates import ShiftedFamily, TranslateFamily
from ucclab.translates import apply_shift, cyclic_translates

logger = logging.getLogger(__name__)

FamilyDocument = namedtuple('FamilyDocument',
                            ['family', 'one_based', 'construction'])


def to_label(element, universe_size, one_based=False):
    """External label of an element."""
    if one_based and element == 0:
        return universe_size
    return element


def from_label(label, universe_size, one_based=False):
    """Element of an external label."""
    if one_based:
        if label < 1 or label > universe_size:
            raise RangeError('ERROR: label %d outside 1..%d' %
                             (label, universe_size))
        return label % universe_size
    if label < 0 or label >= universe_size:
        raise RangeError('ERROR: label %d outside 0..%d' %
                         (label, universe_size - 1))
    return label


def _labeled_sets(family, one_based):
    sets = [sorted(to_label(e, family.universe_size, one_based)
                   for e in iter_bits(member)) for member in family.members]
    if not family.allow_duplicates:
        sets.sort()
    return sets


def _elements(labels, universe_size, one_based):
    return [from_label(label, universe_size, one_based) for label in labels]


def family_to_dict(family, one_based=False, construction=None):
    """JSON-ready dictionary; set-of-sets families are canonically sorted."""
    data = {'universe': family.universe_size,
            'one_based': bool(one_based),
            'sets': _labeled_sets(family, one_based)}
    if family.allow_duplicates:
        data['indexed'] = True
    if construction is not None:
        data['construction'] = construction
    return data


def family_from_dict(data):
    """FamilyDocument from the dictionary form."""
    if 'universe' not in data or 'sets' not in data:
        raise ArgumentError('ERROR: family JSON needs "universe" and "sets"')
    universe_size = int(data['universe'])
    one_based = bool(data.get('one_based', False))
    sets = [_elements([int(label) for label in labels], universe_size,
                      one_based) for labels in data['sets']]
    family = make_family(sets, universe_size,
                         allow_duplicates=bool(data.get('indexed', False)))
    return FamilyDocument(family, one_based, data.get('construction'))


def family_to_json(family, one_based=False, construction=None):
    return json.dumps(family_to_dict(family, one_based=one_based,
                                     construction=construction))


def family_to_text(family, one_based=False):
    """Header comment followed by one line per member."""
    lines = ['# universe=%d one_based=%s indexed=%s' % (
        family.universe_size, str(bool(one_based)).lower(),
        str(family.allow_duplicates).lower())]
    for labels in _labeled_sets(family, one_based):
        lines.append(' '.join(str(label) for label in labels) or '-')
    return '\n'.join(lines)


def _parse_header(line):
    header = {}
    for token in line.lstrip('#').split():
        if '=' in token:
            key, value = token.split('=', 1)
            header[key] = value
    return header


def _as_bool(value):
    if value.lower() in ('true', '1', 'yes'):
        return True
    if value.lower() in ('false', '0', 'no'):
        return False
    raise ArgumentError('ERROR: expected true or false, got %s' % value)


def family_from_text(lines, universe_size=None, one_based=False,
                     indexed=False):
    """FamilyDocument from text lines.

    A header comment overrides the keyword defaults. Without a header or
    universe_size the universe is the smallest one holding every label.
    """
    rows = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        if line.startswith('#'):
            header = _parse_header(line)
            if 'universe' in header:
                universe_size = int(header['universe'])
            if 'one_based' in header:
                one_based = _as_bool(header['one_based'])
            if 'indexed' in header:
                indexed = _as_bool(header['indexed'])
            continue
        line = line.split('#', 1)[0].strip()
        if line == '-':
            rows.append([])
            continue
        try:
            rows.append([int(token) for token in line.replace(',', ' ').split()])
        except ValueError:
            raise ArgumentError('ERROR: cannot parse set line: %s' % line)
    if universe_size is None:
        largest = max([label for row in rows for label in row] or [-1])
        universe_size = max(largest if one_based else largest + 1, 0)
    sets = [_elements(row, universe_size, one_based) for row in rows]
    family = make_family(sets, universe_size, allow_duplicates=indexed)
    return FamilyDocument(family, one_based, None)


def load_family(uri, universe_size=None, one_based=False, indexed=False):
    """Read a family from a file path, URL, '-' (stdin) or list of lines.

    JSON is recognized by a leading '{'; anything else is the text format.
    """
    lines = util.read(uri)
    text = '\n'.join(lines).strip()
    if text.startswith('{'):
        try:
            data = json.loads(text)
        except ValueError as e:
            raise ArgumentError('ERROR: cannot parse family JSON: %s' % e)
        doc = family_from_dict(data)
    else:
        doc = family_from_text(lines, universe_size=universe_size,
                               one_based=one_based, indexed=indexed)
    logger.debug('read family of %d sets over universe %d' %
                 (len(doc.family), doc.family.universe_size))
    return doc


def construction_to_dict(construction):
    """Record of how a translate or shifted family was built (zero-based)."""
    if isinstance(construction, ShiftedFamily):
        data = construction_to_dict(construction.source)
        data['kind'] = 'shift'
        data['index'] = suitable_to_dict(construction.index)
        return data
    if isinstance(construction, TranslateFamily):
        return {'kind': 'translates', 'n': construction.n,
                'base': list(construction.base),
                'anchor': construction.anchor}
    raise ArgumentError('ERROR: no construction record for %r' %
                        (construction,))


def construction_from_dict(data, family=None):
    """Rebuild the construction; check it against family when given."""
    kind = data.get('kind')
    if kind not in ('translates', 'shift'):
        raise ArgumentError('ERROR: unknown construction kind %s' % kind)
    base = [int(a) for a in data['base']]
    translates = cyclic_translates(base, int(data['n']), anchor=base[0])
    if list(translates.base) != base:
        raise ArgumentError('ERROR: base %s is not a rotated ascending tuple'
                            % base)
    construction = translates
    if kind == 'shift':
        construction = apply_shift(translates, suitable_from_dict(data['index']))
    if family is not None:
        members = list(construction.to_family().members)
        if list(family.members) != members:
            raise ArgumentError('ERROR: construction record does not '
                                'reproduce the listed sets')
    return construction
