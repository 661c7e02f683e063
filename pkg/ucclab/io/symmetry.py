#!/usr/bin/env python
"""Provides io of vertex bijections and r-suitable indices.

Bijections are stored as {"map": {"label": "label", ...}}; suitable indices
as {"n": 7, "I": [0, 1, 2], "q": {"0": 1, "1": 2, "2": 0}, "r": 2}.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import logging

from ucclab import ArgumentError
from ucclab import util
from ucclab.symmetry import VertexBijection
from ucclab.translates import validate_suitable

logger = logging.getLogger(__name__)


def bijection_to_dict(f):
    """JSON-ready dictionary of a bijection, keyed by vertex label."""
    return {'map': f.label_map()}


def bijection_from_dict(graph, data):
    """VertexBijection on graph from its dictionary form."""
    if 'map' not in data or not isinstance(data['map'], dict):
        raise ArgumentError('ERROR: bijection JSON needs a "map" object')
    return VertexBijection.from_labels(graph, data['map'])


def load_bijection(uri, graph):
    """Read a bijection JSON file (or '-' for stdin) for the given graph."""
    return bijection_from_dict(graph, _load_json(uri))


def suitable_to_dict(index):
    return {'n': index.n,
            'I': list(index.index_set),
            'q': dict((str(i), index.q[i]) for i in index.index_set),
            'r': index.r}


def suitable_from_dict(data):
    """Validated SuitableIndex from its dictionary form."""
    for key in ('n', 'I', 'q', 'r'):
        if key not in data:
            raise ArgumentError('ERROR: suitable index JSON lacks "%s"' % key)
    q = data['q']
    if not isinstance(q, dict):
        raise ArgumentError('ERROR: "q" must map index to image')
    return validate_suitable(int(data['n']), [int(i) for i in data['I']],
                             dict((int(k), int(v)) for k, v in q.items()),
                             int(data['r']))


def load_suitable(uri):
    return suitable_from_dict(_load_json(uri))


def _load_json(uri):
    text = '\n'.join(util.read(uri))
    try:
        return json.loads(text)
    except ValueError as e:
        raise ArgumentError('ERROR: cannot parse JSON from %s: %s' % (uri, e))
