#!/usr/bin/env python
"""Provides io of bipartite graphs.

Three formats are understood: JSON {"x": [...], "y": [...], "edges": [...]},
an edge list with a "bipartite |X| |Y|" header, optional "x: ..." and "y: ..."
class lines and one "x_label y_label" line per edge, and networkx
node_link_data JSON with a 'bipartite' node attribute.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import logging

from networkx.readwrite import json_graph

from ucclab import ArgumentError
from ucclab import util
from ucclab.graph import BipartiteGraph

logger = logging.getLogger(__name__)

FORMATS = ('json', 'edgelist', 'node-link')


def graph_to_dict(graph):
    labels = graph.labels
    return {'x': [labels[v] for v in graph.x_vertices],
            'y': [labels[v] for v in graph.y_vertices],
            'edges': [[labels[x], labels[y]] for x, y in graph.edges()]}


def graph_from_dict(data):
    """BipartiteGraph from the {"x", "y", "edges"} dictionary."""
    for key in ('x', 'y', 'edges'):
        if key not in data:
            raise ArgumentError('ERROR: graph JSON lacks "%s"' % key)
    edges = []
    for edge in data['edges']:
        if len(edge) != 2:
            raise ArgumentError('ERROR: malformed edge %s' % (edge,))
        edges.append((edge[0], edge[1]))
    return BipartiteGraph(data['x'], data['y'], edges)


def graph_to_edgelist(graph):
    """Header, the two classes in vertex order, then one line per edge."""
    labels = graph.labels
    lines = ['bipartite %d %d' % (graph.n_x, graph.n_y),
             ' '.join(['x:'] + [labels[v] for v in graph.x_vertices]),
             ' '.join(['y:'] + [labels[v] for v in graph.y_vertices])]
    lines.extend('%s %s' % (labels[x], labels[y]) for x, y in graph.edges())
    return '\n'.join(lines)


def graph_from_edgelist(lines):
    """Parse the edge-list format.

    Optional "x: labels..." and "y: labels..." lines fix each class and its
    order, isolated vertices included. A class without such a line is
    ordered by first appearance in the edges. The header counts must match.
    """
    header = None
    declared = {'x:': None, 'y:': None}
    seen_x, seen_y, edges = [], [], []
    for line in lines:
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3 or tokens[0] != 'bipartite':
                raise ArgumentError('ERROR: edge list must start with '
                                    '"bipartite |X| |Y|", got: %s' % line)
            try:
                header = (int(tokens[1]), int(tokens[2]))
            except ValueError:
                raise ArgumentError('ERROR: bad edge list header: %s' % line)
            continue
        if tokens[0] in declared:
            if declared[tokens[0]] is not None:
                raise ArgumentError('ERROR: class line repeated: %s' % line)
            declared[tokens[0]] = tokens[1:]
            continue
        if len(tokens) != 2:
            raise ArgumentError('ERROR: cannot parse edge line: %s' % line)
        x, y = tokens
        if x not in seen_x:
            seen_x.append(x)
        if y not in seen_y:
            seen_y.append(y)
        edges.append((x, y))
    if header is None:
        raise ArgumentError('ERROR: empty edge list')
    x_labels = declared['x:'] if declared['x:'] is not None else seen_x
    y_labels = declared['y:'] if declared['y:'] is not None else seen_y
    if header != (len(x_labels), len(y_labels)):
        raise ArgumentError(
            'ERROR: header declares %d+%d vertices, found %d+%d' %
            (header[0], header[1], len(x_labels), len(y_labels)))
    return BipartiteGraph(x_labels, y_labels, edges)


def graph_to_node_link(graph):
    """networkx node_link_data of the labeled graph."""
    return json_graph.node_link_data(graph.to_networkx())


def graph_from_node_link(data):
    nx_graph = json_graph.node_link_graph(data)
    x_labels = [u for u, d in nx_graph.nodes(data=True)
                if d.get('bipartite') == 0]
    y_labels = [u for u, d in nx_graph.nodes(data=True)
                if d.get('bipartite') == 1]
    if len(x_labels) + len(y_labels) != nx_graph.number_of_nodes():
        raise ArgumentError('ERROR: every node needs bipartite = 0 or 1')
    return BipartiteGraph(x_labels, y_labels, nx_graph.edges())


def dumps_graph(graph, fmt='json'):
    if fmt == 'json':
        return json.dumps(graph_to_dict(graph))
    if fmt == 'edgelist':
        return graph_to_edgelist(graph)
    if fmt == 'node-link':
        return json.dumps(graph_to_node_link(graph))
    raise ArgumentError('ERROR: unknown graph format %s, expected one of %s'
                        % (fmt, ', '.join(FORMATS)))


def load_graph(uri):
    """Read a graph in any of the supported formats."""
    lines = util.read(uri)
    text = '\n'.join(lines).strip()
    if not text.startswith('{'):
        graph = graph_from_edgelist(lines)
    else:
        try:
            data = json.loads(text)
        except ValueError as e:
            raise ArgumentError('ERROR: cannot parse graph JSON: %s' % e)
        if 'nodes' in data:
            graph = graph_from_node_link(data)
        else:
            graph = graph_from_dict(data)
    logger.debug('read %r' % graph)
    return graph
