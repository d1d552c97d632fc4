# -*- coding: utf-8 -*-
# Copyright 2026 The cellsheaf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.



""" Routing sheaves: network coding sheaves whose codings move each unit of
    flow along a single edge.  Such a sheaf splits into pieces supported on
    the trajectories of the units, each a circle or an interval.
"""

from collections import Counter

import networkx as nx

from cellsheaf.containers import RoutingSupport
from cellsheaf.exceptions import NotRouting
from cellsheaf.linalg.field import RATIONALS
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.sheaves.base import CellSheaf
from cellsheaf.util import offsets


def _unit_columns(matrix, cell):
    """ map column -> row of the single 1 in each nonzero column """
    field = matrix.field
    targets = {}
    for i in range(matrix.rows):
        seen = False
        for j in range(matrix.cols):
            value = matrix[i, j]
            if value == field.zero:
                continue
            if value != field.one or seen or j in targets:
                raise NotRouting('map at `{}` is not a partial permutation'.format(cell))
            seen = True
            targets[j] = i
    return targets


def _unit_graph(graph):
    """ One node per unit of capacity; each edge unit feeds the coordinate
        it occupies at its head, and each vertex coordinate feeds the edge
        its coding sends it to.
    """
    units = nx.DiGraph()
    for (edge, capacity) in graph.capacities.items():
        if capacity != 1:
            raise NotRouting('edge `{}` has capacity {}'.format(edge, capacity))
        units.add_node(('edge', edge, 0), cell=edge)

    for vertex in sorted(graph.vertices):
        incoming, outgoing = graph.in_edges(vertex), graph.out_edges(vertex)
        for coordinate in range(graph.vertex_capacity(vertex)):
            units.add_node(('vertex', vertex, coordinate), cell=vertex)
        for (coordinate, edge) in enumerate(incoming):
            units.add_edge(('edge', edge, 0), ('vertex', vertex, coordinate))
        for (column, row) in _unit_columns(graph.coding(vertex), vertex).items():
            units.add_edge(('vertex', vertex, column), ('edge', outgoing[row], 0))

    return units


def routing_decomposition(graph):
    """ Trace every unit of flow through the graph.

        :returns: list of RoutingSupport, circles first, each listing the
            cells it visits in order
        :raises NotRouting: when a capacity is not 1 or a coding is not a
            partial permutation matrix
    """
    units = _unit_graph(graph)
    supports = []
    for component in nx.weakly_connected_components(units):
        piece = units.subgraph(component)
        try:
            cycle = nx.find_cycle(piece)
        except nx.NetworkXNoCycle:
            cycle = None

        if cycle is not None:
            start = min(node for (node, _) in cycle)
            order = [start]
            while True:
                (following,) = piece.successors(order[-1])
                if following == start:
                    break
                order.append(following)
            supports.append(RoutingSupport(
                cells=tuple(units.nodes[node]['cell'] for node in order),
                circle=True, start_closed=True, end_closed=True))
            continue

        (first,) = [node for node in piece if piece.in_degree(node) == 0]
        order = [first]
        while piece.out_degree(order[-1]):
            (following,) = piece.successors(order[-1])
            order.append(following)
        supports.append(RoutingSupport(
            cells=tuple(units.nodes[node]['cell'] for node in order),
            circle=False,
            start_closed=order[0][0] == 'vertex',
            end_closed=order[-1][0] == 'vertex'))

    return sorted(supports, key=lambda s: (not s.circle, s.cells))


def support_dimensions(supports):
    """ How many supports pass through each cell, counted with repetition """
    return Counter(cell for support in supports for cell in support.cells)


def routing_sections_sheaf(complex_, sources=(), sinks=(), field=RATIONALS):
    """ The sheaf of all routings through an acyclic directed 1-complex.

        An interior vertex gets one coordinate per (incoming, outgoing) pair,
        ordered lexicographically; each routing restricts to the two edges
        it uses.  A declared source keeps one coordinate per outgoing edge,
        a declared sink one per incoming edge, and any other source or sink
        gets the zero stalk.
    """
    if complex_.dimension > 1:
        raise NotRouting('routings live on 1-complexes')

    direction = nx.DiGraph()
    direction.add_nodes_from(complex_.cells)
    for (vertex, edge) in complex_.covers:
        if complex_.sign(vertex, edge) < 0:
            direction.add_edge(vertex, edge)
        else:
            direction.add_edge(edge, vertex)
    if not nx.is_directed_acyclic_graph(direction):
        raise NotRouting('the orientation of the edges has a directed cycle')

    sources, sinks = frozenset(sources), frozenset(sinks)

    stalks = {edge: 1 for edge in complex_.cells_of_dim(1)}
    maps = {}
    for vertex in complex_.cells_of_dim(0):
        cofaces = complex_.cofaces(vertex)
        incoming = [e for e in cofaces if complex_.sign(vertex, e) > 0]
        outgoing = [e for e in cofaces if complex_.sign(vertex, e) < 0]

        if vertex in sources:
            stalks[vertex] = len(outgoing)
            rows = {e: {j: 1} for (j, e) in enumerate(outgoing)}
            rows.update({e: {} for e in incoming})
        elif vertex in sinks:
            stalks[vertex] = len(incoming)
            rows = {e: {i: 1} for (i, e) in enumerate(incoming)}
            rows.update({e: {} for e in outgoing})
        elif incoming and outgoing:
            stalks[vertex] = len(incoming) * len(outgoing)
            positions, _ = offsets(((i, j), 1) for i in range(len(incoming))
                                   for j in range(len(outgoing)))
            rows = {e: {positions[(i, j)]: 1 for j in range(len(outgoing))}
                    for (i, e) in enumerate(incoming)}
            rows.update({f: {positions[(i, j)]: 1 for i in range(len(incoming))}
                         for (j, f) in enumerate(outgoing)})
        else:
            stalks[vertex] = 0
            rows = {e: {} for e in cofaces}

        for (edge, row) in rows.items():
            maps[(vertex, edge)] = Matrix.from_dict(
                field, 1, stalks[vertex], {(0, column): 1 for column in row})

    return CellSheaf(complex_, stalks, maps, field)
