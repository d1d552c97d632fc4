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



""" Network coding sheaves on directed graphs.

    A vertex holds one coordinate per unit of incoming capacity, plus any
    extra coordinates a source injects.  Restrictions to incoming edges are
    the block projections; restrictions to outgoing edges are row blocks of
    the vertex's coding matrix.
"""

from cellsheaf.containers import DualityReport, HomologyComparison
from cellsheaf.derived.functors import sheaf_homology
from cellsheaf.exceptions import IncompatibleShapes, InconsistentCapacity
from cellsheaf.homology import cohomology, sheaf_homology_graph
from cellsheaf.linalg.field import RATIONALS
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellSheaf
from cellsheaf.topology.cells import CellComplex
from cellsheaf.topology.poset import build_poset
from cellsheaf.util import offsets

class CodedGraph(object):
    """ A directed graph with edge capacities and per-vertex codings.

        :param vertices: map vertex -> number of extra source coordinates
        :param edges: map edge -> (tail, head); a missing end is None and
            makes the edge dangle
        :param capacities: map edge -> capacity, default 1
        :param codings: map vertex -> Matrix whose rows are the outgoing
            edges' coordinates (edges sorted by id) and whose columns are the
            incoming coordinates followed by the extras
    """

    def __init__(self, vertices, edges, capacities=None, codings=None, field=RATIONALS):
        self.vertices = dict(vertices)
        self.edges = dict(edges)
        self.capacities = {edge: 1 for edge in self.edges}
        self.capacities.update(capacities or {})
        self.codings = dict(codings or {})
        self.field = field

        for (edge, (tail, head)) in self.edges.items():
            for end in (tail, head):
                if end is not None and end not in self.vertices:
                    raise InconsistentCapacity(
                        'edge `{}` touches undeclared vertex `{}`'.format(edge, end))
            if tail is not None and tail == head:
                raise IncompatibleShapes('edge `{}` is a loop; subdivide it first'.format(edge))

    def __eq__(self, other):
        return (isinstance(other, CodedGraph) and
                (self.vertices, self.edges, self.capacities, self.codings) ==
                (other.vertices, other.edges, other.capacities, other.codings))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self.edges)))

    def __repr__(self):
        return 'CodedGraph({} vertices, {} edges)'.format(len(self.vertices), len(self.edges))

    def in_edges(self, vertex):
        return sorted(e for (e, (_, head)) in self.edges.items() if head == vertex)

    def out_edges(self, vertex):
        return sorted(e for (e, (tail, _)) in self.edges.items() if tail == vertex)

    def vertex_capacity(self, vertex):
        return sum(self.capacities[e] for e in self.in_edges(vertex)) + self.vertices[vertex]

    def coding(self, vertex):
        """ The coding matrix, checked against the edge capacities """
        rows = sum(self.capacities[e] for e in self.out_edges(vertex))
        cols = self.vertex_capacity(vertex)
        matrix = self.codings.get(vertex)
        if matrix is None:
            if rows:
                raise InconsistentCapacity('vertex `{}` has outgoing edges but no coding'.format(
                    vertex))
            return Matrix.zeros(self.field, 0, cols)

        if matrix.shape != (rows, cols):
            raise InconsistentCapacity(
                'coding at `{}` has shape {}, capacities require {}'.format(
                    vertex, matrix.shape, (rows, cols)))
        return matrix

    def complex(self):
        """ The graph as a 1-complex: tails carry -1, heads +1, and an edge
            missing an end is not compact.
        """
        cells = [(v, 0, True) for v in self.vertices]
        covers = []
        for (edge, (tail, head)) in self.edges.items():
            cells.append((edge, 1, tail is not None and head is not None))
            if tail is not None:
                covers.append((tail, edge, -1))
            if head is not None:
                covers.append((head, edge, 1))

        poset = build_poset([(face, coface) for (face, coface, _) in covers],
                            elements=[cell for (cell, _, _) in cells])
        return CellComplex(poset,
                           {cell: dim for (cell, dim, _) in cells},
                           {cell: compact for (cell, _, compact) in cells},
                           {(face, coface): sign for (face, coface, sign) in covers})


def network_coding_sheaf(graph):
    """ :raises InconsistentCapacity: when a coding does not fit the
            capacities around its vertex
    """
    field = graph.field
    complex_ = graph.complex()
    stalks = {v: graph.vertex_capacity(v) for v in graph.vertices}
    stalks.update({e: graph.capacities[e] for e in graph.edges})

    maps = {}
    for vertex in graph.vertices:
        incoming = graph.in_edges(vertex)
        block_start, width = offsets((e, graph.capacities[e]) for e in incoming)
        for edge in incoming:
            size = graph.capacities[edge]
            maps[(vertex, edge)] = Matrix.identity(field, stalks[vertex]).select_rows(
                range(block_start[edge], block_start[edge] + size))

        coding = graph.coding(vertex)
        outgoing = graph.out_edges(vertex)
        row_start, _ = offsets((e, graph.capacities[e]) for e in outgoing)
        for edge in outgoing:
            size = graph.capacities[edge]
            maps[(vertex, edge)] = coding.select_rows(
                range(row_start[edge], row_start[edge] + size))

        logger.debug('coding sheaf at %s: %d incoming coordinates, %d extra',
                     vertex, width, graph.vertices[vertex])

    return CellSheaf(complex_, stalks, maps, field)


def nc_duality_check(sheaf):
    """ Compare the total vertex and edge dimensions and the two cohomology
        groups.  Without extra source coordinates and dangling edges every
        edge coordinate reappears in its head, so both pairs agree.
    """
    complex_ = sheaf.complex
    vertex_total = sheaf.total_dim(complex_.cells_of_dim(0))
    edge_total = sheaf.total_dim(complex_.cells_of_dim(1))
    h0 = cohomology(sheaf, 0).dim
    h1 = cohomology(sheaf, 1).dim
    report = DualityReport(vertex_total=vertex_total, edge_total=edge_total,
                           h0=h0, h1=h1, ok=vertex_total == edge_total and h0 == h1)
    if not report.ok:
        logger.debug('coding sheaf is not self dual: %s', report)
    return report


def sheaf_homology_check(sheaf):
    """ Sheaf homology from the closed formula on graphs against the
        projective resolution.
    """
    closed = sheaf_homology_graph(sheaf)
    derived = tuple(sheaf_homology(sheaf)) + (0, 0)
    derived = derived[:2]
    return HomologyComparison(closed=closed, derived=derived, ok=closed == derived)


def random_routing_graph(rng, vertices=4, loops=3, length=4, field=RATIONALS):
    """ A union of random directed loops with permutation codings.  Every
        vertex receives as many units as it sends, so the sheaf is self dual.
    """
    names = ['v{}'.format(i) for i in range(vertices)]
    edges, counter = {}, 0
    for _ in range(loops):
        size = rng.randint(2, max(2, length))
        walk = [rng.choice(names)]
        while len(walk) < size:
            candidate = rng.choice(names)
            if candidate != walk[-1]:
                walk.append(candidate)
        if walk[0] == walk[-1]:
            walk.pop()
        if len(walk) < 2:
            continue
        for (tail, head) in zip(walk, walk[1:] + walk[:1]):
            edges['e{}'.format(counter)] = (tail, head)
            counter += 1

    graph = CodedGraph({v: 0 for v in names}, edges, field=field)
    codings = {}
    for vertex in names:
        incoming, outgoing = graph.in_edges(vertex), graph.out_edges(vertex)
        if not outgoing:
            continue
        targets = list(range(len(outgoing)))
        rng.shuffle(targets)
        codings[vertex] = Matrix.from_dict(
            field, len(outgoing), len(incoming),
            {(row, column): 1 for (column, row) in enumerate(targets)})
    graph.codings = codings
    return graph
