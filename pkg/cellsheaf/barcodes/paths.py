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


""" Path complexes: stratified intervals and lines, read left to right """

import networkx as nx

from cellsheaf.exceptions import NotPathComplex


class PathComplex(object):
    """ A 1-dimensional complex whose Hasse diagram is a simple path.

        `order` lists the cells left to right.  Edges are oriented by their
        incidence numbers: a tail (-1) vertex sits to the left of its edge.
    """

    def __init__(self, complex_):
        self.complex = complex_
        self.order = path_order(complex_)
        self.position = {cell: k for (k, cell) in enumerate(self.order)}

    def __len__(self):
        return len(self.order)

    def __repr__(self):
        return 'PathComplex({})'.format(' '.join(self.order))

    def is_closed_end(self, cell):
        return self.complex.dim(cell) == 0

    def is_compact(self):
        return all(self.complex.is_compact(cell) for cell in self.order)

    def cover_between(self, k):
        """ The covering pair (vertex, edge) joining positions k and k + 1 """
        left, right = self.order[k], self.order[k + 1]
        if self.complex.dim(left) == 0:
            return (left, right)
        return (right, left)


def path_order(complex_):
    if complex_.dimension > 1:
        raise NotPathComplex('complex has cells of dimension {}'.format(complex_.dimension))

    for edge in complex_.cells_of_dim(1):
        if len(complex_.faces(edge)) > 2:
            raise NotPathComplex('edge `{}` has more than two vertices'.format(edge))

    graph = complex_.poset.hasse_graph()
    if not len(graph):
        return []
    if not nx.is_connected(graph) or not nx.is_tree(graph):
        raise NotPathComplex('cells do not form a single simple path')
    if any(degree > 2 for (_, degree) in graph.degree()):
        raise NotPathComplex('a vertex meets more than two edges')

    ends = sorted(cell for (cell, degree) in graph.degree() if degree <= 1)
    order = nx.shortest_path(graph, ends[0], ends[-1])

    # orient left to right by the first incidence number met
    for (k, cell) in enumerate(order):
        if complex_.dim(cell) != 1:
            continue
        if k + 1 < len(order):
            if complex_.sign(order[k + 1], cell) == -1:
                order.reverse()
            break
        if k > 0:
            if complex_.sign(order[k - 1], cell) == 1:
                order.reverse()
            break

    return order
