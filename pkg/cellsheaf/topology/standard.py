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


""" A catalogue of small complexes used by the corpus, the tests and the
    applications.  Edges are oriented tail -> head, so the tail carries the
    incidence number -1 and the head +1.
"""

import functools

from cellsheaf.topology.cells import CellComplex, simplicial_complex
from cellsheaf.topology.maps import CellularMap


def complex_from_records(cells, covers):
    return CellComplex.from_records(cells, covers)


@functools.lru_cache(maxsize=None)
def point(name='*'):
    return complex_from_records([(name, 0, True)], [])


def interval(left='x', edge='a', right='y'):
    """ The closed interval: two vertices and an open edge """
    return complex_from_records(
        [(left, 0, True), (right, 0, True), (edge, 1, True)],
        [(left, edge, -1), (right, edge, 1)])


def half_open_interval(vertex='x', edge='a'):
    """ [0, 1): the right end of the edge is missing """
    return complex_from_records(
        [(vertex, 0, True), (edge, 1, False)],
        [(vertex, edge, -1)])


def open_interval():
    return complex_from_records([('a', 1, False)], [])


def open_interval_with_midpoint(left='a', middle='v', right='b'):
    return complex_from_records(
        [(left, 1, False), (middle, 0, True), (right, 1, False)],
        [(middle, left, 1), (middle, right, -1)])


def path(vertices, open_left=False, open_right=False):
    """ A subdivided line through `vertices`, edges named `<u>-<v>`.  The
        optional open end edges are named `<-<v>` and `<v>->`.
    """
    vertices = list(vertices)
    cells = [(v, 0, True) for v in vertices]
    covers = []
    for (tail, head) in zip(vertices, vertices[1:]):
        edge = '{}-{}'.format(tail, head)
        cells.append((edge, 1, True))
        covers.extend([(tail, edge, -1), (head, edge, 1)])

    if open_left:
        edge = '<-{}'.format(vertices[0])
        cells.append((edge, 1, False))
        covers.append((vertices[0], edge, 1))
    if open_right:
        edge = '{}->'.format(vertices[-1])
        cells.append((edge, 1, False))
        covers.append((vertices[-1], edge, -1))

    return complex_from_records(cells, covers)


def circle(size=2):
    """ Vertices v0..v(n-1) and edges e_i from v_i to v_(i+1) """
    if size < 2:
        raise ValueError('a regular circle needs at least two vertices')

    cells = [('v{}'.format(i), 0, True) for i in range(size)]
    covers = []
    for i in range(size):
        edge = 'e{}'.format(i)
        cells.append((edge, 1, True))
        covers.append(('v{}'.format(i), edge, -1))
        covers.append(('v{}'.format((i + 1) % size), edge, 1))

    return complex_from_records(cells, covers)


def simplex(k):
    """ The full k-simplex on vertices 0..k """
    return simplicial_complex([tuple(str(i) for i in range(k + 1))])


def simplex_boundary(k):
    """ The boundary of the (k + 1)-simplex, a k-sphere """
    vertices = [str(i) for i in range(k + 2)]
    return simplicial_complex([tuple(v for v in vertices if v != skip) for skip in vertices])


def unit_square():
    """ [0,1]^2 with four vertices, four edges and one 2-cell """
    cells = [('00', 0, True), ('10', 0, True), ('01', 0, True), ('11', 0, True),
             ('bottom', 1, True), ('right', 1, True), ('top', 1, True), ('left', 1, True),
             ('square', 2, True)]
    covers = [
        ('00', 'bottom', -1), ('10', 'bottom', 1),
        ('10', 'right', -1), ('11', 'right', 1),
        ('01', 'top', -1), ('11', 'top', 1),
        ('00', 'left', -1), ('01', 'left', 1),
        ('bottom', 'square', 1), ('right', 'square', 1),
        ('top', 'square', -1), ('left', 'square', -1),
    ]
    return complex_from_records(cells, covers)


def half_open_square():
    """ [0,1)^2 as a vertex, two open edges and an open square """
    return complex_from_records(
        [('v', 0, True), ('a', 1, False), ('e', 1, False), ('square', 2, False)],
        [('v', 'a', -1), ('v', 'e', -1), ('a', 'square', 1), ('e', 'square', -1)])


def two_sphere():
    """ An equator with two vertices and two edges, capped by two disks """
    cells = [('p', 0, True), ('q', 0, True), ('e', 1, True), ('f', 1, True),
             ('north', 2, True), ('south', 2, True)]
    covers = [
        ('p', 'e', -1), ('q', 'e', 1), ('q', 'f', -1), ('p', 'f', 1),
        ('e', 'north', 1), ('f', 'north', 1), ('e', 'south', -1), ('f', 'south', -1),
    ]
    return complex_from_records(cells, covers)


def grid_cell(kind, i, j):
    return '{}.{}.{}'.format(kind, i, j)


def grid_torus(width=3, height=3):
    """ The torus glued from a width x height grid of squares.

        Points `p.i.j`, horizontal edges `h.i.j` from p.i.j to p.(i+1).j,
        vertical edges `v.i.j` from p.i.j to p.i.(j+1) and squares `s.i.j`.
    """
    if width < 2 or height < 2:
        raise ValueError('grid torus needs at least two rows and columns')

    cells, covers = [], []
    for i in range(width):
        for j in range(height):
            right, up = (i + 1) % width, (j + 1) % height
            h, v, s = grid_cell('h', i, j), grid_cell('v', i, j), grid_cell('s', i, j)
            cells.extend([(grid_cell('p', i, j), 0, True), (h, 1, True), (v, 1, True),
                          (s, 2, True)])
            covers.extend([
                (grid_cell('p', i, j), h, -1), (grid_cell('p', right, j), h, 1),
                (grid_cell('p', i, j), v, -1), (grid_cell('p', i, up), v, 1),
                (h, s, 1), (grid_cell('v', right, j), s, 1),
                (grid_cell('h', i, up), s, -1), (v, s, -1),
            ])

    return complex_from_records(cells, covers)


def height_interval(levels):
    """ The subdivided interval whose vertices are `levels`; edge names are
        `<low>-<high>`.
    """
    return path(levels)


def _level_ranks(target):
    """ Positions of the vertices of a height interval, walking each edge
        from its tail to its head.
    """
    successor = {}
    for edge in target.cells_of_dim(1):
        ends = {target.sign(v, edge): v for v in target.faces(edge)}
        successor[ends[-1]] = ends[1]

    vertices = target.cells_of_dim(0)
    heads = set(successor.values())
    level = next(v for v in vertices if v not in heads)
    rank = {}
    while level is not None and level not in rank:
        rank[level] = len(rank)
        level = successor.get(level)
    return rank


def height_map(complex_, target, level_of):
    """ Send each simplex to its level vertex, or to the edge between the two
        adjacent levels it spans.
    """
    rank = _level_ranks(target)
    assignment = {}
    for cell in complex_.cells:
        spanned = sorted(set(level_of[v] for v in complex_.vertices(cell)), key=rank.get)
        if len(spanned) == 1:
            assignment[cell] = spanned[0]
        elif len(spanned) == 2 and rank[spanned[1]] == rank[spanned[0]] + 1:
            assignment[cell] = '{}-{}'.format(*spanned)
        else:
            raise ValueError('cell `{}` spans non-adjacent levels {}'.format(cell, spanned))

    return CellularMap(complex_, target, assignment)


def sphere_height_model():
    """ The tetrahedron boundary with one edge at each of two heights, mapped
        onto the interval x - y.
    """
    sphere = simplicial_complex([('p', 'q', 'r'), ('p', 'q', 's'), ('p', 'r', 's'),
                                 ('q', 'r', 's')])
    target = height_interval(['x', 'y'])
    levels = {'p': 'x', 'q': 'x', 'r': 'y', 's': 'y'}
    return sphere, target, height_map(sphere, target, levels)


_TORUS_TRIANGLES = [
    # bottom disk glued along a figure eight at the first saddle level
    ('p', 'q0', 'q1'), ('p', 'q1', 'q2'), ('p2', 'q0', 'q3'), ('p2', 'q3', 'q4'),
    ('p', 'q2', 'p2'), ('q2', 'q0', 'p2'), ('p2', 'q4', 'p'), ('q4', 'q0', 'p'),
    # the two tubes between the saddles
    ('q0', 'q1', 'r0'), ('q1', 'r0', 'r1'), ('q1', 'q2', 'r1'), ('q2', 'r1', 'r2'),
    ('q2', 'q0', 'r2'), ('q0', 'r2', 'r0'),
    ('q0', 'q3', 'r4'), ('q3', 'r4', 'r0'), ('q3', 'q4', 'r0'), ('q4', 'r0', 'r3'),
    ('q4', 'q0', 'r3'), ('q0', 'r3', 'r4'),
    # top disk
    ('s', 'r0', 'r2'), ('s', 'r2', 'r1'), ('s2', 'r0', 'r4'), ('s2', 'r4', 'r3'),
    ('s', 'r1', 's2'), ('r1', 'r0', 's2'), ('s2', 'r3', 's'), ('r3', 'r0', 's'),
]


def torus_height_model():
    """ A triangulated upright torus over the four level interval
        x - y - z - w, with its two saddles on the middle levels.
    """
    torus = simplicial_complex(_TORUS_TRIANGLES)
    target = height_interval(['x', 'y', 'z', 'w'])
    levels = {}
    for vertex in torus.cells_of_dim(0):
        levels[vertex] = {'p': 'x', 'q': 'y', 'r': 'z', 's': 'w'}[vertex[0]]
    return torus, target, height_map(torus, target, levels)


def circle_map_example():
    """ The interval x' - a' - y' - b' with b' open at its far end, wrapped
        bijectively onto the circle with vertices x, y and edges a, b.
        Returns (source, target, map).
    """
    source = complex_from_records(
        [("x'", 0, True), ("y'", 0, True), ("a'", 1, True), ("b'", 1, False)],
        [("x'", "a'", -1), ("y'", "a'", 1), ("y'", "b'", -1)])
    target = complex_from_records(
        [('x', 0, True), ('y', 0, True), ('a', 1, True), ('b', 1, True)],
        [('x', 'a', -1), ('y', 'a', 1), ('y', 'b', -1), ('x', 'b', 1)])
    assignment = {"x'": 'x', "a'": 'a', "y'": 'y', "b'": 'b'}
    return source, target, CellularMap(source, target, assignment)


def inclusion(subcomplex, complex_, renaming=None):
    renaming = renaming or {}
    return CellularMap(subcomplex, complex_,
                       {cell: renaming.get(cell, cell) for cell in subcomplex.cells})
