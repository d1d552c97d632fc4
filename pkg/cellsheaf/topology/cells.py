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


""" Cell complexes: a face poset decorated with cell dimensions, compactness
    flags and signed incidence numbers on the covering pairs.
"""

import itertools

from cellsheaf.containers import ValidationReport, Violation
from cellsheaf.exceptions import NotSimplicial, UnknownCell
from cellsheaf.topology.poset import Poset, build_poset
from cellsheaf.util import cell_order_key


class CellComplex(object):
    def __init__(self, poset, dims, compact=None, signs=None):
        self.poset = poset
        self.dims = dict(dims)
        self.compact = {cell: True for cell in poset.elements}
        self.compact.update(compact or {})
        self.signs = dict(signs or {})

        self.cells = sorted(poset.elements, key=cell_order_key(self.dims))
        self.index = {cell: position for (position, cell) in enumerate(self.cells)}

    @classmethod
    def from_records(cls, cells, covers):
        """ :param cells: iterable of (id, dim, compact)
            :param covers: iterable of (face, coface, sign)
        """
        cells = list(cells)
        covers = list(covers)
        poset = build_poset([(face, coface) for (face, coface, _) in covers],
                            elements=[cell for (cell, _, _) in cells])
        known = frozenset(cell for (cell, _, _) in cells)
        for cell in poset.elements:
            if cell not in known:
                raise UnknownCell('Cover references undeclared cell `{}`'.format(cell))

        return cls(poset,
                   {cell: dim for (cell, dim, _) in cells},
                   {cell: compact for (cell, _, compact) in cells},
                   {(face, coface): sign for (face, coface, sign) in covers})

    def __repr__(self):
        return 'CellComplex({} cells, dim {})'.format(len(self.cells), self.dimension)

    def __eq__(self, other):
        return (isinstance(other, CellComplex) and
                self.poset == other.poset and
                self.dims == other.dims and
                self.compact == other.compact and
                self.signs == other.signs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.poset)

    def __contains__(self, cell):
        return cell in self.poset

    def __len__(self):
        return len(self.cells)

    @property
    def dimension(self):
        return max(self.dims.values()) if self.dims else -1

    @property
    def covers(self):
        return sorted(self.poset.covers, key=lambda pair: (self.index[pair[1]], self.index[pair[0]]))

    def check_cell(self, cell):
        if cell not in self.poset:
            raise UnknownCell('Unknown cell `{}`'.format(cell))

    def dim(self, cell):
        self.check_cell(cell)
        return self.dims[cell]

    def sign(self, face, coface):
        return self.signs.get((face, coface), 0)

    def is_compact(self, cell):
        return self.compact[cell]

    def cells_of_dim(self, dim):
        return [cell for cell in self.cells if self.dims[cell] == dim]

    def faces(self, cell):
        return sorted(self.poset.faces(cell), key=self.index.get)

    def cofaces(self, cell):
        return sorted(self.poset.cofaces(cell), key=self.index.get)

    def closure(self, cell):
        return self.poset.closure(cell)

    def open_star(self, cell):
        return self.poset.open_star(cell)

    def leq(self, low, high):
        return self.poset.leq(low, high)

    def sort_cells(self, cells):
        return sorted(cells, key=self.index.get)

    def vertices(self, cell):
        return self.sort_cells(c for c in self.closure(cell) if self.dims[c] == 0)

    def subcomplex(self, cells):
        """ The complex induced on `cells`; covers and signs are kept where both
            ends survive.
        """
        cells = frozenset(cells)
        covers = [(x, y) for (x, y) in self.poset.covers if x in cells and y in cells]
        return CellComplex(Poset(cells, covers),
                           {c: self.dims[c] for c in cells},
                           {c: self.compact[c] for c in cells},
                           {pair: self.signs[pair] for pair in covers if pair in self.signs})

    def compact_part(self):
        return self.subcomplex(c for c in self.cells if self.compact[c])

    def with_signs(self, signs):
        return CellComplex(self.poset, self.dims, self.compact, signs)

    def diamonds(self):
        """ (low, high, [intermediate cells]) for every codimension two pair """
        result = []
        for high in self.cells:
            for low in self.sort_cells(self.closure(high)):
                if self.dims[high] - self.dims[low] != 2:
                    continue
                middle = self.sort_cells(self.poset.interval(low, high) - {low, high})
                result.append((low, high, middle))
        return result

    def validate(self):
        return validate_complex(self)


def validate_complex(complex_):
    """ Check the four cell complex invariants, reporting each violation
        with the offending cells.
    """
    violations = []

    for (face, coface) in complex_.covers:
        if complex_.dims[coface] != complex_.dims[face] + 1:
            violations.append(Violation(
                'dimension', (face, coface),
                'cover {} < {} does not raise dimension by one'.format(face, coface)))
        if complex_.sign(face, coface) not in (1, -1):
            violations.append(Violation(
                'sign', (face, coface),
                'cover {} < {} has no +1/-1 incidence number'.format(face, coface)))

    for (low, high, middle) in complex_.diamonds():
        if len(middle) != 2:
            violations.append(Violation(
                'diamond', (low, high),
                '{} < {} has {} intermediate cells, expected 2'.format(low, high, len(middle))))
            continue
        total = sum(complex_.sign(low, m) * complex_.sign(m, high) for m in middle)
        if total != 0:
            violations.append(Violation(
                'sign', (low, middle[0], middle[1], high),
                'incidence numbers around {} < {} do not cancel'.format(low, high)))

    for cell in complex_.cells:
        if not complex_.compact[cell]:
            continue
        for face in complex_.sort_cells(complex_.closure(cell)):
            if not complex_.compact[face]:
                violations.append(Violation(
                    'compactness', (face, cell),
                    '{} has compact closure but its face {} does not'.format(cell, face)))

    return ValidationReport.from_violations(violations)


def simplicial_signs(complex_, vertex_order=None):
    """ Orient a simplicial face poset: removing the k-th vertex of a simplex
        (in vertex order) gives the face incidence number (-1)^k.

        :param vertex_order: optional list ranking the 0-cells; defaults to
            sorted vertex ids
        :raises NotSimplicial: when the poset is not the face poset of a
            simplicial complex
    """
    vertices = complex_.cells_of_dim(0)
    rank = {v: position for (position, v) in enumerate(vertex_order or sorted(vertices))}
    for vertex in vertices:
        if vertex not in rank:
            raise NotSimplicial('vertex `{}` is missing from the vertex order'.format(vertex))

    spans = {}
    for cell in complex_.cells:
        span = tuple(sorted(complex_.vertices(cell), key=rank.get))
        if len(span) != complex_.dims[cell] + 1:
            raise NotSimplicial('cell `{}` of dimension {} has {} vertices'.format(
                cell, complex_.dims[cell], len(span)))
        if span in spans.values():
            raise NotSimplicial('cell `{}` repeats a vertex set'.format(cell))
        spans[cell] = span

    signs = {}
    for (face, coface) in complex_.covers:
        outer, inner = spans[coface], spans[face]
        missing = [v for v in outer if v not in inner]
        if len(missing) != 1 or len(inner) + 1 != len(outer):
            raise NotSimplicial('cover {} < {} is not a simplicial facet'.format(face, coface))
        signs[(face, coface)] = (-1) ** outer.index(missing[0])

    for cell in complex_.cells:
        expected = 2 ** len(spans[cell]) - 1
        if len(complex_.closure(cell)) != expected:
            raise NotSimplicial('closure of `{}` is not a full simplex'.format(cell))

    return complex_.with_signs(signs)


def simplicial_complex(maximal_simplices, separator=None, vertex_order=None):
    """ The face poset of the simplicial complex generated by
        `maximal_simplices`, with alternating-position signs.  A simplex is
        named by its vertices in vertex order, joined by `separator`.
    """
    maximal_simplices = [tuple(s) for s in maximal_simplices]
    vertices = sorted(set(v for s in maximal_simplices for v in s))
    order = list(vertex_order or vertices)
    rank = {v: position for (position, v) in enumerate(order)}
    if separator is None:
        separator = '' if all(len(str(v)) == 1 for v in vertices) else '.'

    faces = set()
    for simplex in maximal_simplices:
        ordered = tuple(sorted(set(simplex), key=rank.get))
        for size in range(1, len(ordered) + 1):
            faces.update(itertools.combinations(ordered, size))

    def name(face):
        return separator.join(str(v) for v in face)

    dims = {name(face): len(face) - 1 for face in faces}
    covers = []
    for face in faces:
        if len(face) < 2:
            continue
        for drop in range(len(face)):
            covers.append((name(face[:drop] + face[drop + 1:]), name(face)))

    complex_ = CellComplex(build_poset(covers, elements=dims), dims)
    return simplicial_signs(complex_, [str(v) for v in order])
