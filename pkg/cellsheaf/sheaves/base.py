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


""" Cellular sheaves and cosheaves.

    Both store one matrix per covering pair (face, coface).  A sheaf's matrix
    is the restriction F(face) -> F(coface); a cosheaf's is the extension
    F(coface) -> F(face).  Maps along longer chains are composites of cover
    maps and are only well defined once the diamonds commute.
"""

from cellsheaf.containers import ValidationReport, Violation
from cellsheaf.exceptions import ShapeMismatch, UnknownCell
from cellsheaf.linalg.diagrams import Diagram
from cellsheaf.linalg.field import RATIONALS
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.util import offsets


class CellularRepresentation(object):
    """ Shared storage for sheaves and cosheaves.  Subclasses fix the arrow
        direction through `covariant`: True when arrows point up the face
        order.
    """

    covariant = None
    kind = None

    def __init__(self, complex_, stalks, maps=None, field=RATIONALS):
        self.complex = complex_
        self.field = field
        self.stalks = {cell: 0 for cell in complex_.cells}
        for (cell, dim) in stalks.items():
            complex_.check_cell(cell)
            self.stalks[cell] = dim

        self.maps = {}
        maps = dict(maps or {})
        for (face, coface) in complex_.poset.covers:
            source, target = self.arrow_ends(face, coface)
            expected = (self.stalks[target], self.stalks[source])
            matrix = maps.pop((face, coface), None)
            if matrix is None:
                matrix = Matrix.zeros(field, *expected)
            if matrix.shape != expected:
                raise ShapeMismatch('map on {} < {} has shape {}, expected {}'.format(
                    face, coface, matrix.shape, expected))
            self.maps[(face, coface)] = matrix

        if maps:
            raise UnknownCell('maps given on pairs that are not covers: {}'.format(
                sorted(maps)))

        self._composites = {}

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, [
            self.stalks[cell] for cell in self.complex.cells])

    def __eq__(self, other):
        return (type(self) is type(other) and
                self.complex == other.complex and
                self.stalks == other.stalks and
                self.maps == other.maps)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.complex, tuple(sorted(self.stalks.items()))))

    def arrow_ends(self, face, coface):
        """ (source cell, target cell) of the stored matrix on a cover """
        return (face, coface) if self.covariant else (coface, face)

    def stalk(self, cell):
        self.complex.check_cell(cell)
        return self.stalks[cell]

    def cover_map(self, face, coface):
        return self.maps[(face, coface)]

    def transfer(self, low, high):
        """ The composite map between the stalks of low <= high, in the
            direction of the representation.
        """
        if (low, high) in self._composites:
            return self._composites[(low, high)]

        if low == high:
            result = Matrix.identity(self.field, self.stalks[low])
        else:
            chain = self.complex.poset.chain_between(low, high)
            if self.covariant:
                result = Matrix.identity(self.field, self.stalks[low])
                for (face, coface) in zip(chain, chain[1:]):
                    result = self.maps[(face, coface)] @ result
            else:
                result = Matrix.identity(self.field, self.stalks[high])
                for (face, coface) in reversed(list(zip(chain, chain[1:]))):
                    result = self.maps[(face, coface)] @ result

        self._composites[(low, high)] = result
        return result

    def total_dim(self, cells=None):
        cells = self.complex.cells if cells is None else cells
        return sum(self.stalks[cell] for cell in cells)

    def stalk_offsets(self, cells):
        """ Offsets of the stalks of `cells` inside their direct sum """
        return offsets((cell, self.stalks[cell]) for cell in cells)

    def diagram(self, cells=None):
        """ The diagram of this representation restricted to `cells` """
        cells = self.complex.sort_cells(self.complex.cells if cells is None else cells)
        cover_maps = {}
        for (low, high) in self.complex.poset.induced_covers(cells):
            cover_maps[(low, high)] = self.transfer(low, high)

        return Diagram.over_poset(self.field, self.complex.poset, cells,
                                  {cell: self.stalks[cell] for cell in cells},
                                  cover_maps, covariant=self.covariant)

    def validate(self):
        return validate_representation(self)

    def rebuilt(self, complex_, stalks, maps):
        return type(self)(complex_, stalks, maps, self.field)

    def restricted(self, subcomplex):
        """ The representation on a subcomplex, keeping the surviving covers """
        return self.rebuilt(
            subcomplex,
            {cell: self.stalks[cell] for cell in subcomplex.cells},
            {pair: self.maps[pair] for pair in subcomplex.poset.covers})

    def support(self):
        return [cell for cell in self.complex.cells if self.stalks[cell]]

    def is_zero(self):
        return not self.support()


class CellSheaf(CellularRepresentation):
    covariant = True
    kind = 'sheaf'

    def restriction(self, face, coface):
        """ rho_{coface, face}: F(face) -> F(coface) """
        return self.transfer(face, coface)

    def dual(self):
        """ The linear dual cosheaf: same stalks, transposed maps """
        return CellCosheaf(self.complex, self.stalks,
                           {pair: matrix.transpose() for (pair, matrix) in self.maps.items()},
                           self.field)


class CellCosheaf(CellularRepresentation):
    covariant = False
    kind = 'cosheaf'

    def extension(self, face, coface):
        """ r_{face, coface}: F(coface) -> F(face) """
        return self.transfer(face, coface)

    def dual(self):
        return CellSheaf(self.complex, self.stalks,
                         {pair: matrix.transpose() for (pair, matrix) in self.maps.items()},
                         self.field)


def validate_representation(rep):
    """ Check commutativity on every codimension two interval """
    violations = []
    for (low, high, middle) in rep.complex.diamonds():
        if len(middle) < 2:
            continue
        composites = [_composite_through(rep, low, m, high) for m in middle]
        for (m, composite) in zip(middle[1:], composites[1:]):
            if composite != composites[0]:
                violations.append(Violation(
                    'commutativity', (low, middle[0], m, high),
                    'paths {} < {} < {} and {} < {} < {} disagree'.format(
                        low, middle[0], high, low, m, high)))

    return ValidationReport.from_violations(violations)


def _composite_through(rep, low, middle, high):
    first, second = rep.maps[(low, middle)], rep.maps[(middle, high)]
    if rep.covariant:
        return second @ first
    return first @ second


def validate_sheaf(sheaf):
    return validate_representation(sheaf)


def validate_cosheaf(cosheaf):
    return validate_representation(cosheaf)


def linear_dual(rep):
    return rep.dual()
