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


""" Morphisms of sheaves and cosheaves, with their kernels, cokernels and
    images computed cell by cell.
"""

from cellsheaf.exceptions import IncompatibleShapes, NotCommuting, ShapeMismatch
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.linalg.spaces import Quotient, Subspace


class SheafMorphism(object):
    """ A natural transformation between two representations of the same
        kind on the same complex.  `components[cell]` maps source(cell) to
        target(cell); missing components are zero.
    """

    def __init__(self, source, target, components=None):
        if type(source) is not type(target) or source.complex != target.complex:
            raise IncompatibleShapes('morphism ends live on different complexes or kinds')

        self.source = source
        self.target = target
        self.field = source.field
        self.components = {}
        components = components or {}
        for cell in source.complex.cells:
            expected = (target.stalks[cell], source.stalks[cell])
            matrix = components.get(cell)
            if matrix is None:
                matrix = Matrix.zeros(self.field, *expected)
            if matrix.shape != expected:
                raise ShapeMismatch('component at {} has shape {}, expected {}'.format(
                    cell, matrix.shape, expected))
            self.components[cell] = matrix

    def __repr__(self):
        return 'SheafMorphism({} -> {})'.format(self.source, self.target)

    def __eq__(self, other):
        return (isinstance(other, SheafMorphism) and
                self.source == other.source and
                self.target == other.target and
                self.components == other.components)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.source, self.target))

    def __getitem__(self, cell):
        return self.components[cell]

    @property
    def complex(self):
        return self.source.complex

    def naturality_failures(self):
        failures = []
        for pair in self.complex.covers:
            (start, end) = self.source.arrow_ends(*pair)
            lhs = self.target.maps[pair] @ self.components[start]
            rhs = self.components[end] @ self.source.maps[pair]
            if lhs != rhs:
                failures.append(pair)
        return failures

    def is_natural(self):
        return not self.naturality_failures()

    def check(self):
        failures = self.naturality_failures()
        if failures:
            raise NotCommuting('naturality fails on covers {}'.format(
                ', '.join('{} < {}'.format(*pair) for pair in failures)))
        return self

    def compose(self, first):
        """ self after first """
        if first.target != self.source:
            raise IncompatibleShapes('morphisms are not composable')
        return SheafMorphism(first.source, self.target, {
            cell: self.components[cell] @ first.components[cell]
            for cell in self.complex.cells})

    def _pointwise(self, other, operation):
        if (self.source, self.target) != (other.source, other.target):
            raise IncompatibleShapes('morphisms have different ends')
        return SheafMorphism(self.source, self.target, {
            cell: operation(self.components[cell], other.components[cell])
            for cell in self.complex.cells})

    def __add__(self, other):
        return self._pointwise(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._pointwise(other, lambda a, b: a - b)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, scalar):
        return SheafMorphism(self.source, self.target, {
            cell: matrix.scale(scalar) for (cell, matrix) in self.components.items()})

    def is_zero(self):
        return all(matrix.is_zero() for matrix in self.components.values())

    def is_isomorphism(self):
        return all(matrix.is_invertible() for matrix in self.components.values())

    def inverse(self):
        return SheafMorphism(self.target, self.source, {
            cell: matrix.inverse() for (cell, matrix) in self.components.items()})

    def rank_profile(self):
        return {cell: matrix.rank() for (cell, matrix) in self.components.items()}

    def kernel(self):
        """ (K, inclusion K -> source) """
        bases = {cell: Subspace(self.components[cell].kernel_basis())
                 for cell in self.complex.cells}
        rep = _subobject(self.source, bases)
        return rep, SheafMorphism(rep, self.source, {
            cell: space.basis for (cell, space) in bases.items()})

    def image(self):
        """ (I, inclusion I -> target) """
        bases = {cell: Subspace(self.components[cell].image_basis())
                 for cell in self.complex.cells}
        rep = _subobject(self.target, bases)
        return rep, SheafMorphism(rep, self.target, {
            cell: space.basis for (cell, space) in bases.items()})

    def cokernel(self):
        """ (Q, projection target -> Q) """
        quotients = {cell: Quotient.of(Subspace(self.components[cell].image_basis()))
                     for cell in self.complex.cells}
        target = self.target
        maps = {}
        for pair in self.complex.covers:
            (start, end) = target.arrow_ends(*pair)
            maps[pair] = quotients[end].projection @ target.maps[pair] @ \
                quotients[start].section
        rep = target.rebuilt(self.complex,
                             {cell: q.dim for (cell, q) in quotients.items()}, maps)
        return rep, SheafMorphism(target, rep, {
            cell: q.projection for (cell, q) in quotients.items()})


def _subobject(rep, bases):
    """ The sub-representation spanned cellwise by `bases`; each stored map
        must carry the subspaces into one another.
    """
    maps = {}
    for pair in rep.complex.covers:
        (start, end) = rep.arrow_ends(*pair)
        maps[pair] = bases[end].coordinates(rep.maps[pair] @ bases[start].basis)

    return rep.rebuilt(rep.complex, {cell: space.dim for (cell, space) in bases.items()}, maps)


def identity_morphism(rep):
    return SheafMorphism(rep, rep, {
        cell: Matrix.identity(rep.field, rep.stalks[cell]) for cell in rep.complex.cells})


def zero_morphism(source, target):
    return SheafMorphism(source, target)
