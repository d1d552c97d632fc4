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


""" Subspaces and quotients in coordinates, plus the free-function front end
    (rank, kernel, image, cokernel) that the rest of the package uses.
"""

from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.linalg.matrix import Matrix


class Subspace(object):
    """ A subspace of k^ambient, stored as a matrix whose columns are a basis """

    def __init__(self, basis):
        self.basis = basis
        self.field = basis.field

    @classmethod
    def span(cls, matrix):
        return cls(matrix.image_basis())

    @classmethod
    def whole(cls, field, ambient):
        return cls(Matrix.identity(field, ambient))

    @classmethod
    def zero(cls, field, ambient):
        return cls(Matrix.zeros(field, ambient, 0))

    @property
    def ambient(self):
        return self.basis.rows

    @property
    def dim(self):
        return self.basis.cols

    def __repr__(self):
        return 'Subspace(dim={}, ambient={})'.format(self.dim, self.ambient)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and
                self.ambient == other.ambient and
                self.dim == other.dim and
                self.contains_all(other.basis))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ambient, self.dim))

    def contains_all(self, vectors):
        if vectors.cols == 0:
            return True
        if self.dim == 0:
            return vectors.is_zero()

        return self.basis.solve(vectors) is not None

    def contains(self, vector):
        return self.contains_all(vector)

    def coordinates(self, vectors):
        """ Coordinates of the columns of `vectors` in this basis """
        if vectors.rows != self.ambient:
            raise IncompatibleShapes('vectors live in dimension {}, subspace in {}'.format(
                vectors.rows, self.ambient))

        if self.dim == 0:
            if not vectors.is_zero():
                raise ValueError('vectors are not contained in the zero subspace')
            return Matrix.zeros(self.field, 0, vectors.cols)

        result = self.basis.solve(vectors)
        if result is None:
            raise ValueError('vectors are not contained in the subspace')

        return result

    def sum(self, other):
        return Subspace.span(Matrix.hstack(self.field, self.ambient, [self.basis, other.basis]))

    def intersection(self, other):
        # solutions of B1 x = B2 y
        stacked = Matrix.hstack(self.field, self.ambient, [self.basis, -other.basis])
        null = stacked.kernel_basis()
        return Subspace.span(self.basis @ null.submatrix(range(self.dim), range(null.cols)))

    def complement_positions(self):
        """ Standard coordinates completing this subspace to the whole space:
            the pivot-free columns of the row reduced transposed basis.
        """
        pivots = frozenset(self.basis.transpose().pivots())
        return [i for i in range(self.ambient) if i not in pivots]

    def quotient(self):
        return Quotient.of(self)


class Quotient(object):
    """ A quotient k^ambient / U presented by a surjective projection onto a
        chosen complement and a section with projection * section = id.
    """

    def __init__(self, ambient, projection, section):
        self.ambient = ambient
        self.projection = projection
        self.section = section
        self.field = projection.field

    @property
    def dim(self):
        return self.projection.rows

    def __repr__(self):
        return 'Quotient(dim={}, ambient={})'.format(self.dim, self.ambient)

    @classmethod
    def of(cls, subspace):
        field, ambient = subspace.field, subspace.ambient
        basis = subspace.basis
        complement = subspace.complement_positions()
        pivots = [i for i in range(ambient) if i not in frozenset(complement)]

        section = Matrix.from_dict(field, ambient, len(complement),
                                   {(p, k): 1 for (k, p) in enumerate(complement)})

        # w = B a + S b with a fixed by the pivot coordinates of w
        projection_data = {}
        if pivots:
            leading_inverse = basis.select_rows(pivots).inverse()
            correction = -(basis.select_rows(complement) @ leading_inverse)
            for k in range(len(complement)):
                for (index, p) in enumerate(pivots):
                    projection_data[(k, p)] = correction[k, index]

        for (k, c) in enumerate(complement):
            projection_data[(k, c)] = field.one

        projection = Matrix.from_dict(field, len(complement), ambient, projection_data)
        return cls(ambient, projection, section)

    def kernel(self):
        return kernel(self.projection)


def rank(matrix):
    return matrix.rank()


def kernel(matrix):
    return Subspace(matrix.kernel_basis())


def image(matrix):
    return Subspace(matrix.image_basis())


def cokernel(matrix):
    return Quotient.of(image(matrix))


def solve(matrix, rhs):
    return matrix.solve(rhs)


def induced_quotient_map(source, target, matrix):
    """ The map source -> target induced by `matrix` between the ambients """
    return target.projection @ matrix @ source.section


def subspace_map(source, target, matrix):
    """ Coordinates of `matrix` restricted to subspace `source`, landing in
        subspace `target`.
    """
    return target.coordinates(matrix @ source.basis)
