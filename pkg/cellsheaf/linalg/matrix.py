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


""" Immutable exact matrices.

    A Matrix represents a linear map V -> W acting on column vectors, so its
    shape is dim W x dim V.  Entries are elements of a `Field`'s sympy domain.
    Row reduction and products are delegated to sympy's sparse DomainMatrix;
    the structural operations (slicing, stacking, blocks) stay here.
"""

from sympy.polys.matrices import DomainMatrix

from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.util import offsets


class Matrix(object):
    __slots__ = ('field', 'rows', 'cols', '_entries', '_rref')

    def __init__(self, field, rows, cols, entries):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._entries = entries
        self._rref = None

    # Constructors

    @classmethod
    def zeros(cls, field, rows, cols):
        zero = field.zero
        return cls(field, rows, cols, tuple(tuple(zero for _ in range(cols))
                                            for _ in range(rows)))

    @classmethod
    def identity(cls, field, size):
        zero, one = field.zero, field.one
        return cls(field, size, size, tuple(
            tuple(one if i == j else zero for j in range(size))
            for i in range(size)))

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(row) for row in rows]
        if cols is None:
            if not rows:
                raise IncompatibleShapes('cannot infer the column count of a matrix with no rows')
            cols = len(rows[0])

        for (index, row) in enumerate(rows):
            if len(row) != cols:
                raise IncompatibleShapes(
                    'row {} has {} entries, expected {}'.format(index, len(row), cols))

        return cls(field, len(rows), cols, tuple(
            tuple(field.convert(value) for value in row) for row in rows))

    @classmethod
    def from_columns(cls, field, columns, rows):
        columns = [list(column) for column in columns]
        for column in columns:
            if len(column) != rows:
                raise IncompatibleShapes(
                    'column has {} entries, expected {}'.format(len(column), rows))

        return cls(field, rows, len(columns), tuple(
            tuple(field.convert(columns[j][i]) for j in range(len(columns)))
            for i in range(rows)))

    @classmethod
    def from_dict(cls, field, rows, cols, values):
        data = [[field.zero] * cols for _ in range(rows)]
        for ((i, j), value) in values.items():
            data[i][j] = field.convert(value)

        return cls(field, rows, cols, tuple(tuple(row) for row in data))

    @classmethod
    def block(cls, field, row_sizes, col_sizes, blocks):
        """ Assemble a block matrix.

            :param row_sizes: heights of the block rows
            :param col_sizes: widths of the block columns
            :param blocks: map (block_row, block_col) -> Matrix; missing
                blocks are zero
        """
        rows, cols = sum(row_sizes), sum(col_sizes)
        data = [[field.zero] * cols for _ in range(rows)]

        row_offsets, _ = offsets(enumerate(row_sizes))
        col_offsets, _ = offsets(enumerate(col_sizes))
        for ((bi, bj), matrix) in blocks.items():
            if (matrix.rows, matrix.cols) != (row_sizes[bi], col_sizes[bj]):
                raise IncompatibleShapes(
                    'block ({}, {}) has shape {}x{}, expected {}x{}'.format(
                        bi, bj, matrix.rows, matrix.cols, row_sizes[bi], col_sizes[bj]))
            r0, c0 = row_offsets[bi], col_offsets[bj]
            for (i, row) in enumerate(matrix._entries):
                target = data[r0 + i]
                for (j, value) in enumerate(row):
                    if value:
                        target[c0 + j] = value

        return cls(field, rows, cols, tuple(tuple(row) for row in data))

    @classmethod
    def hstack(cls, field, rows, matrices):
        matrices = list(matrices)
        for matrix in matrices:
            if matrix.rows != rows:
                raise IncompatibleShapes('cannot hstack a matrix with {} rows onto {} rows'.format(
                    matrix.rows, rows))

        return cls(field, rows, sum(m.cols for m in matrices), tuple(
            tuple(value for m in matrices for value in m._entries[i])
            for i in range(rows)))

    @classmethod
    def vstack(cls, field, cols, matrices):
        matrices = list(matrices)
        for matrix in matrices:
            if matrix.cols != cols:
                raise IncompatibleShapes('cannot vstack a matrix with {} cols onto {} cols'.format(
                    matrix.cols, cols))

        return cls(field, sum(m.rows for m in matrices), cols, tuple(
            row for m in matrices for row in m._entries))

    @classmethod
    def direct_sum(cls, field, matrices):
        matrices = list(matrices)
        return cls.block(field,
                         [m.rows for m in matrices],
                         [m.cols for m in matrices],
                         {(k, k): m for (k, m) in enumerate(matrices)})

    # Access

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index):
        (i, j) = index
        return self._entries[i][j]

    def row(self, i):
        return self._entries[i]

    def column(self, j):
        return tuple(row[j] for row in self._entries)

    def to_lists(self):
        return [list(row) for row in self._entries]

    def to_text_rows(self):
        return [[self.field.to_text(value) for value in row] for row in self._entries]

    def submatrix(self, row_indices, col_indices):
        row_indices = list(row_indices)
        col_indices = list(col_indices)
        return Matrix(self.field, len(row_indices), len(col_indices), tuple(
            tuple(self._entries[i][j] for j in col_indices) for i in row_indices))

    def select_rows(self, row_indices):
        return self.submatrix(row_indices, range(self.cols))

    def select_columns(self, col_indices):
        return self.submatrix(range(self.rows), col_indices)

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows, tuple(
            tuple(self._entries[i][j] for i in range(self.rows))
            for j in range(self.cols)))

    @property
    def T(self):
        return self.transpose()

    def is_zero(self):
        return not any(value for row in self._entries for value in row)

    def is_identity(self):
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)

    def nonzero_count(self):
        return sum(1 for row in self._entries for value in row if value)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and
                self.shape == other.shape and
                self._entries == other._entries)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self):
        return 'Matrix({}x{}, {})'.format(self.rows, self.cols, self.to_text_rows())

    # Arithmetic

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise IncompatibleShapes('shape mismatch: {} vs {}'.format(self.shape, other.shape))

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(a + b for (a, b) in zip(row, other_row))
            for (row, other_row) in zip(self._entries, other._entries)))

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(a - b for (a, b) in zip(row, other_row))
            for (row, other_row) in zip(self._entries, other._entries)))

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(-a for a in row) for row in self._entries))

    def scale(self, scalar):
        scalar = self.field.convert(scalar)
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(scalar * a for a in row) for row in self._entries))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise IncompatibleShapes('cannot compose {}x{} with {}x{}'.format(
                self.rows, self.cols, other.rows, other.cols))

        if not (self.rows and self.cols and other.cols):
            return Matrix.zeros(self.field, self.rows, other.cols)

        product = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return Matrix.from_domain_matrix(self.field, product)

    def kron(self, other):
        """ Kronecker product; row (i, k) -> i * other.rows + k """
        data = []
        for i in range(self.rows):
            for k in range(other.rows):
                data.append(tuple(self._entries[i][j] * other._entries[k][l]
                                  for j in range(self.cols)
                                  for l in range(other.cols)))

        return Matrix(self.field, self.rows * other.rows, self.cols * other.cols, tuple(data))

    # sympy bridge

    def to_domain_matrix(self):
        nonzero = {}
        for (i, row) in enumerate(self._entries):
            entries = {j: value for (j, value) in enumerate(row) if value}
            if entries:
                nonzero[i] = entries

        return DomainMatrix(nonzero, (self.rows, self.cols), self.field.domain)

    @classmethod
    def from_domain_matrix(cls, field, domain_matrix):
        rows, cols = domain_matrix.shape
        data = domain_matrix.to_list()
        return cls(field, rows, cols, tuple(tuple(row) for row in data))

    # Row reduction

    def rref(self):
        """ Reduced row echelon form and pivot columns, cached """
        if self._rref is None:
            self._rref = self._compute_rref()

        return self._rref

    def _compute_rref(self):
        if not (self.rows and self.cols):
            return Matrix.zeros(self.field, self.rows, self.cols), ()

        reduced, pivots = self.to_domain_matrix().rref()
        data = [list(row) for row in reduced.to_list()]

        # pivots are normalized to one
        for (i, pivot) in enumerate(pivots):
            lead = data[i][pivot]
            if lead != self.field.one:
                data[i] = [self.field.divide(value, lead) for value in data[i]]

        return Matrix(self.field, self.rows, self.cols, tuple(tuple(row) for row in data)), \
            tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def pivots(self):
        return self.rref()[1]

    def kernel_basis(self):
        """ Columns spanning the null space, one per free column, with a 1 in
            the free position.
        """
        reduced, pivots = self.rref()
        pivot_set = frozenset(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]

        columns = []
        for f in free:
            vector = [self.field.zero] * self.cols
            vector[f] = self.field.one
            for (i, p) in enumerate(pivots):
                vector[p] = -reduced[i, f]
            columns.append(vector)

        return Matrix.from_columns(self.field, columns, self.cols)

    def image_basis(self):
        """ The pivot columns of the matrix itself """
        return self.select_columns(self.pivots())

    def solve(self, rhs):
        """ Solve self * X = rhs.  Returns the particular solution with all
            free variables set to zero, or None when the system is
            inconsistent.
        """
        if rhs.rows != self.rows:
            raise IncompatibleShapes('right hand side has {} rows, expected {}'.format(
                rhs.rows, self.rows))

        augmented = Matrix.hstack(self.field, self.rows, [self, rhs])
        reduced, pivots = augmented.rref()
        if any(p >= self.cols for p in pivots):
            return None

        data = [[self.field.zero] * rhs.cols for _ in range(self.cols)]
        for (i, p) in enumerate(pivots):
            for j in range(rhs.cols):
                data[p][j] = reduced[i, self.cols + j]

        return Matrix(self.field, self.cols, rhs.cols, tuple(tuple(row) for row in data))

    def inverse(self):
        if self.rows != self.cols:
            raise IncompatibleShapes('cannot invert a {}x{} matrix'.format(self.rows, self.cols))

        result = self.solve(Matrix.identity(self.field, self.rows))
        if result is None or self.rank() != self.rows:
            raise ZeroDivisionError('matrix is singular')

        return result

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


def unit_vector(field, size, index):
    return Matrix.from_dict(field, size, 1, {(index, 0): 1})


def coordinate_inclusion(field, size, positions):
    """ The size x len(positions) matrix sending the k-th basis vector to
        positions[k].
    """
    return Matrix.from_dict(field, size, len(positions),
                            {(p, k): 1 for (k, p) in enumerate(positions)})
