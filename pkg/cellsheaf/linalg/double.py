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


from cellsheaf.exceptions import NotAnticommuting
from cellsheaf.linalg.chains import ChainComplex
from cellsheaf.linalg.matrix import Matrix


class DoubleComplex(object):
    """ A first-quadrant-or-not grid of spaces C^{p,q} with anticommuting
        differentials: horizontal (p,q) -> (p+1,q), vertical (p,q) -> (p,q+1).
    """

    def __init__(self, field, dims, horizontal, vertical):
        self.field = field
        self.dims = dict(dims)
        self.horizontal = dict(horizontal)
        self.vertical = dict(vertical)

    @classmethod
    def from_commuting(cls, field, dims, horizontal, vertical):
        """ Apply the sign twist (-1)^p to the vertical maps of a grid whose
            squares commute.
        """
        twisted = {(p, q): (matrix if p % 2 == 0 else -matrix)
                   for ((p, q), matrix) in vertical.items()}
        return cls(field, dims, horizontal, twisted)

    def dim(self, p, q):
        return self.dims.get((p, q), 0)

    def dh(self, p, q):
        matrix = self.horizontal.get((p, q))
        if matrix is None:
            return Matrix.zeros(self.field, self.dim(p + 1, q), self.dim(p, q))
        return matrix

    def dv(self, p, q):
        matrix = self.vertical.get((p, q))
        if matrix is None:
            return Matrix.zeros(self.field, self.dim(p, q + 1), self.dim(p, q))
        return matrix

    def check_anticommutes(self):
        for (p, q) in self.dims:
            total = self.dv(p + 1, q) @ self.dh(p, q) + self.dh(p, q + 1) @ self.dv(p, q)
            if not total.is_zero():
                raise NotAnticommuting('square at ({}, {}) does not anticommute'.format(p, q))

    def grid_positions(self, total_degree):
        return sorted((p, q) for (p, q) in self.dims
                      if p + q == total_degree and self.dims[(p, q)])


def totalize(double):
    """ Tot^n = sum over p + q = n of C^{p,q}, ordered by p; d = dh + dv """
    double.check_anticommutes()
    field = double.field

    totals = set(p + q for (p, q) in double.dims if double.dims[(p, q)])
    if not totals:
        return ChainComplex(field, {}, {})

    low, high = min(totals), max(totals)
    layout = {n: double.grid_positions(n) for n in range(low, high + 2)}
    dims = {n: sum(double.dim(p, q) for (p, q) in layout[n]) for n in range(low, high + 1)}

    differentials = {}
    for n in range(low, high):
        sources, targets = layout[n], layout[n + 1]
        blocks = {}
        for (j, (p, q)) in enumerate(sources):
            for (i, (pt, qt)) in enumerate(targets):
                if (pt, qt) == (p + 1, q):
                    blocks[(i, j)] = double.dh(p, q)
                elif (pt, qt) == (p, q + 1):
                    blocks[(i, j)] = double.dv(p, q)
        differentials[n] = Matrix.block(
            field,
            [double.dim(p, q) for (p, q) in targets],
            [double.dim(p, q) for (p, q) in sources],
            blocks)

    return ChainComplex(field, dims, differentials)
