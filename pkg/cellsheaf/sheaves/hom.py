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


""" Hom spaces between representations as solution spaces of the naturality
    equations.
"""

from collections import namedtuple

from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.sheaves.morphisms import SheafMorphism

HomSpace = namedtuple('HomSpace', ['dim', 'basis'])


def naturality_system(source, target):
    """ The matrix whose kernel is Hom(source, target).

        Unknowns are the components' entries, component by component in
        cell order and row-major within a component.
    """
    if type(source) is not type(target) or source.complex != target.complex:
        raise IncompatibleShapes('hom space between different complexes or kinds')

    field = source.field
    cells = source.complex.cells
    sizes = [target.stalks[c] * source.stalks[c] for c in cells]
    position = dict(zip(cells, range(len(cells))))

    blocks, heights = {}, []
    for (row, pair) in enumerate(source.complex.covers):
        (start, end) = source.arrow_ends(*pair)
        t_map, s_map = target.maps[pair], source.maps[pair]
        # t_map phi_start - phi_end s_map = 0, vectorized row-major
        left = t_map.kron(Matrix.identity(field, source.stalks[start]))
        right = Matrix.identity(field, target.stalks[end]).kron(s_map.transpose())
        heights.append(target.stalks[end] * source.stalks[start])
        blocks[(row, position[start])] = left
        blocks[(row, position[end])] = -right

    return Matrix.block(field, heights, sizes, blocks), sizes


def hom_space(source, target):
    system, sizes = naturality_system(source, target)
    null = system.kernel_basis()
    cells = source.complex.cells

    basis = []
    for k in range(null.cols):
        components, offset = {}, 0
        for (cell, size) in zip(cells, sizes):
            rows, cols = target.stalks[cell], source.stalks[cell]
            values = {(i, j): null[offset + i * cols + j, k]
                      for i in range(rows) for j in range(cols)}
            components[cell] = Matrix.from_dict(source.field, rows, cols, values)
            offset += size
        basis.append(SheafMorphism(source, target, components))

    return HomSpace(dim=len(basis), basis=basis)
