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


""" Limits and colimits of finite diagrams of vector spaces.

    A diagram is a list of objects with dimensions and a list of arrows
    (source, target, matrix).  Over a poset only the covering relations need
    to be listed: when the diagram commutes, the equalizer over covers equals
    the equalizer over the full relation.
"""

from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.linalg.spaces import Subspace, cokernel


class Diagram(object):
    def __init__(self, field, objects, dims, arrows):
        self.field = field
        self.objects = list(objects)
        self.dims = dict(dims)
        self.arrows = list(arrows)

        known = frozenset(self.objects)
        for (source, target, matrix) in self.arrows:
            if source not in known or target not in known:
                raise IncompatibleShapes('arrow {} -> {} leaves the diagram'.format(source, target))
            if matrix.shape != (self.dims[target], self.dims[source]):
                raise IncompatibleShapes(
                    'arrow {} -> {} has shape {}x{}, expected {}x{}'.format(
                        source, target, matrix.rows, matrix.cols,
                        self.dims[target], self.dims[source]))

        self.offsets = {}
        position = 0
        for obj in self.objects:
            self.offsets[obj] = position
            position += self.dims[obj]
        self.total = position

    @classmethod
    def over_poset(cls, field, poset, elements, dims, cover_maps, covariant=True):
        """ Build the diagram of a functor restricted to `elements`.

            :param cover_maps: map (x, y) for x <= y in the induced Hasse
                diagram -> Matrix, pointing x -> y when covariant and y -> x
                otherwise
        """
        arrows = []
        for (x, y) in poset.induced_covers(elements):
            if covariant:
                arrows.append((x, y, cover_maps[(x, y)]))
            else:
                arrows.append((y, x, cover_maps[(x, y)]))

        return cls(field, elements, dims, arrows)

    def block_rows(self, obj):
        start = self.offsets[obj]
        return range(start, start + self.dims[obj])

    def _embedded(self, obj, matrix, rows, row_offset):
        """ Place `matrix` in the column block of obj inside a rows x total matrix """
        entries = {}
        start = self.offsets[obj]
        for i in range(matrix.rows):
            for j in range(matrix.cols):
                value = matrix[i, j]
                if value:
                    entries[(row_offset + i, start + j)] = value
        return entries

    def difference_map(self):
        """ prod_x D(x) -> prod_arrows D(target): s -> M s_source - s_target """
        rows = sum(self.dims[target] for (_, target, _) in self.arrows)
        entries = {}
        offset = 0
        for (source, target, matrix) in self.arrows:
            entries.update(self._embedded(source, matrix, rows, offset))
            start = self.offsets[target]
            for i in range(self.dims[target]):
                key = (offset + i, start + i)
                entries[key] = entries.get(key, self.field.zero) - self.field.one
            offset += self.dims[target]

        return Matrix.from_dict(self.field, rows, self.total, entries)

    def relation_map(self):
        """ sum_arrows D(source) -> sum_x D(x): t -> inj_target(M t) - inj_source(t) """
        return self._relation_transpose().transpose()

    def _relation_transpose(self):
        cols = sum(self.dims[source] for (source, _, _) in self.arrows)
        entries = {}
        offset = 0
        for (source, target, matrix) in self.arrows:
            entries.update(self._embedded(target, matrix.transpose(), cols, offset))
            start = self.offsets[source]
            for i in range(self.dims[source]):
                key = (offset + i, start + i)
                entries[key] = entries.get(key, self.field.zero) - self.field.one
            offset += self.dims[source]

        return Matrix.from_dict(self.field, cols, self.total, entries)


class Limit(object):
    def __init__(self, diagram, subspace):
        self.diagram = diagram
        self.space = subspace

    @property
    def dim(self):
        return self.space.dim

    def projection(self, obj):
        """ The leg lim D -> D(obj) """
        return self.space.basis.select_rows(self.diagram.block_rows(obj))

    def restrict_to(self, other):
        """ The map lim D -> lim D' for a sub-diagram D' (dropping objects) """
        rows = [i for obj in other.diagram.objects for i in self.diagram.block_rows(obj)]
        return other.space.coordinates(self.space.basis.select_rows(rows))


class Colimit(object):
    def __init__(self, diagram, quotient):
        self.diagram = diagram
        self.space = quotient

    @property
    def dim(self):
        return self.space.dim

    def injection(self, obj):
        """ The leg D(obj) -> colim D """
        return self.space.projection.select_columns(self.diagram.block_rows(obj))

    def include_into(self, other):
        """ The map colim D -> colim D' for a super-diagram D' """
        positions = [other.diagram.offsets[obj] + k
                     for obj in self.diagram.objects
                     for k in range(self.diagram.dims[obj])]
        padded = Matrix.from_dict(self.diagram.field, other.diagram.total, self.diagram.total,
                                  {(p, k): 1 for (k, p) in enumerate(positions)})
        return other.space.projection @ padded @ self.space.section


def limit_over(diagram):
    difference = diagram.difference_map()
    return Limit(diagram, Subspace(difference.kernel_basis()))


def colimit_over(diagram):
    return Colimit(diagram, cokernel(diagram.relation_map()))
