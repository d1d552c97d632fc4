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



""" Sensing sheaves and evasion cosheaves.

    Each sensor measures a subspace of the dual of the property space.  On a
    simplex of the nerve the measurable covectors are the sum of the vertex
    subspaces, which embeds the sensing sheaf into the constant sheaf on the
    whole dual space.  The evasion cosheaf is the linear dual of the
    cokernel of that embedding: on each cell it holds the properties that
    no nearby sensor sees.
"""

from cellsheaf.containers import EvasionSet
from cellsheaf.exceptions import IncompatibleShapes, NotInjective
from cellsheaf.homology import cochain_complex_c
from cellsheaf.linalg.field import RATIONALS
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.linalg.sequences import les_from_ses
from cellsheaf.linalg.spaces import Subspace
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellSheaf
from cellsheaf.sheaves.morphisms import SheafMorphism
from cellsheaf.sheaves.standard import constant_sheaf
from cellsheaf.topology.cells import simplicial_complex

LES_NAMES = ('F', 'const', 'cok')


class SensorNerve(object):
    """ A simplicial nerve with one measured subspace per vertex.

        :param sensors: map vertex -> Matrix with `ambient` rows whose
            columns span the covectors the sensor measures; vertices without
            an entry measure nothing
    """

    def __init__(self, complex_, ambient, sensors, field=RATIONALS):
        self.complex = complex_
        self.ambient = ambient
        self.field = field
        self.sensors = {}
        for vertex in complex_.cells_of_dim(0):
            matrix = sensors.get(vertex, Matrix.zeros(field, ambient, 0))
            if matrix.rows != ambient:
                raise IncompatibleShapes('sensor `{}` measures covectors of length {}, '
                                         'the property space has dimension {}'.format(
                                             vertex, matrix.rows, ambient))
            self.sensors[vertex] = Subspace.span(matrix)

        extra = set(sensors) - set(self.sensors)
        if extra:
            raise IncompatibleShapes('sensors on cells that are not vertices: {}'.format(
                sorted(extra)))

    @classmethod
    def from_covectors(cls, simplices, ambient, covectors, field=RATIONALS):
        """ :param covectors: map vertex -> list of covectors, each a list
                of `ambient` scalars
        """
        complex_ = simplicial_complex(simplices)
        sensors = {vertex: Matrix.from_columns(field, rows, ambient)
                   for (vertex, rows) in covectors.items()}
        return cls(complex_, ambient, sensors, field)

    def __eq__(self, other):
        return (isinstance(other, SensorNerve) and
                (self.complex, self.ambient, self.sensors) ==
                (other.complex, other.ambient, other.sensors))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.complex, self.ambient))

    def __repr__(self):
        return 'SensorNerve({}, ambient={})'.format(self.complex, self.ambient)

    def measured(self, cell):
        """ The span of the sensors at the vertices of `cell` """
        space = Subspace.zero(self.field, self.ambient)
        for vertex in self.complex.vertices(cell):
            space = space.sum(self.sensors[vertex])
        return space


def sensing_sheaf(nerve):
    """ :returns: (F, iota) where iota embeds F into the constant sheaf """
    field = nerve.field
    spaces = {cell: nerve.measured(cell) for cell in nerve.complex.cells}
    maps = {(face, coface): spaces[coface].coordinates(spaces[face].basis)
            for (face, coface) in nerve.complex.covers}
    sheaf = CellSheaf(nerve.complex, {cell: s.dim for (cell, s) in spaces.items()}, maps, field)

    ambient = constant_sheaf(nerve.complex, nerve.ambient, field)
    iota = SheafMorphism(sheaf, ambient, {cell: s.basis for (cell, s) in spaces.items()})
    return sheaf, iota


def sensing_cokernel(iota):
    """ :returns: (cok, projection) of a cellwise injective embedding
        :raises NotInjective: otherwise
    """
    for (cell, matrix) in iota.components.items():
        if matrix.rank() != matrix.cols:
            raise NotInjective('embedding is not injective at `{}`'.format(cell))
    return iota.cokernel()


def evasion_cosheaf(iota):
    cokernel, _ = sensing_cokernel(iota)
    return cokernel.dual()


def _layer_map(morphism, cells):
    return Matrix.direct_sum(morphism.field, [morphism[cell] for cell in cells])


def sensing_les(iota):
    """ The long exact sequence in compactly supported cohomology of
        0 -> F -> const -> cok -> 0.
    """
    cokernel, projection = sensing_cokernel(iota)
    sheaf, ambient = iota.source, iota.target
    complex_ = sheaf.complex
    degrees = range(complex_.dimension + 1)
    inclusion = {k: _layer_map(iota, complex_.cells_of_dim(k)) for k in degrees}
    quotient = {k: _layer_map(projection, complex_.cells_of_dim(k)) for k in degrees}

    les = les_from_ses(cochain_complex_c(sheaf), cochain_complex_c(ambient),
                       cochain_complex_c(cokernel), inclusion, quotient, LES_NAMES)
    logger.debug('sensing sequence: %s', les)
    return les


def _coordinate_sensors(nerve):
    """ map vertex -> set of basis covectors it measures """
    measured = {}
    for (vertex, space) in nerve.sensors.items():
        coordinates = set()
        for j in range(space.dim):
            column = [space.basis[i, j] for i in range(space.ambient)]
            support = [i for (i, value) in enumerate(column) if value != nerve.field.zero]
            if len(support) != 1:
                raise IncompatibleShapes('sensor `{}` does not measure basis covectors'.format(
                    vertex))
            coordinates.add(support[0])
        measured[vertex] = coordinates
    return measured


def evasion_sets(nerve):
    """ For sensors that each measure a set of basis covectors: the closed
        subcomplex where a covector goes unmeasured, with its number of
        connected components.
    """
    complex_ = nerve.complex
    measured = _coordinate_sensors(nerve)
    result = []
    for covector in range(nerve.ambient):
        detected = set()
        for (vertex, coordinates) in measured.items():
            if covector in coordinates:
                detected |= complex_.open_star(vertex)
        cells = [cell for cell in complex_.cells if cell not in detected]
        components = complex_.poset.connected_components(cells) if cells else []
        result.append(EvasionSet(covector=covector, cells=tuple(cells),
                                 components=len(components)))
    return result


def forced_section_count(les):
    """ dim H^0 of the cokernel, read off the rest of the sequence:
        the cokernel of H^0(F) -> H^0(const) plus the kernel of
        H^1(F) -> H^1(const).
    """
    def node(label):
        try:
            return les.node(label).dim
        except KeyError:
            return 0

    def rank(source, target):
        try:
            return les.map_between(source, target).rank()
        except KeyError:
            return 0

    f0, c0, f1, c1 = ['H^{}({})'.format(n, name) for n in (0, 1) for name in LES_NAMES[:2]]
    return (node(c0) - rank(f0, c0)) + (node(f1) - rank(f1, c1))


def forcing(les, known):
    """ The component count of the one evasion set left out of `known`.

        In the coordinate case the global sections of the cokernel are one
        per component of each evasion set, so the counts must add up to the
        forced dimension.
    """
    total = forced_section_count(les)
    unknown = total - sum(known)
    if unknown < 0:
        raise ValueError('known component counts {} exceed the forced total {}'.format(
            list(known), total))
    return unknown
