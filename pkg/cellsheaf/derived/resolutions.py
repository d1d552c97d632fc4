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


""" Canonical resolutions by elementary injectives and projectives.

    A projective resolution starts from the sum with one generator per cell
    of multiplicity the stalk dimension, maps it onto the object and repeats
    on the kernel.  An injective resolution does the same with the cokernel
    of the map into the canonical injective hull.  Each step drops the
    maximal cells of the current support, so the process stops within the
    length of the longest chain.
"""

from cellsheaf.derived.elementary import (
    ElementaryComplex, ElementaryMorphism, ElementarySum, is_projective)
from cellsheaf.exceptions import IncompatibleShapes, NotExact
from cellsheaf.linalg.chains import ChainComplex
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellCosheaf, CellSheaf
from cellsheaf.sheaves.morphisms import SheafMorphism
from cellsheaf.sheaves.standard import (
    INJECTIVE_COSHEAF, INJECTIVE_SHEAF, PROJECTIVE_COSHEAF, PROJECTIVE_SHEAF)

PROJECTIVE = 'proj'
INJECTIVE = 'inj'


def carry(rep, start, end):
    """ The structure map of `rep` from the stalk at `start` to the stalk at
        `end`, following the direction of its arrows.
    """
    if rep.covariant:
        return rep.transfer(start, end)
    return rep.transfer(end, start)


def projective_cover(kind, rep):
    """ (canonical projective sum, epimorphism onto rep) """
    generators = ElementarySum.canonical(kind, rep)
    source = generators.materialize()
    components = {}
    for cell in rep.complex.cells:
        blocks = [carry(rep, generators.generators[i].cell, cell)
                  for (i, _) in generators.present(cell)]
        components[cell] = Matrix.hstack(rep.field, rep.stalks[cell], blocks)
    return generators, SheafMorphism(source, rep, components)


def injective_hull(kind, rep):
    """ (canonical injective sum, monomorphism from rep) """
    generators = ElementarySum.canonical(kind, rep)
    target = generators.materialize()
    components = {}
    for cell in rep.complex.cells:
        blocks = [carry(rep, cell, generators.generators[j].cell)
                  for (j, _) in generators.present(cell)]
        components[cell] = Matrix.vstack(rep.field, rep.stalks[cell], blocks)
    return generators, SheafMorphism(rep, target, components)


class Resolution(object):
    """ An elementary complex with its augmentation.  For projective
        resolutions the augmentation maps degree 0 onto the object, for
        injective ones it maps the object into degree 0.
    """

    def __init__(self, direction, obj, elementary, augmentation):
        self.direction = direction
        self.obj = obj
        self.elementary = elementary
        self.augmentation = augmentation
        self._differentials = None

    def __repr__(self):
        return 'Resolution({}, {})'.format(self.direction, self.elementary)

    @property
    def kind(self):
        return self.elementary.kind

    def length(self):
        degrees = self.elementary.degrees()
        return max(abs(n) for n in degrees) if degrees else 0

    def materialized_differentials(self):
        if self._differentials is None:
            self._differentials = {n: m.materialize()
                                   for (n, m) in self.elementary.differentials.items()}
        return self._differentials

    def augmented_stalk_complex(self, cell):
        """ The stalk complex at `cell` with the object placed in degree -1 """
        elementary = self.elementary
        terms = {n: s.materialize() for (n, s) in elementary.sums.items()}
        dims = {n: term.stalks[cell] for (n, term) in terms.items()}
        dims[-1] = self.obj.stalks[cell]

        differentials = {n: m.components[cell]
                         for (n, m) in self.materialized_differentials().items()}
        if self.direction == PROJECTIVE:
            differentials[0] = self.augmentation.components[cell]
        else:
            differentials[-1] = self.augmentation.components[cell]

        dims.setdefault(0, 0)
        return ChainComplex(self.obj.field, dims, differentials,
                            homological=self.direction == PROJECTIVE)

    def exactness_failures(self):
        return [cell for cell in self.obj.complex.cells
                if not self.augmented_stalk_complex(cell).is_acyclic()]

    def check(self):
        self.elementary.check()
        self.augmentation.check()
        failures = self.exactness_failures()
        if failures:
            raise NotExact('resolution is not exact at cells {}'.format(', '.join(failures)))
        return self

    def materialize(self):
        return self.elementary.materialize()


def _chain_bound(complex_):
    return complex_.poset.longest_chain_length() + 1


def _projective_resolution(kind, rep):
    field = rep.field
    sums, differentials = {}, {}

    sums[0], augmentation = projective_cover(kind, rep)
    current = augmentation
    degree = 0
    while True:
        kernel, inclusion = current.kernel()
        if kernel.is_zero():
            break
        degree += 1
        if degree > _chain_bound(rep.complex):
            raise NotExact('projective resolution did not terminate')

        sums[degree], cover = projective_cover(kind, kernel)
        differential = inclusion.compose(cover)
        differentials[degree] = ElementaryMorphism.from_morphism(
            sums[degree], sums[degree - 1], differential)
        logger.debug('projective step %s: kernel of total dimension %s',
                     degree, kernel.total_dim())
        current = cover

    elementary = ElementaryComplex(kind, rep.complex, sums, differentials, True, field)
    return Resolution(PROJECTIVE, rep, elementary, augmentation)


def _injective_resolution(kind, rep):
    field = rep.field
    sums, differentials = {}, {}

    sums[0], augmentation = injective_hull(kind, rep)
    current = augmentation
    degree = 0
    while True:
        quotient, projection = current.cokernel()
        if quotient.is_zero():
            break
        degree += 1
        if degree > _chain_bound(rep.complex):
            raise NotExact('injective resolution did not terminate')

        sums[degree], hull = injective_hull(kind, quotient)
        differential = hull.compose(projection)
        differentials[degree - 1] = ElementaryMorphism.from_morphism(
            sums[degree - 1], sums[degree], differential)
        logger.debug('injective step %s: cokernel of total dimension %s',
                     degree, quotient.total_dim())
        current = hull

    elementary = ElementaryComplex(kind, rep.complex, sums, differentials, False, field)
    return Resolution(INJECTIVE, rep, elementary, augmentation)


def _require(rep, cls):
    if not isinstance(rep, cls):
        raise IncompatibleShapes('expected a {}, got {}'.format(cls.kind, type(rep).__name__))


def injective_resolution(sheaf):
    """ 0 -> F -> I^0 -> I^1 -> ... by elementary injective sheaves [s] """
    _require(sheaf, CellSheaf)
    return _injective_resolution(INJECTIVE_SHEAF, sheaf)


def projective_resolution(cosheaf):
    """ ... -> P_1 -> P_0 -> F -> 0 by elementary projective cosheaves """
    _require(cosheaf, CellCosheaf)
    return _projective_resolution(PROJECTIVE_COSHEAF, cosheaf)


def projective_resolution_sheaf(sheaf):
    """ ... -> P_1 -> P_0 -> F -> 0 by elementary projective sheaves {s} """
    _require(sheaf, CellSheaf)
    return _projective_resolution(PROJECTIVE_SHEAF, sheaf)


def injective_resolution_cosheaf(cosheaf):
    _require(cosheaf, CellCosheaf)
    return _injective_resolution(INJECTIVE_COSHEAF, cosheaf)


def resolve(rep, direction):
    """ The canonical resolution of `rep` in the given direction """
    if direction == PROJECTIVE:
        if isinstance(rep, CellSheaf):
            return projective_resolution_sheaf(rep)
        return projective_resolution(rep)
    if direction == INJECTIVE:
        if isinstance(rep, CellSheaf):
            return injective_resolution(rep)
        return injective_resolution_cosheaf(rep)
    raise ValueError('Unknown resolution direction `{}`'.format(direction))


def resolution_from_terms(kind, rep, sums, differentials, augmentation):
    """ Wrap a user supplied resolution after checking it.

        :param sums: degree -> ElementarySum (degrees 0, 1, ...)
        :param differentials: degree -> ElementaryMorphism leaving that
            degree, towards 0 for projective kinds and away from 0 otherwise
        :param augmentation: SheafMorphism P_0 -> rep or rep -> I^0 between
            the materialized degree 0 term and `rep`
        :raises NotExact: when the augmented complex is not exact
    """
    projective = is_projective(kind)
    elementary = ElementaryComplex(kind, rep.complex, sums, differentials, projective,
                                   rep.field)
    degree0 = elementary.term(0).materialize()
    ends = (augmentation.source, augmentation.target)
    if ends != ((degree0, rep) if projective else (rep, degree0)):
        raise IncompatibleShapes('augmentation does not join degree 0 and the object')

    return Resolution(PROJECTIVE if projective else INJECTIVE, rep, elementary,
                      augmentation).check()
