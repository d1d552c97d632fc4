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


""" Bounded complexes of sheaves or cosheaves over one cell complex """

from cellsheaf.exceptions import IncompatibleShapes, NotCommuting
from cellsheaf.linalg.chains import ChainComplex
from cellsheaf.linalg.spaces import Quotient, Subspace
from cellsheaf.sheaves.morphisms import SheafMorphism


class RepresentationComplex(object):
    """ terms[n] is a sheaf or cosheaf; differentials[n] leaves degree n and
        lands in degree n + step.
    """

    default_homological = False

    def __init__(self, terms, differentials=None, homological=None):
        self.terms = {n: term for (n, term) in terms.items()}
        if not self.terms:
            raise IncompatibleShapes('a complex needs at least one term')

        first = next(iter(self.terms.values()))
        self.field = first.field
        self.complex = first.complex
        self.homological = self.default_homological if homological is None else homological
        self.step = -1 if self.homological else 1

        self.differentials = {}
        for (n, morphism) in (differentials or {}).items():
            if morphism.source != self.terms.get(n) or \
                    morphism.target != self.terms.get(n + self.step):
                raise IncompatibleShapes('differential leaving degree {} has wrong ends'.format(n))
            self.differentials[n] = morphism

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, {
            n: term.total_dim() for (n, term) in sorted(self.terms.items())})

    def degrees(self):
        return sorted(self.terms)

    def term(self, degree):
        return self.terms.get(degree)

    def d(self, degree):
        morphism = self.differentials.get(degree)
        if morphism is not None:
            return morphism
        source, target = self.terms.get(degree), self.terms.get(degree + self.step)
        if source is None or target is None:
            return None
        return SheafMorphism(source, target)

    def stalk_complex(self, cell):
        dims = {n: term.stalks[cell] for (n, term) in self.terms.items()}
        differentials = {n: morphism.components[cell]
                         for (n, morphism) in self.differentials.items()}
        return ChainComplex(self.field, dims, differentials, homological=self.homological)

    def check(self):
        """ Raise unless every differential is natural and d d = 0 cellwise """
        for morphism in self.differentials.values():
            morphism.check()
        for cell in self.complex.cells:
            if not self.stalk_complex(cell).is_complex():
                raise NotCommuting('d d is not zero at cell {}'.format(cell))
        return self

    def homology_object(self, degree):
        """ The cellwise (co)homology in `degree`, with the maps it inherits """
        term = self.terms.get(degree)
        if term is None:
            return None

        quotients, cycle_spaces = {}, {}
        for cell in self.complex.cells:
            chains = self.stalk_complex(cell)
            cycles = Subspace(chains.cycles(degree))
            boundaries = Subspace(chains.boundaries(degree))
            cycle_spaces[cell] = cycles
            quotients[cell] = Quotient.of(Subspace(cycles.coordinates(boundaries.basis)))

        maps = {}
        for pair in self.complex.poset.covers:
            (start, end) = term.arrow_ends(*pair)
            lifted = term.maps[pair] @ cycle_spaces[start].basis @ quotients[start].section
            maps[pair] = quotients[end].projection @ cycle_spaces[end].coordinates(lifted)

        return term.rebuilt(self.complex, {cell: q.dim for (cell, q) in quotients.items()}, maps)

    def shifted(self, amount):
        """ Reindex so that degree n becomes degree n + amount """
        return type(self)(
            {n + amount: term for (n, term) in self.terms.items()},
            {n + amount: morphism for (n, morphism) in self.differentials.items()},
            self.homological)


class SheafComplex(RepresentationComplex):
    default_homological = False


class CosheafComplex(RepresentationComplex):
    default_homological = True


def concentrated(rep, degree=0, homological=None):
    """ The complex with `rep` alone in `degree` """
    cls = SheafComplex if rep.kind == 'sheaf' else CosheafComplex
    return cls({degree: rep}, {}, homological)