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


""" Finite direct sums of elementary injective and projective sheaves and
    cosheaves, kept as generators.

    A generator is a cell carrying a multiplicity.  Morphisms between sums of
    one kind are block matrices between generators, nonzero only where the
    supports allow a map: for cosheaves from the generator on s to the one
    on t when s <= t, for sheaves when t <= s.
"""

from collections import namedtuple

from cellsheaf.exceptions import IncompatibleShapes, ShapeMismatch
from cellsheaf.linalg.chains import ChainComplex
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.sheaves.complexes import CosheafComplex, SheafComplex
from cellsheaf.sheaves.morphisms import SheafMorphism
from cellsheaf.sheaves.standard import (
    INJECTIVE_COSHEAF, INJECTIVE_SHEAF, PROJECTIVE_COSHEAF, PROJECTIVE_SHEAF, elementary,
    representation_class)
from cellsheaf.sheaves.sums import direct_sum

Generator = namedtuple('Generator', ['cell', 'mult', 'tag'])

PROJECTIVE_KINDS = (PROJECTIVE_COSHEAF, PROJECTIVE_SHEAF)

DUAL_KIND = {
    PROJECTIVE_COSHEAF: INJECTIVE_SHEAF,
    INJECTIVE_SHEAF: PROJECTIVE_COSHEAF,
    PROJECTIVE_SHEAF: INJECTIVE_COSHEAF,
    INJECTIVE_COSHEAF: PROJECTIVE_SHEAF,
}


def is_projective(kind):
    return kind in PROJECTIVE_KINDS


def on_closure(kind):
    """ True for the kinds supported on the closure of their cell """
    return kind in (INJECTIVE_SHEAF, PROJECTIVE_COSHEAF)


def allowed(kind, complex_, source_cell, target_cell):
    """ Whether a nonzero map joins the generator on source_cell to the one
        on target_cell.
    """
    if representation_class(kind).covariant:
        return complex_.leq(target_cell, source_cell)
    return complex_.leq(source_cell, target_cell)


class ElementarySum(object):
    def __init__(self, kind, complex_, generators, field):
        self.kind = kind
        self.complex = complex_
        self.field = field
        self.generators = []
        for generator in generators:
            if not isinstance(generator, Generator):
                generator = Generator(*generator) if len(generator) == 3 else \
                    Generator(generator[0], generator[1], None)
            complex_.check_cell(generator.cell)
            if generator.mult:
                self.generators.append(generator)
        self._materialized = None

    def __repr__(self):
        return 'ElementarySum({}, {})'.format(self.kind, ' + '.join(
            '{}^{}'.format(g.cell, g.mult) for g in self.generators))

    def __len__(self):
        return len(self.generators)

    @classmethod
    def canonical(cls, kind, rep):
        """ One generator per cell, with the stalk dimension as multiplicity """
        return cls(kind, rep.complex,
                   [Generator(cell, rep.stalks[cell], None) for cell in rep.complex.cells],
                   rep.field)

    def total(self):
        return sum(g.mult for g in self.generators)

    def contains(self, index, cell):
        """ Whether generator `index` is nonzero at `cell` """
        base = self.generators[index].cell
        if on_closure(self.kind):
            return self.complex.leq(cell, base)
        return self.complex.leq(base, cell)

    def present(self, cell):
        """ (generator index, offset inside the stalk at `cell`) pairs """
        result, position = [], 0
        for (index, g) in enumerate(self.generators):
            if self.contains(index, cell):
                result.append((index, position))
                position += g.mult
        return result

    def materialize(self):
        if self._materialized is None:
            cls = representation_class(self.kind)
            if self.generators:
                self._materialized = direct_sum(*[
                    elementary(self.kind, self.complex, g.cell, g.mult, self.field)
                    for g in self.generators])
            else:
                self._materialized = cls(self.complex, {}, {}, self.field)
        return self._materialized

    def relabel(self, f, kind=None):
        """ The sum with every generator moved to its image under f """
        return ElementarySum(kind or self.kind, f.target,
                             [Generator(f(g.cell), g.mult, g.tag) for g in self.generators],
                             self.field)

    def dual(self):
        return ElementarySum(DUAL_KIND[self.kind], self.complex, self.generators, self.field)


class ElementaryMorphism(object):
    """ blocks[(j, i)] maps generator i of the source to generator j of the
        target and has shape (mult_j, mult_i).
    """

    def __init__(self, source, target, blocks=None):
        if source.kind != target.kind or source.complex != target.complex:
            raise IncompatibleShapes('elementary sums of different kinds or complexes')

        self.source = source
        self.target = target
        self.field = source.field
        self.blocks = {}
        for ((j, i), matrix) in (blocks or {}).items():
            s, t = source.generators[i], target.generators[j]
            if matrix.shape != (t.mult, s.mult):
                raise ShapeMismatch('block {} -> {} has shape {}, expected {}'.format(
                    s.cell, t.cell, matrix.shape, (t.mult, s.mult)))
            if matrix.is_zero():
                continue
            if not allowed(source.kind, source.complex, s.cell, t.cell):
                raise IncompatibleShapes('no nonzero map from the generator on {} to {}'.format(
                    s.cell, t.cell))
            self.blocks[(j, i)] = matrix

    def __repr__(self):
        return 'ElementaryMorphism({} -> {})'.format(self.source, self.target)

    def matrix(self):
        """ The induced map on the sums of generators """
        return Matrix.block(self.field,
                            [g.mult for g in self.target.generators],
                            [g.mult for g in self.source.generators],
                            self.blocks)

    def is_zero(self):
        return not self.blocks

    def compose(self, first):
        """ self after first """
        blocks = {}
        for ((k, i), inner) in first.blocks.items():
            for ((j, k2), outer) in self.blocks.items():
                if k2 != k:
                    continue
                product = outer @ inner
                blocks[(j, i)] = blocks[(j, i)] + product if (j, i) in blocks else product
        return ElementaryMorphism(first.source, self.target, blocks)

    def scale(self, scalar):
        return ElementaryMorphism(self.source, self.target, {
            key: matrix.scale(scalar) for (key, matrix) in self.blocks.items()})

    def materialize(self):
        """ The SheafMorphism between the materialized sums """
        source, target = self.source.materialize(), self.target.materialize()
        components = {}
        for cell in self.source.complex.cells:
            rows = {j: offset for (j, offset) in self.target.present(cell)}
            cols = {i: offset for (i, offset) in self.source.present(cell)}
            values = {}
            for ((j, i), matrix) in self.blocks.items():
                if j not in rows or i not in cols:
                    continue
                for r in range(matrix.rows):
                    for c in range(matrix.cols):
                        if matrix[r, c]:
                            values[(rows[j] + r, cols[i] + c)] = matrix[r, c]
            components[cell] = Matrix.from_dict(self.field, target.stalks[cell],
                                                source.stalks[cell], values)
        return SheafMorphism(source, target, components)

    @classmethod
    def from_morphism(cls, source, target, morphism):
        """ Read the generator blocks of a morphism between materialized sums.
            A map out of a projective generator is its value at the
            generator's cell; a map into an injective one is read off the
            rows at that cell.
        """
        blocks = {}
        if is_projective(source.kind):
            for (i, g) in enumerate(source.generators):
                column_start = dict(source.present(g.cell))[i]
                component = morphism.components[g.cell]
                for (j, row_start) in target.present(g.cell):
                    mult = target.generators[j].mult
                    blocks[(j, i)] = component.submatrix(
                        range(row_start, row_start + mult),
                        range(column_start, column_start + g.mult))
        else:
            for (j, g) in enumerate(target.generators):
                row_start = dict(target.present(g.cell))[j]
                component = morphism.components[g.cell]
                for (i, column_start) in source.present(g.cell):
                    mult = source.generators[i].mult
                    blocks[(j, i)] = component.submatrix(
                        range(row_start, row_start + g.mult),
                        range(column_start, column_start + mult))
        return cls(source, target, blocks)

    def relabel(self, f, source=None, target=None):
        return ElementaryMorphism(source or self.source.relabel(f),
                                  target or self.target.relabel(f), self.blocks)

    def dual(self):
        return ElementaryMorphism(self.target.dual(), self.source.dual(), {
            (i, j): matrix.transpose() for ((j, i), matrix) in self.blocks.items()})


class ElementaryComplex(object):
    """ A bounded complex whose terms are elementary sums of one kind.
        differentials[n] leaves degree n and lands in degree n + step.
    """

    def __init__(self, kind, complex_, sums, differentials, homological, field):
        self.kind = kind
        self.complex = complex_
        self.field = field
        self.homological = homological
        self.step = -1 if homological else 1
        self.sums = {n: s for (n, s) in sums.items() if s.total()}
        self.differentials = {}
        for (n, morphism) in differentials.items():
            if n in self.sums and n + self.step in self.sums and not morphism.is_zero():
                self.differentials[n] = morphism

    def __repr__(self):
        return 'ElementaryComplex({}, {})'.format(self.kind, {
            n: s.total() for (n, s) in sorted(self.sums.items())})

    def degrees(self):
        return sorted(self.sums)

    def term(self, degree):
        return self.sums.get(degree) or ElementarySum(self.kind, self.complex, [], self.field)

    def d(self, degree):
        morphism = self.differentials.get(degree)
        if morphism is None:
            return ElementaryMorphism(self.term(degree), self.term(degree + self.step))
        return morphism

    def generator_complex(self):
        """ The complex of generator spaces.  For projective kinds this is the
            termwise colimit, for injective kinds the termwise limit.
        """
        return ChainComplex(self.field,
                            {n: s.total() for (n, s) in self.sums.items()},
                            {n: m.matrix() for (n, m) in self.differentials.items()},
                            homological=self.homological)

    def materialize(self):
        terms = {n: s.materialize() for (n, s) in self.sums.items()}
        if not terms:
            terms = {0: self.term(0).materialize()}
        differentials = {n: m.materialize() for (n, m) in self.differentials.items()}
        cls = SheafComplex if representation_class(self.kind).covariant else CosheafComplex
        return cls(terms, differentials, self.homological)

    def check(self):
        """ d d = 0 on generators, which forces it cellwise """
        for n in self.degrees():
            nxt = n + self.step
            if not self.d(nxt).compose(self.d(n)).is_zero():
                raise IncompatibleShapes('d d is not zero leaving degree {}'.format(n))
        return self

    def relabel(self, f, kind=None):
        sums = {n: s.relabel(f, kind) for (n, s) in self.sums.items()}
        differentials = {n: ElementaryMorphism(sums[n], sums[n + self.step], m.blocks)
                         for (n, m) in self.differentials.items()}
        return ElementaryComplex(kind or self.kind, f.target, sums, differentials,
                                 self.homological, self.field)

    def dual(self):
        """ The linear dual: a degree m term stays in degree m and the
            differentials reverse, so the indexing convention flips.
        """
        sums = {n: s.dual() for (n, s) in self.sums.items()}
        differentials = {n + self.step: ElementaryMorphism(sums[n + self.step], sums[n], {
            (i, j): matrix.transpose() for ((j, i), matrix) in m.blocks.items()})
            for (n, m) in self.differentials.items()}
        return ElementaryComplex(DUAL_KIND[self.kind], self.complex, sums, differentials,
                                 not self.homological, self.field)
