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


""" The equivalence P between sheaves and complexes of elementary
    projective cosheaves, its inverse P^ and Verdier duality.

    P(F) places [s^]^F(s) in homological degree -dim s with differential
    [s:t] rho_{t,s}.  P^ sends a cosheaf G to [s]^G(s) in cohomological
    degree -dim s with differential [s:t] r_{s,t}.  On complexes the
    internal degree is added to the cell dimension and the maps coming from
    the complex pick up the sign (-1)^dim s.
"""

from cellsheaf.derived.elementary import (
    ElementaryComplex, ElementaryMorphism, ElementarySum, Generator)
from cellsheaf.derived.resolutions import carry
from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.linalg.chains import mapping_cone
from cellsheaf.linalg.field import RATIONALS
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.sheaves.base import CellCosheaf, CellSheaf
from cellsheaf.sheaves.complexes import CosheafComplex, SheafComplex, concentrated
from cellsheaf.sheaves.morphisms import SheafMorphism
from cellsheaf.sheaves.standard import INJECTIVE_SHEAF, PROJECTIVE_COSHEAF, constant_sheaf


def _as_complex(obj, rep_cls, complex_cls):
    if isinstance(obj, rep_cls):
        return concentrated(obj, 0)
    if isinstance(obj, complex_cls):
        return obj
    raise IncompatibleShapes('expected a {} or a complex of them, got {}'.format(
        rep_cls.kind, type(obj).__name__))


def _assemble(kind, complex_, field, entries, total_degree, homological, internal, external):
    """ Lay out generators (cell, degree) by total degree and build the
        differentials.

        :param entries: list of (cell, degree, representation)
        :param internal: (rep, cell) -> list of (other cell, block) for the
            differential inside one term
        :param external: (degree, cell) -> (other degree, block) or None for
            the map coming from the complex
    """
    layout = {}
    for (cell, degree, rep) in entries:
        if rep.stalks[cell]:
            layout.setdefault(total_degree(cell, degree), []).append(
                Generator(cell, rep.stalks[cell], degree))

    order = complex_.index
    sums = {}
    for (total, generators) in layout.items():
        generators.sort(key=lambda g: (g.tag, order[g.cell]))
        sums[total] = ElementarySum(kind, complex_, generators, field)
    index = {total: {(g.cell, g.tag): k for (k, g) in enumerate(s.generators)}
             for (total, s) in sums.items()}
    reps = {degree: rep for (_, degree, rep) in entries}

    step = -1 if homological else 1
    differentials = {}
    for (total, source) in sums.items():
        target_total = total + step
        if target_total not in sums:
            continue
        blocks = {}
        for (i, g) in enumerate(source.generators):
            for (other, block) in internal(reps[g.tag], g.cell):
                j = index[target_total].get((other, g.tag))
                if j is not None:
                    blocks[(j, i)] = block
            hop = external(g.tag, g.cell)
            if hop is not None:
                j = index[target_total].get((g.cell, hop[0]))
                if j is not None:
                    blocks[(j, i)] = hop[1]
        differentials[total] = ElementaryMorphism(source, sums[target_total], blocks)

    return ElementaryComplex(kind, complex_, sums, differentials, homological, field)


def _cohomological_terms(chain):
    """ (degree -> term, degree -> SheafMorphism to degree + 1) with the
        indexing made cohomological.
    """
    if not chain.homological:
        return dict(chain.terms), dict(chain.differentials)
    return ({-n: term for (n, term) in chain.terms.items()},
            {-n: morphism for (n, morphism) in chain.differentials.items()})


def _homological_terms(chain):
    if chain.homological:
        return dict(chain.terms), dict(chain.differentials)
    return ({-n: term for (n, term) in chain.terms.items()},
            {-n: morphism for (n, morphism) in chain.differentials.items()})


def equivalence_P(obj):
    """ The complex of elementary projective cosheaves attached to a sheaf
        or a complex of sheaves.
    """
    chain = _as_complex(obj, CellSheaf, SheafComplex)
    complex_, field = chain.complex, chain.field
    terms, differentials = _cohomological_terms(chain)

    def internal(rep, cell):
        return [(coface, rep.maps[(cell, coface)].scale(complex_.sign(cell, coface)))
                for coface in complex_.cofaces(cell)]

    def external(degree, cell):
        morphism = differentials.get(degree)
        if morphism is None:
            return None
        return (degree + 1, morphism.components[cell].scale((-1) ** complex_.dim(cell)))

    entries = [(cell, n, term) for (n, term) in terms.items() for cell in complex_.cells]
    return _assemble(PROJECTIVE_COSHEAF, complex_, field, entries,
                     lambda cell, n: -(n + complex_.dim(cell)), True, internal, external)


def equivalence_P_hat(obj):
    """ The complex of elementary injective sheaves attached to a cosheaf or
        a complex of cosheaves.
    """
    chain = _as_complex(obj, CellCosheaf, CosheafComplex)
    complex_, field = chain.complex, chain.field
    terms, differentials = _homological_terms(chain)

    def internal(rep, cell):
        return [(face, rep.maps[(face, cell)].scale(complex_.sign(face, cell)))
                for face in complex_.faces(cell)]

    def external(degree, cell):
        morphism = differentials.get(degree)
        if morphism is None:
            return None
        return (degree - 1, morphism.components[cell].scale((-1) ** complex_.dim(cell)))

    entries = [(cell, h, term) for (h, term) in terms.items() for cell in complex_.cells]
    return _assemble(INJECTIVE_SHEAF, complex_, field, entries,
                     lambda cell, h: -(h + complex_.dim(cell)), False, internal, external)


def equivalence_P_morphism(alpha):
    """ P applied to a morphism of sheaves: degree -> ElementaryMorphism """
    source, target = equivalence_P(alpha.source), equivalence_P(alpha.target)
    result = {}
    for degree in sorted(set(source.degrees()) | set(target.degrees())):
        s, t = source.term(degree), target.term(degree)
        index = {g.cell: j for (j, g) in enumerate(t.generators)}
        blocks = {}
        for (i, g) in enumerate(s.generators):
            if g.cell in index:
                blocks[(index[g.cell], i)] = alpha.components[g.cell]
        result[degree] = ElementaryMorphism(s, t, blocks)
    return source, target, result


def verdier_dual(obj):
    """ D = V P: the linear dual of P, a complex of elementary injective
        sheaves.
    """
    return equivalence_P(obj).dual()


def dualizing_complex(complex_, field=RATIONALS):
    return verdier_dual(constant_sheaf(complex_, 1, field))


def is_quasi_isomorphism(source, target, components):
    """ Cellwise mapping cone acyclicity of a morphism of representation
        complexes.

        :param components: degree -> SheafMorphism
    """
    for cell in source.complex.cells:
        pointwise = {n: morphism.components[cell] for (n, morphism) in components.items()}
        cone = mapping_cone(source.stalk_complex(cell), target.stalk_complex(cell), pointwise)
        if not cone.is_acyclic():
            return False
    return True


def _koszul_carry(sheaf, start, end):
    dim = sheaf.complex.dim(end)
    return carry(sheaf, start, end).scale((-1) ** (dim * (dim + 1) // 2))


def comparison(sheaf):
    """ The coaugmentation F -> P^P(F) into the degree 0 term.  The block
        into the generator on c carries the sign (-1)^(d(d+1)/2), d = dim c,
        so that it commutes with both halves of the differential.

        :returns: (P^P(F) as an ElementaryComplex, SheafMorphism)
    """
    hat = equivalence_P_hat(equivalence_P(sheaf).materialize())
    degree0 = hat.term(0)
    components = {}
    for cell in sheaf.complex.cells:
        blocks = [_koszul_carry(sheaf, cell, degree0.generators[j].cell)
                  for (j, _) in degree0.present(cell)]
        components[cell] = Matrix.vstack(sheaf.field, sheaf.stalks[cell], blocks)
    return hat, SheafMorphism(sheaf, degree0.materialize(), components)


def check_comparison(sheaf):
    """ True when F -> P^P(F) is a quasi-isomorphism """
    hat, coaugmentation = comparison(sheaf)
    return is_quasi_isomorphism(concentrated(sheaf, 0), hat.materialize(),
                                {0: coaugmentation})


def compactly_supported_via_P(sheaf):
    """ degree i -> dim H_{-i}(P(F)), to compare with H^i_c(F) """
    chains = equivalence_P(sheaf).generator_complex()
    return {-n: chains.homology(n).dim for n in chains.degrees()}
