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


""" Sections and the functors induced by maps of cell complexes: pullback,
    pushforward (right Kan extension), pushforward with open supports (left
    Kan extension) and pushforward with compact supports.
"""

from cellsheaf.exceptions import IncompatibleShapes, UnknownElement
from cellsheaf.linalg.diagrams import colimit_over, limit_over
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.linalg.spaces import Subspace
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellSheaf
from cellsheaf.sheaves.hom import hom_space
from cellsheaf.sheaves.morphisms import SheafMorphism
from cellsheaf.topology.maps import require_cellular

PULLBACK_PUSHFORWARD = 'pullback-pushforward'
OPEN_PUSHFORWARD_PULLBACK = 'open-pushforward-pullback'


def sections(rep, cells=None):
    """ Sections over `cells` (everything by default): the limit of a
        sheaf's restricted diagram or the colimit of a cosheaf's.
    """
    cells = rep.complex.cells if cells is None else list(cells)
    for cell in cells:
        if cell not in rep.complex:
            raise UnknownElement('Unknown cell `{}`'.format(cell))

    diagram = rep.diagram(cells)
    if rep.covariant:
        return limit_over(diagram)
    return colimit_over(diagram)


def global_sections(rep):
    return sections(rep)


def pullback(f, rep):
    """ f*G(x) = G(f(x)) with the composite maps along f(x) <= f(x') """
    stalks = {x: rep.stalks[f(x)] for x in f.source.cells}
    maps = {(x, y): rep.transfer(f(x), f(y)) for (x, y) in f.source.poset.covers}
    return rep.rebuilt(f.source, stalks, maps)


def _limit_stalks(rep, index_sets):
    return {y: limit_over(rep.diagram(cells)) for (y, cells) in index_sets.items()}


def _colimit_stalks(rep, index_sets):
    return {y: colimit_over(rep.diagram(cells)) for (y, cells) in index_sets.items()}


def _assemble(rep, target, values, restrict):
    """ Build the pushed representation from per-cell limits or colimits.
        `restrict(low, high)` yields the matrix on the cover low < high.
    """
    stalks = {y: values[y].dim for y in target.cells}
    maps = {(low, high): restrict(low, high) for (low, high) in target.poset.covers}
    for y in target.cells:
        logger.debug('pushed stalk at %s has dimension %s', y, stalks[y])
    return rep.rebuilt(target, stalks, maps)


def pushforward(f, rep):
    """ f_*: limits over f^-1(U_y) for sheaves, colimits for cosheaves """
    index_sets = {y: f.preimage_up(y) for y in f.target.cells}
    if rep.covariant:
        values = _limit_stalks(rep, index_sets)
        return _assemble(rep, f.target, values,
                         lambda low, high: values[low].restrict_to(values[high]))

    values = _colimit_stalks(rep, index_sets)
    return _assemble(rep, f.target, values,
                     lambda low, high: values[high].include_into(values[low]))


def pushforward_open(f, rep):
    """ f_dagger: colimits over f^-1(closure y) for sheaves, limits for
        cosheaves.
    """
    index_sets = {y: f.preimage_down(y) for y in f.target.cells}
    if rep.covariant:
        values = _colimit_stalks(rep, index_sets)
        return _assemble(rep, f.target, values,
                         lambda low, high: values[low].include_into(values[high]))

    values = _limit_stalks(rep, index_sets)
    return _assemble(rep, f.target, values,
                     lambda low, high: values[high].restrict_to(values[low]))


class CompactStalk(object):
    """ Sections over a fiber that vanish on the cells whose closure meets
        the fiber non-compactly.
    """

    def __init__(self, sheaf, fiber, forbidden):
        self.limit = limit_over(sheaf.diagram(fiber))
        self.cells = self.limit.diagram.objects
        field = sheaf.field

        constraint = Matrix.vstack(field, self.limit.dim,
                                   [self.limit.projection(c) for c in self.cells
                                    if c in forbidden])
        self.basis = self.limit.space.basis @ constraint.kernel_basis()
        self.field = field

    @property
    def dim(self):
        return self.basis.cols

    def value(self, cell):
        """ The map f_!F(tau) -> F(cell) for a cell in the fiber """
        return self.basis.select_rows(self.limit.diagram.block_rows(cell))


def _compact_restriction(sheaf, low_stalk, high_stalk, low, high):
    """ Send s to the t agreeing with rho(s) on every pair lambda <= sigma of
        fiber cells.  Where the matching system has several solutions the
        one with free coordinates zero is used; where it has none the map is
        zero.
    """
    field = sheaf.field
    if low_stalk.dim == 0 or high_stalk.dim == 0:
        return Matrix.zeros(field, high_stalk.dim, low_stalk.dim)

    pairs = [(lam, sig) for lam in low_stalk.cells for sig in high_stalk.cells
             if sheaf.complex.leq(lam, sig)]

    lhs = Matrix.vstack(field, high_stalk.dim,
                        [high_stalk.value(sig) for (_, sig) in pairs])
    rhs = Matrix.vstack(field, low_stalk.dim,
                        [sheaf.restriction(lam, sig) @ low_stalk.value(lam)
                         for (lam, sig) in pairs])

    # s is matched exactly when rhs s lies in the column space of lhs
    stacked = Matrix.hstack(field, lhs.rows, [lhs, -rhs])
    null = stacked.kernel_basis()
    solvable = Subspace.span(null.select_rows(range(high_stalk.dim, stacked.cols)))

    complement = solvable.complement_positions()
    if complement:
        logger.warning('compactly supported restriction %s -> %s has no matching '
                       'section on %s directions; using zero there', low, high, len(complement))

    solutions = lhs.solve(rhs @ solvable.basis) if solvable.dim else \
        Matrix.zeros(field, high_stalk.dim, 0)
    change = Matrix.hstack(field, low_stalk.dim, [
        solvable.basis,
        Matrix.identity(field, low_stalk.dim).select_columns(complement)])
    padded = Matrix.hstack(field, high_stalk.dim, [
        solutions, Matrix.zeros(field, high_stalk.dim, len(complement))])
    return padded @ change.inverse()


def pushforward_compact(f, sheaf):
    """ f_! along a cellular map, defined for sheaves only """
    require_cellular(f)
    if not isinstance(sheaf, CellSheaf):
        raise IncompatibleShapes('pushforward with compact supports is defined for sheaves')

    values = {}
    for y in f.target.cells:
        fiber = f.fiber(y)
        forbidden = frozenset(x for x in fiber if not f.fiber_compact[x])
        values[y] = CompactStalk(sheaf, fiber, forbidden)

    return _assemble(sheaf, f.target, values,
                     lambda low, high: _compact_restriction(
                         sheaf, values[low], values[high], low, high))


def _stack_to_limit(limit, columns_by_cell, field, width):
    """ Coordinates in `limit` of the vector whose block at each diagram
        object is `columns_by_cell[object]`.
    """
    ambient = Matrix.vstack(field, width, [columns_by_cell[obj] for obj in limit.diagram.objects])
    return limit.space.coordinates(ambient)


def pushforward_unit(f, sheaf):
    """ eta: G -> f_* f* G for a sheaf G on the target """
    pulled = pullback(f, sheaf)
    pushed = pushforward(f, pulled)
    components = {}
    for y in f.target.cells:
        limit = limit_over(pulled.diagram(f.preimage_up(y)))
        components[y] = _stack_to_limit(
            limit, {x: sheaf.restriction(y, f(x)) for x in limit.diagram.objects},
            sheaf.field, sheaf.stalks[y])
    return SheafMorphism(sheaf, pushed, components)


def pushforward_counit(f, sheaf):
    """ epsilon: f* f_* F -> F for a sheaf F on the source """
    pushed = pushforward(f, sheaf)
    back = pullback(f, pushed)
    components = {}
    for x in f.source.cells:
        limit = limit_over(sheaf.diagram(f.preimage_up(f(x))))
        components[x] = limit.projection(x)
    return SheafMorphism(back, sheaf, components)


def open_unit(f, sheaf):
    """ eta: F -> f* f_dagger F for a sheaf F on the source """
    pushed = pushforward_open(f, sheaf)
    back = pullback(f, pushed)
    components = {}
    for x in f.source.cells:
        colimit = colimit_over(sheaf.diagram(f.preimage_down(f(x))))
        components[x] = colimit.injection(x)
    return SheafMorphism(sheaf, back, components)


def open_counit(f, sheaf):
    """ epsilon: f_dagger f* G -> G for a sheaf G on the target """
    pulled = pullback(f, sheaf)
    pushed = pushforward_open(f, pulled)
    components = {}
    for y in f.target.cells:
        colimit = colimit_over(pulled.diagram(f.preimage_down(y)))
        legs = Matrix.hstack(sheaf.field, sheaf.stalks[y],
                             [sheaf.restriction(f(x), y) for x in colimit.diagram.objects])
        components[y] = legs @ colimit.space.section
    return SheafMorphism(pushed, sheaf, components)


def _independent(morphisms, field):
    if not morphisms:
        return True
    columns = []
    for morphism in morphisms:
        columns.append([value for cell in sorted(morphism.components)
                        for row in morphism.components[cell].to_lists() for value in row])
    matrix = Matrix.from_columns(field, columns, len(columns[0]))
    return matrix.rank() == len(morphisms)


def check_adjunction(pair, f, source_sheaf, target_sheaf):
    """ Verify an adjunction on explicit sheaves by transporting a basis of
        one hom space through the unit or counit.

        :param pair: PULLBACK_PUSHFORWARD compares Hom(f*G, F) with
            Hom(G, f_*F); OPEN_PUSHFORWARD_PULLBACK compares Hom(f_dagger F, G)
            with Hom(F, f*G)
        :param source_sheaf: F, a sheaf on f.source
        :param target_sheaf: G, a sheaf on f.target
    """
    F, G = source_sheaf, target_sheaf
    if pair == PULLBACK_PUSHFORWARD:
        left = hom_space(pullback(f, G), F)
        right = hom_space(G, pushforward(f, F))
        counit = pushforward_counit(f, F)
        pulled_g = pullback(f, G)
        back = pullback(f, pushforward(f, F))
        transported = [counit.compose(SheafMorphism(
            pulled_g, back, {x: phi.components[f(x)] for x in f.source.cells}))
            for phi in right.basis]
    elif pair == OPEN_PUSHFORWARD_PULLBACK:
        left = hom_space(F, pullback(f, G))
        right = hom_space(pushforward_open(f, F), G)
        unit = open_unit(f, F)
        back = pullback(f, pushforward_open(f, F))
        pulled_g = pullback(f, G)
        transported = [SheafMorphism(
            back, pulled_g, {x: phi.components[f(x)] for x in f.source.cells}).compose(unit)
            for phi in right.basis]
    else:
        raise ValueError('Unknown adjoint pair `{}`'.format(pair))

    ok = (left.dim == right.dim and
          all(m.is_natural() for m in transported) and
          _independent(transported, F.field))
    logger.debug('adjunction %s: %s vs %s', pair, left.dim, right.dim)
    return ok
