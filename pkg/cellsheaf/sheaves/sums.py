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


""" Direct sums, changes of basis and decomposition checks """

from cellsheaf.exceptions import ShapeMismatch
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.sheaves.morphisms import SheafMorphism


def direct_sum(*reps):
    """ The blockwise sum of representations of one kind on one complex,
        summands stacked in argument order.
    """
    if not reps:
        raise ShapeMismatch('direct sum of nothing')

    first = reps[0]
    for rep in reps[1:]:
        if type(rep) is not type(first) or rep.complex != first.complex:
            raise ShapeMismatch('summands live on different complexes or kinds')

    field = first.field
    stalks = {cell: sum(rep.stalks[cell] for rep in reps) for cell in first.complex.cells}
    maps = {pair: Matrix.direct_sum(field, [rep.maps[pair] for rep in reps])
            for pair in first.complex.poset.covers}
    return first.rebuilt(first.complex, stalks, maps)


def summand_inclusions(*reps):
    """ The canonical morphisms from each summand into the direct sum """
    total = direct_sum(*reps)
    result = []
    for (index, rep) in enumerate(reps):
        components = {}
        for cell in total.complex.cells:
            before = sum(r.stalks[cell] for r in reps[:index])
            positions = range(before, before + rep.stalks[cell])
            components[cell] = Matrix.identity(total.field, total.stalks[cell]) \
                .select_columns(positions)
        result.append(SheafMorphism(rep, total, components))
    return total, result


def conjugate(rep, changes):
    """ Transport `rep` along invertible changes of basis P_c.  The new map
        on a cover is P_end M P_start^-1.

        :param changes: map cell -> invertible Matrix; missing cells keep
            their basis
        :returns: (conjugated representation, isomorphism rep -> result)
    """
    field = rep.field
    full = {cell: changes.get(cell) or Matrix.identity(field, rep.stalks[cell])
            for cell in rep.complex.cells}
    inverses = {cell: matrix.inverse() for (cell, matrix) in full.items()}

    maps = {}
    for pair in rep.complex.poset.covers:
        (start, end) = rep.arrow_ends(*pair)
        maps[pair] = full[end] @ rep.maps[pair] @ inverses[start]

    result = rep.rebuilt(rep.complex, rep.stalks, maps)
    return result, SheafMorphism(rep, result, full)


def is_decomposition(rep, parts, changes):
    """ True when `changes` is a natural isomorphism from `rep` onto the
        direct sum of `parts`.
    """
    total = direct_sum(*parts)
    if total.stalks != rep.stalks:
        return False

    try:
        witness = SheafMorphism(rep, total, changes)
    except ShapeMismatch:
        return False

    return witness.is_natural() and witness.is_isomorphism()
