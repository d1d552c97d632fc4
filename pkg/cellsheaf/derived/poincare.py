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


""" Poincare duality on closed manifold complexes: sheaf cohomology in
    degree i against sheaf homology in degree n - i.
"""

from cellsheaf.containers import PoincareRow
from cellsheaf.derived.functors import sheaf_homology
from cellsheaf.exceptions import NotManifoldData
from cellsheaf.homology import cohomology, homology_bm
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellCosheaf
from cellsheaf.topology.subdivision import dual_complex


def check_manifold(complex_):
    """ Raise NotManifoldData unless the complex is compact, pure and every
        codimension one cell has exactly two cofaces.
    """
    top = complex_.dimension
    for cell in complex_.cells:
        if not complex_.is_compact(cell):
            raise NotManifoldData('cell `{}` lacks compact closure'.format(cell))
        if not complex_.cofaces(cell) and complex_.dim(cell) != top:
            raise NotManifoldData('maximal cell `{}` has dimension {} below {}'.format(
                cell, complex_.dim(cell), top))

    for cell in complex_.cells_of_dim(top - 1):
        count = len(complex_.cofaces(cell))
        if count != 2:
            raise NotManifoldData('cell `{}` has {} top dimensional cofaces'.format(cell, count))


def sheaf_on_dual(sheaf, dual):
    """ The sheaf read as a cosheaf on the dual cell structure """
    return CellCosheaf(dual, sheaf.stalks,
                       {(coface, face): matrix for ((face, coface), matrix) in sheaf.maps.items()},
                       sheaf.field)


def poincare_check(complex_, sheaf, dual=None):
    """ Compare H^i(X; F) with H_{n-i}(X; F) for every i.

        :param dual: the dual complex, built from `complex_` when omitted
        :returns: list of PoincareRow
        :raises NotManifoldData: when the complex is not a closed manifold
            complex or the dual fails validation
    """
    check_manifold(complex_)
    if dual is None:
        dual, _ = dual_complex(complex_)
    report = dual.validate()
    if not report.ok:
        raise NotManifoldData('dual structure is invalid: {}'.format('; '.join(report.describe())))

    top = complex_.dimension
    homology = sheaf_homology(sheaf)
    cosheaf = sheaf_on_dual(sheaf, dual)

    rows = []
    for i in range(top + 1):
        upper = cohomology(sheaf, i).dim
        lower = homology[top - i]
        through_dual = homology_bm(cosheaf, top - i).dim
        logger.debug('poincare degree %s: cohomology %s, homology %s, dual cells %s',
                     i, upper, lower, through_dual)
        rows.append(PoincareRow(degree=i, cohomology=upper, homology=lower,
                                ok=upper == lower == through_dual))
    return rows
