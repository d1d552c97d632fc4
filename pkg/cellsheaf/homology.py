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


""" Cochain and chain complexes of sheaves and cosheaves, their four
    (co)homology flavours and Cech homology of covers.
"""

from cellsheaf.exceptions import IncompatibleShapes, NotSimplicial
from cellsheaf.linalg.chains import ChainComplex
from cellsheaf.linalg.diagrams import colimit_over
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellCosheaf, CellSheaf
from cellsheaf.topology.cells import simplicial_signs

COMPACT = 'compact'
ORDINARY = 'ordinary'
BOREL_MOORE = 'bm'


def _graded_cells(complex_):
    return {k: complex_.cells_of_dim(k) for k in range(complex_.dimension + 1)}


def _coboundary(rep, sources, targets):
    """ The signed block matrix sum [s:t] M_{s,t} between two cell layers.
        For a sheaf the blocks map F(s) -> F(t), for a cosheaf F(t) -> F(s).
    """
    field, complex_ = rep.field, rep.complex
    blocks = {}
    for (j, s) in enumerate(sources):
        for (i, t) in enumerate(targets):
            sign = complex_.sign(s, t) if rep.covariant else complex_.sign(t, s)
            if sign:
                pair = (s, t) if rep.covariant else (t, s)
                blocks[(i, j)] = rep.maps[pair].scale(sign)

    return Matrix.block(field, [rep.stalks[t] for t in targets],
                        [rep.stalks[s] for s in sources], blocks)


def _require(rep, cls):
    if not isinstance(rep, cls):
        raise IncompatibleShapes('expected a {}, got {}'.format(cls.kind, type(rep).__name__))


def cochain_complex_c(sheaf):
    """ C^k = sum of the stalks on k-cells, d^k = sum [s:t] rho_{t,s} """
    _require(sheaf, CellSheaf)
    layers = _graded_cells(sheaf.complex)
    dims = {k: sheaf.total_dim(cells) for (k, cells) in layers.items()}
    differentials = {k: _coboundary(sheaf, layers[k], layers[k + 1])
                     for k in layers if k + 1 in layers}
    return ChainComplex(sheaf.field, dims, differentials)


def chain_complex_bm(cosheaf):
    """ C_k = sum of the stalks on k-cells, d_k = sum [s:t] r_{s,t} """
    _require(cosheaf, CellCosheaf)
    layers = _graded_cells(cosheaf.complex)
    dims = {k: cosheaf.total_dim(cells) for (k, cells) in layers.items()}
    differentials = {k: _coboundary(cosheaf, layers[k], layers[k - 1])
                     for k in layers if k - 1 in layers}
    return ChainComplex(cosheaf.field, dims, differentials, homological=True)


def compact_restriction(rep):
    """ Drop the cells lacking compact closure """
    return rep.restricted(rep.complex.compact_part())


def cohomology_c(sheaf, degree):
    return cochain_complex_c(sheaf).homology(degree)


def cohomology(sheaf, degree):
    return cohomology_c(compact_restriction(sheaf), degree)


def homology_bm(cosheaf, degree):
    return chain_complex_bm(cosheaf).homology(degree)


def homology(cosheaf, degree):
    return homology_bm(compact_restriction(cosheaf), degree)


def complex_for(rep, flavor=ORDINARY):
    """ The linear complex computing the requested flavour """
    if isinstance(rep, CellSheaf):
        if flavor == COMPACT:
            return cochain_complex_c(rep)
        if flavor == ORDINARY:
            return cochain_complex_c(compact_restriction(rep))
    else:
        if flavor == BOREL_MOORE:
            return chain_complex_bm(rep)
        if flavor == ORDINARY:
            return chain_complex_bm(compact_restriction(rep))

    raise ValueError('flavour `{}` does not apply to a {}'.format(flavor, rep.kind))


def betti_numbers(rep, flavor=ORDINARY):
    complex_ = complex_for(rep, flavor)
    top = max(rep.complex.dimension, 0)
    return complex_.betti_list(range(top + 1))


def euler_characteristic(rep, flavor=ORDINARY):
    """ Alternating sum of chain dimensions; equals the alternating sum of
        Betti numbers by rank-nullity.
    """
    complex_ = complex_for(rep, flavor)
    chains = complex_.euler_characteristic()
    logger.debug('euler characteristic %s: chains %s, homology %s',
                 flavor, chains, complex_.homology_euler_characteristic())
    return chains


class CechData(object):
    """ A cover described by its nerve, with a cosheaf of local values whose
        extension maps restrict from an intersection to a larger open set.
    """

    def __init__(self, cosheaf):
        _require(cosheaf, CellCosheaf)
        self.nerve = simplicial_signs(cosheaf.complex)
        self.values = cosheaf.rebuilt(self.nerve, cosheaf.stalks, cosheaf.maps)

    def validate(self):
        return self.values.validate()

    def chain_complex(self):
        return chain_complex_bm(self.values)


def cech_data_from_cosheaf(cosheaf):
    try:
        return CechData(cosheaf)
    except NotSimplicial:
        logger.error('cover nerve must be a simplicial complex')
        raise


def cech_homology(data, degree):
    return data.chain_complex().homology(degree).dim


def sheaf_homology_graph(sheaf):
    """ Sheaf homology of a sheaf on a 1-complex: H_0 is the colimit and
        H_1 = dim H_0 - chi, where chi = sum dim F(s) - sum_{v < e} dim F(v).

        :returns: (dim H_0, dim H_1)
    """
    _require(sheaf, CellSheaf)
    complex_ = sheaf.complex
    if complex_.dimension > 1:
        raise IncompatibleShapes('closed sheaf homology formula needs a 1-complex')

    chi = sheaf.total_dim() - sum(sheaf.stalks[v] for (v, _) in complex_.poset.covers)
    h0 = colimit_over(sheaf.diagram()).dim
    return h0, h0 - chi
