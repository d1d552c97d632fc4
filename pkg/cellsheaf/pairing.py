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


""" The coend pairing of a cosheaf with a sheaf on the same complex.

    G (x) F is the quotient of the sum over cells w of G(w) (x) F(w) by the
    relations r(g) (x) f ~ g (x) rho(f) for every cover s < t, g in G(t) and
    f in F(s).  Covers suffice; longer relations follow by composing.
    Tensor bases are cosheaf first, in lexicographic pair order.
"""

from cellsheaf.exceptions import ShapeMismatch
from cellsheaf.linalg.chains import ChainComplex
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.linalg.spaces import cokernel
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellCosheaf, CellSheaf
from cellsheaf.util import offsets


class CoendResult(object):
    def __init__(self, cosheaf, sheaf, quotient, block_offsets):
        self.cosheaf = cosheaf
        self.sheaf = sheaf
        self.quotient = quotient
        self.block_offsets = block_offsets

    def __repr__(self):
        return 'CoendResult(dim={})'.format(self.dim)

    @property
    def dim(self):
        return self.quotient.dim

    def block_size(self, cell):
        return self.cosheaf.stalks[cell] * self.sheaf.stalks[cell]

    def injection(self, cell):
        """ G(w) (x) F(w) -> G (x) F """
        start = self.block_offsets[cell]
        return self.quotient.projection.select_columns(
            range(start, start + self.block_size(cell)))


def _check_pair(cosheaf, sheaf):
    if not isinstance(cosheaf, CellCosheaf) or not isinstance(sheaf, CellSheaf):
        raise ShapeMismatch('the coend pairs a cosheaf with a sheaf')
    if cosheaf.complex != sheaf.complex:
        raise ShapeMismatch('cosheaf and sheaf live on different complexes')


def relation_matrix(cosheaf, sheaf):
    """ Columns are the exchange relations, one block per cover """
    field, complex_ = sheaf.field, sheaf.complex
    cells = complex_.cells
    block_offsets, total = offsets((cell, cosheaf.stalks[cell] * sheaf.stalks[cell])
                                   for cell in cells)

    columns = []
    for (face, coface) in complex_.covers:
        extension = cosheaf.maps[(face, coface)]
        restriction = sheaf.maps[(face, coface)]
        width = cosheaf.stalks[coface] * sheaf.stalks[face]
        if not width:
            continue

        on_face = extension.kron(Matrix.identity(field, sheaf.stalks[face]))
        on_coface = Matrix.identity(field, cosheaf.stalks[coface]).kron(restriction)
        values = {}
        for (block, start) in ((on_face, block_offsets[face]),
                               (on_coface.scale(-1), block_offsets[coface])):
            for r in range(block.rows):
                for c in range(block.cols):
                    if block[r, c]:
                        values[(start + r, c)] = block[r, c]
        columns.append(Matrix.from_dict(field, total, width, values))

    return Matrix.hstack(field, total, columns), block_offsets


def coend(cosheaf, sheaf):
    """ G (x)_X F as a quotient of the sum of the cellwise tensor products """
    _check_pair(cosheaf, sheaf)
    relations, block_offsets = relation_matrix(cosheaf, sheaf)
    result = CoendResult(cosheaf, sheaf, cokernel(relations), block_offsets)
    logger.debug('coend of %s and %s: %s', cosheaf, sheaf, result.dim)
    return result


def coend_complex(chain, sheaf):
    """ The complex n -> G_n (x) F with the induced differentials, for a
        CosheafComplex G and a sheaf F.
    """
    results = {n: coend(term, sheaf) for (n, term) in chain.terms.items()}
    field = sheaf.field
    differentials = {}
    for (n, morphism) in chain.differentials.items():
        source, target = results[n], results[n + chain.step]
        blocks = {}
        for (k, cell) in enumerate(sheaf.complex.cells):
            blocks[(k, k)] = morphism.components[cell].kron(
                Matrix.identity(field, sheaf.stalks[cell]))
        cellwise = Matrix.block(field,
                                [target.block_size(cell) for cell in sheaf.complex.cells],
                                [source.block_size(cell) for cell in sheaf.complex.cells],
                                blocks)
        differentials[n] = target.quotient.projection @ cellwise @ source.quotient.section

    return ChainComplex(field, {n: r.dim for (n, r) in results.items()}, differentials,
                        homological=chain.homological)
