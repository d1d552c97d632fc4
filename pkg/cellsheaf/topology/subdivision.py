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


""" Barycentric subdivision and the reversed-order dual complex """

from cellsheaf.topology.cells import CellComplex
from cellsheaf.topology.maps import PosetMap
from cellsheaf.topology.poset import Poset

INFINITY = '*'
CHAIN_SEPARATOR = '<'


def chain_name(chain):
    return CHAIN_SEPARATOR.join(chain)


def barycentric_subdivision(complex_):
    """ Subdivide `complex_` into the order complex of its cells, with a
        point at infinity adjoined below every cell lacking compact closure.

        A chain x0 < ... < xk becomes a k-cell named `x0<...<xk`; the chain
        consisting of the point at infinity alone is dropped, and chains
        through it are the non-compact cells.

        :returns: (subdivided complex, poset map sending a chain to its
            top element)
    """
    order = [INFINITY] + complex_.cells

    def above(cell):
        if cell == INFINITY:
            return [c for c in complex_.cells if not complex_.is_compact(c)]
        return [c for c in complex_.cells if c != cell and complex_.leq(cell, c)]

    chains = []
    stack = [(cell,) for cell in order]
    while stack:
        chain = stack.pop()
        if chain != (INFINITY,):
            chains.append(chain)
        for nxt in above(chain[-1]):
            stack.append(chain + (nxt,))

    names = {chain: chain_name(chain) for chain in chains}
    dims = {names[chain]: len(chain) - 1 for chain in chains}
    compact = {names[chain]: INFINITY not in chain for chain in chains}

    covers, signs = [], {}
    for chain in chains:
        for (position, _) in enumerate(chain):
            face = chain[:position] + chain[position + 1:]
            if face not in names:
                continue
            pair = (names[face], names[chain])
            covers.append(pair)
            signs[pair] = (-1) ** position

    subdivided = CellComplex(Poset(dims, covers), dims, compact, signs)
    projection = PosetMap(subdivided, complex_,
                           {names[chain]: chain[-1] for chain in chains})
    return subdivided, projection


def dual_complex(complex_):
    """ Reverse the face order: a cell of dimension d becomes a cell of
        dimension n - d, and each cover keeps its incidence number.

        :returns: (dual complex, bijection cell -> dual cell)
    """
    top = complex_.dimension
    covers = [(coface, face) for (face, coface) in complex_.poset.covers]
    dual = CellComplex(
        Poset(complex_.cells, covers),
        {cell: top - complex_.dims[cell] for cell in complex_.cells},
        {cell: True for cell in complex_.cells},
        {(coface, face): complex_.sign(face, coface)
         for (face, coface) in complex_.poset.covers})

    return dual, {cell: cell for cell in complex_.cells}
