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


""" Standard sheaves and cosheaves: constant, skyscraper, elementary
    injective/projective, twisted local systems and random instances.
"""

from cellsheaf.exceptions import UnknownCell
from cellsheaf.linalg.field import RATIONALS
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.sheaves.base import CellCosheaf, CellSheaf
from cellsheaf.sheaves.morphisms import SheafMorphism
from cellsheaf.sheaves.sums import direct_sum
from cellsheaf.topology.standard import grid_cell

INJECTIVE_SHEAF = 'inj-sheaf'
PROJECTIVE_SHEAF = 'proj-sheaf'
PROJECTIVE_COSHEAF = 'proj-cosheaf'
INJECTIVE_COSHEAF = 'inj-cosheaf'

ELEMENTARY_KINDS = (INJECTIVE_SHEAF, PROJECTIVE_SHEAF, PROJECTIVE_COSHEAF, INJECTIVE_COSHEAF)

_KIND_CLASSES = {
    INJECTIVE_SHEAF: CellSheaf,
    PROJECTIVE_SHEAF: CellSheaf,
    PROJECTIVE_COSHEAF: CellCosheaf,
    INJECTIVE_COSHEAF: CellCosheaf,
}


def representation_class(kind):
    return _KIND_CLASSES[kind]


def supported_on(cls, complex_, cells, dim, field=RATIONALS):
    """ Value k^dim on `cells` with identity maps inside, zero elsewhere """
    cells = frozenset(cells)
    stalks = {cell: (dim if cell in cells else 0) for cell in complex_.cells}
    maps = {}
    for (face, coface) in complex_.poset.covers:
        if face in cells and coface in cells:
            maps[(face, coface)] = Matrix.identity(field, dim)

    return cls(complex_, stalks, maps, field)


def constant_sheaf(complex_, dim=1, field=RATIONALS):
    return supported_on(CellSheaf, complex_, complex_.cells, dim, field)


def constant_cosheaf(complex_, dim=1, field=RATIONALS):
    return supported_on(CellCosheaf, complex_, complex_.cells, dim, field)


def zero_sheaf(complex_, field=RATIONALS):
    return CellSheaf(complex_, {}, {}, field)


def zero_cosheaf(complex_, field=RATIONALS):
    return CellCosheaf(complex_, {}, {}, field)


def skyscraper(complex_, cell, dim=1, field=RATIONALS, cosheaf=False):
    complex_.check_cell(cell)
    cls = CellCosheaf if cosheaf else CellSheaf
    return cls(complex_, {cell: dim}, {}, field)


def elementary_support(kind, complex_, cell):
    """ Closure for [cell] and [cell^], open star for {cell} and {cell^} """
    if cell not in complex_:
        raise UnknownCell('Unknown cell `{}`'.format(cell))
    if kind in (INJECTIVE_SHEAF, PROJECTIVE_COSHEAF):
        return complex_.closure(cell)
    if kind in (PROJECTIVE_SHEAF, INJECTIVE_COSHEAF):
        return complex_.open_star(cell)
    raise ValueError('Unknown elementary kind `{}`'.format(kind))


def elementary(kind, complex_, cell, dim=1, field=RATIONALS):
    return supported_on(_KIND_CLASSES[kind], complex_,
                        elementary_support(kind, complex_, cell), dim, field)


def twisted_circle_sheaf(complex_, field=RATIONALS):
    """ The rank one local system on `circle(n)` with monodromy -1, placed on
        the cover v0 < e(n-1).
    """
    sheaf = constant_sheaf(complex_, 1, field)
    last = 'e{}'.format(len(complex_.cells_of_dim(1)) - 1)
    maps = dict(sheaf.maps)
    maps[('v0', last)] = Matrix.from_rows(field, [[-1]])
    return CellSheaf(complex_, sheaf.stalks, maps, field)


def twisted_torus_sheaf(complex_, width=3, height=3, field=RATIONALS):
    """ The rank one local system on `grid_torus(width, height)` flipping sign
        once around the horizontal direction.
    """
    wrap = width - 1
    seam = frozenset([grid_cell('h', wrap, j) for j in range(height)] +
                     [grid_cell('s', wrap, j) for j in range(height)])
    glued = frozenset([grid_cell('p', 0, j) for j in range(height)] +
                      [grid_cell('v', 0, j) for j in range(height)])

    sheaf = constant_sheaf(complex_, 1, field)
    maps = dict(sheaf.maps)
    for (face, coface) in complex_.poset.covers:
        if coface in seam and face in glued:
            maps[(face, coface)] = Matrix.from_rows(field, [[-1]])
    return CellSheaf(complex_, sheaf.stalks, maps, field)


def random_sheaf(complex_, rng, field=RATIONALS, generators=3, bound=2):
    """ The image of a random morphism from a sum of elementary projective
        sheaves {s_i} to a sum of elementary injective sheaves [t_j].  The
        scalar joining s_i to t_j is used wherever s_i <= c <= t_j.
    """
    cells = complex_.cells
    sources = [rng.choice(cells) for _ in range(rng.randint(1, generators))]
    targets = [rng.choice(cells) for _ in range(rng.randint(1, generators))]
    scalars = {(i, j): field.random_element(rng, bound)
               for (i, s) in enumerate(sources)
               for (j, t) in enumerate(targets)
               if complex_.leq(s, t)}

    projective = direct_sum(*[elementary(PROJECTIVE_SHEAF, complex_, s, 1, field)
                              for s in sources])
    injective = direct_sum(*[elementary(INJECTIVE_SHEAF, complex_, t, 1, field)
                             for t in targets])

    components = {}
    for cell in cells:
        present_sources = [i for (i, s) in enumerate(sources) if complex_.leq(s, cell)]
        present_targets = [j for (j, t) in enumerate(targets) if complex_.leq(cell, t)]
        components[cell] = Matrix.from_dict(
            field, len(present_targets), len(present_sources),
            {(row, col): scalars[(i, j)]
             for (row, j) in enumerate(present_targets)
             for (col, i) in enumerate(present_sources)})

    image, _ = SheafMorphism(projective, injective, components).image()
    return image


def random_cosheaf(complex_, rng, field=RATIONALS, generators=3, bound=2):
    return random_sheaf(complex_, rng, field, generators, bound).dual()
