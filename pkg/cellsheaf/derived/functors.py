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


""" Derived functors of the pushforward to a point.

    Every elementary object pushes forward to a single copy of the field:
    the colimit of an elementary projective and the limit of an elementary
    injective are both one dimensional.  A resolution therefore pushes
    forward to its generator complex.
"""

from cellsheaf.derived.elementary import is_projective
from cellsheaf.derived.resolutions import (
    injective_resolution, injective_resolution_cosheaf, projective_resolution,
    projective_resolution_sheaf)
from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellCosheaf, CellSheaf

SHEAF_COHOMOLOGY = 'Rp_*'
SHEAF_HOMOLOGY = 'Lp_dagger'
COSHEAF_HOMOLOGY = 'Lp_*-cosheaf'
COSHEAF_COHOMOLOGY = 'Rp_*-cosheaf'

_FUNCTORS = {
    SHEAF_COHOMOLOGY: (CellSheaf, injective_resolution),
    SHEAF_HOMOLOGY: (CellSheaf, projective_resolution_sheaf),
    COSHEAF_HOMOLOGY: (CellCosheaf, projective_resolution),
    COSHEAF_COHOMOLOGY: (CellCosheaf, injective_resolution_cosheaf),
}

DERIVED_FUNCTORS = tuple(sorted(_FUNCTORS))


def pushed_to_point(elementary):
    """ The termwise colimit (projective kinds) or limit (injective kinds) """
    return elementary.generator_complex()


def hyperhomology(elementary):
    """ Graded dims of the colimit of a complex of elementary projectives """
    if not is_projective(elementary.kind):
        raise IncompatibleShapes('hyperhomology needs elementary projectives')
    return _graded(pushed_to_point(elementary))


def hypercohomology(elementary):
    """ Graded dims of the limit of a complex of elementary injectives """
    if is_projective(elementary.kind):
        raise IncompatibleShapes('hypercohomology needs elementary injectives')
    return _graded(pushed_to_point(elementary))


def _graded(chains):
    return {n: chains.homology(n).dim for n in chains.degrees()}


def derived_functor(kind, obj, resolution=None):
    """ Resolve `obj`, push the resolution to a point and take homology.

        :param kind: one of DERIVED_FUNCTORS
        :param resolution: an already checked resolution of `obj` to use in
            place of the canonical one
        :returns: dict degree -> dimension, without zero entries
    """
    if kind not in _FUNCTORS:
        raise ValueError('Unknown derived functor `{}`'.format(kind))

    (cls, resolve) = _FUNCTORS[kind]
    if not isinstance(obj, cls):
        raise IncompatibleShapes('{} applies to a {}, got {}'.format(
            kind, cls.kind, type(obj).__name__))

    resolution = resolution or resolve(obj)
    dims = _graded(pushed_to_point(resolution.elementary))
    logger.debug('%s: resolution of length %s, dims %s', kind, resolution.length(), dims)
    return {n: dim for (n, dim) in dims.items() if dim}


def sheaf_homology(sheaf):
    """ (dim H_0, dim H_1, ...) of Lp_dagger up to the complex dimension """
    dims = derived_functor(SHEAF_HOMOLOGY, sheaf)
    return tuple(dims.get(n, 0) for n in range(sheaf.complex.dimension + 1))
