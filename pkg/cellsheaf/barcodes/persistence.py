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


""" Persistence cosheaves of a cellular map and the decomposition of the
    homology of its source.
"""

from cellsheaf.containers import CorollaryRow
from cellsheaf.derived.resolutions import projective_resolution
from cellsheaf.homology import homology
from cellsheaf.logger import logger
from cellsheaf.sheaves.standard import constant_cosheaf


def homology_cosheaves(chain):
    """ degree -> the cellwise homology cosheaf of a CosheafComplex """
    return {n: chain.homology_object(n) for n in chain.degrees()}


def derived_pushforward(f, cosheaf):
    """ f_* applied termwise to the canonical projective resolution.  The
        pushforward of an elementary projective [s^] is [f(s)^], so the
        resolution is moved generator by generator.

        :returns: CosheafComplex on the target of f
    """
    resolution = projective_resolution(cosheaf)
    moved = resolution.elementary.relabel(f)
    logger.debug('derived pushforward: %s', moved)
    return moved.materialize()


def persistence_cosheaves(f, cosheaf=None):
    """ degree -> F_i, the homology cosheaves of the derived pushforward of
        the constant cosheaf (or of `cosheaf`) along f.
    """
    cosheaf = cosheaf or constant_cosheaf(f.source)
    return homology_cosheaves(derived_pushforward(f, cosheaf))


def check_persistence_corollary(f, degrees=None):
    """ H_i(Y) against H_0(X; F_i) + H_1(X; F_{i-1}) for a cellular map f
        from Y onto a compact path complex X.

        :returns: list of CorollaryRow
    """
    source = f.source
    constant = constant_cosheaf(source)
    layers = persistence_cosheaves(f, constant)
    if degrees is None:
        degrees = range(source.dimension + 1)

    def term(degree, index):
        cosheaf = layers.get(degree)
        return homology(cosheaf, index).dim if cosheaf is not None else 0

    rows = []
    for i in degrees:
        total = homology(constant, i).dim
        h0, h1 = term(i, 0), term(i - 1, 1)
        rows.append(CorollaryRow(degree=i, total=total, h0_term=h0, h1_term=h1,
                                 ok=total == h0 + h1))
    return rows
