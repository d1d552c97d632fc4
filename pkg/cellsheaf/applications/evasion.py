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



""" Evasion analysis over time: a sheaf or cosheaf on a compact interval
    built from the free region of a sensor field.

    An evasion path forces a closed bar across the whole interval, so its
    absence certifies that no intruder can evade.  The converse fails both
    for the cosheaf of connected components and for the linearized sheaf
    of sections, so a long bar only ever leaves the question open.
"""

from cellsheaf.barcodes.paths import PathComplex
from cellsheaf.barcodes.zigzag import barcode_homology, long_bar, zigzag_decompose
from cellsheaf.containers import EvasionVerdict
from cellsheaf.exceptions import NotPathComplex
from cellsheaf.homology import cohomology, homology
from cellsheaf.logger import logger
from cellsheaf.sheaves.base import CellSheaf

CERTIFIED = 'certified-no-path'
INCONCLUSIVE = 'long-bar-present-inconclusive'


def evasion_path_analysis(rep):
    path = PathComplex(rep.complex)
    if not path.is_compact():
        raise NotPathComplex('evasion analysis runs over a compact time interval')

    barcode = zigzag_decompose(rep, path)
    bar = long_bar(barcode)
    if isinstance(rep, CellSheaf):
        h0 = cohomology(rep, 0).dim
    else:
        h0 = homology(rep, 0).dim

    # Closed bars are exactly the zeroth homology of the pieces
    if barcode_homology(barcode)[0] != h0:
        logger.warning('barcode and direct computation disagree on degree 0: %s vs %s',
                       barcode_homology(barcode)[0], h0)

    verdict = CERTIFIED if bar is None else INCONCLUSIVE
    logger.debug('evasion analysis: %s, %s', verdict, barcode)
    return EvasionVerdict(verdict=verdict, long_bar=bar, h0=h0, barcode=barcode)
