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


from cellsheaf.barcodes.paths import PathComplex, path_order
from cellsheaf.barcodes.zigzag import (
    Barcode, barcode_homology, format_bar, long_bar, rank_check, zigzag_decompose)
from cellsheaf.barcodes.persistence import (
    check_persistence_corollary, derived_pushforward, homology_cosheaves,
    persistence_cosheaves)
