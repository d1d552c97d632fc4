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



from cellsheaf.topology.poset import Poset, build_poset
from cellsheaf.topology.cells import (
    CellComplex, validate_complex, simplicial_signs, simplicial_complex)
from cellsheaf.topology.maps import (
    PosetMap, CellularMap, validate_map, identity_map, constant_map)
from cellsheaf.topology.subdivision import barycentric_subdivision, dual_complex
