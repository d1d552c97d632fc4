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



from cellsheaf.applications.evasion import (
    CERTIFIED, INCONCLUSIVE, evasion_path_analysis)
from cellsheaf.applications.netcode import (
    CodedGraph, nc_duality_check, network_coding_sheaf, random_routing_graph,
    sheaf_homology_check)
from cellsheaf.applications.routing import (
    routing_decomposition, routing_sections_sheaf, support_dimensions)
from cellsheaf.applications.sensing import (
    SensorNerve, evasion_cosheaf, evasion_sets, forced_section_count, forcing,
    sensing_cokernel, sensing_les, sensing_sheaf)
