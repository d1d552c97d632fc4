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


from cellsheaf.linalg.field import Field, get_field, RATIONALS
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.linalg.spaces import (
    Subspace, Quotient, rank, kernel, image, cokernel, solve)
from cellsheaf.linalg.diagrams import Diagram, limit_over, colimit_over
from cellsheaf.linalg.chains import (
    ChainComplex, mapping_cone, check_chain_map, check_chain_homotopy)
from cellsheaf.linalg.sequences import LongExactSequence, les_from_ses
from cellsheaf.linalg.double import DoubleComplex, totalize
