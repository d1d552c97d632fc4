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



from cellsheaf.sheaves.base import (
    CellSheaf, CellCosheaf, validate_sheaf, validate_cosheaf, linear_dual)
from cellsheaf.sheaves.morphisms import SheafMorphism, identity_morphism, zero_morphism
from cellsheaf.sheaves.sums import direct_sum, summand_inclusions, conjugate, is_decomposition
from cellsheaf.sheaves.hom import hom_space
from cellsheaf.sheaves.standard import (
    constant_sheaf, constant_cosheaf, zero_sheaf, zero_cosheaf, skyscraper, elementary,
    random_sheaf, random_cosheaf, twisted_circle_sheaf, twisted_torus_sheaf, INJECTIVE_SHEAF,
    PROJECTIVE_SHEAF, PROJECTIVE_COSHEAF, INJECTIVE_COSHEAF)
from cellsheaf.sheaves.complexes import SheafComplex, CosheafComplex, concentrated
