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


from cellsheaf.derived.elementary import (
    ElementaryComplex, ElementaryMorphism, ElementarySum, Generator)
from cellsheaf.derived.resolutions import (
    INJECTIVE, PROJECTIVE, Resolution, injective_resolution, injective_resolution_cosheaf,
    projective_resolution, projective_resolution_sheaf, resolution_from_terms, resolve)
from cellsheaf.derived.functors import (
    COSHEAF_COHOMOLOGY, COSHEAF_HOMOLOGY, DERIVED_FUNCTORS, SHEAF_COHOMOLOGY,
    SHEAF_HOMOLOGY, derived_functor, hypercohomology, hyperhomology, sheaf_homology)
from cellsheaf.derived.equivalence import (
    check_comparison, comparison, compactly_supported_via_P, dualizing_complex,
    equivalence_P, equivalence_P_hat, equivalence_P_morphism, is_quasi_isomorphism,
    verdier_dual)
from cellsheaf.derived.poincare import poincare_check
