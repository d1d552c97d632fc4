import pytest

from cellsheaf.derived import (
    check_comparison, comparison, compactly_supported_via_P, dualizing_complex, equivalence_P,
    equivalence_P_hat, verdier_dual)
from cellsheaf.homology import cohomology_c
from cellsheaf.sheaves import constant_sheaf, random_cosheaf, random_sheaf, skyscraper
from cellsheaf.sheaves.standard import INJECTIVE_SHEAF, PROJECTIVE_COSHEAF
from cellsheaf.topology.standard import circle, half_open_interval, interval, two_sphere


def test_compact_support_through_projectives(rng, small_complexes):
    for complex_ in small_complexes:
        for _ in range(17):
            sheaf = random_sheaf(complex_, rng)
            via = compactly_supported_via_P(sheaf)
            for i in range(complex_.dimension + 1):
                assert via.get(i, 0) == cohomology_c(sheaf, i).dim


def test_half_open_interval_has_no_compact_cohomology():
    via = compactly_supported_via_P(constant_sheaf(half_open_interval()))
    assert not any(via.values())


def test_comparison_is_a_quasi_isomorphism(rng, small_complexes):
    for complex_ in small_complexes:
        assert check_comparison(constant_sheaf(complex_))
        for _ in range(17):
            assert check_comparison(random_sheaf(complex_, rng))


@pytest.mark.parametrize('complex_', [interval(), circle(3), two_sphere()])
def test_coaugmentation_is_killed_by_the_differential(rng, complex_):
    for sheaf in (constant_sheaf(complex_), random_sheaf(complex_, rng)):
        hat, coaugmentation = comparison(sheaf)
        assert hat.materialize().d(0).compose(coaugmentation).is_zero()


def test_kinds(rng):
    sheaf = constant_sheaf(interval())
    assert equivalence_P(sheaf).kind == PROJECTIVE_COSHEAF
    assert verdier_dual(sheaf).kind == INJECTIVE_SHEAF
    assert equivalence_P_hat(random_cosheaf(interval(), rng)).kind == INJECTIVE_SHEAF


def test_complexes_are_well_formed(rng):
    for complex_ in (interval(), circle(3)):
        sheaf = random_sheaf(complex_, rng)
        equivalence_P(sheaf).materialize().check()
        verdier_dual(sheaf).materialize().check()


def test_projectives_of_a_vertex_skyscraper():
    complex_ = interval()
    projectives = equivalence_P(skyscraper(complex_, 'x'))
    generators = [(n, g.cell) for n in projectives.degrees()
                  for g in projectives.term(n).generators]
    assert generators == [(0, 'x')]


@pytest.mark.parametrize('complex_', [circle(3), two_sphere()])
def test_dualizing_complex_of_a_closed_manifold_is_a_line(complex_):
    dualizing = dualizing_complex(complex_).materialize()
    for cell in complex_.cells:
        stalks = dualizing.stalk_complex(cell)
        assert sum(stalks.homology(n).dim for n in stalks.degrees()) == 1
