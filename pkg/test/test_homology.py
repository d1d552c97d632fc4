import pytest

from cellsheaf.exceptions import IncompatibleShapes, NotSimplicial
from cellsheaf.homology import (
    BOREL_MOORE, COMPACT, CechData, betti_numbers, cech_data_from_cosheaf, cech_homology,
    cochain_complex_c, cohomology, cohomology_c, complex_for, euler_characteristic, homology,
    homology_bm, sheaf_homology_graph)
from cellsheaf.linalg import get_field
from cellsheaf.sheaves import (
    constant_cosheaf, constant_sheaf, linear_dual, random_sheaf, skyscraper)
from cellsheaf.sheaves.standard import twisted_circle_sheaf
from cellsheaf.topology import simplicial_complex
from cellsheaf.topology import standard


@pytest.mark.parametrize('complex_, expected', [
    (standard.point(), [1]),
    (standard.interval(), [1, 0]),
    (standard.circle(3), [1, 1]),
    (standard.unit_square(), [1, 0, 0]),
    (standard.two_sphere(), [1, 0, 1]),
    (standard.simplex_boundary(2), [1, 0, 1]),
    (standard.grid_torus(3, 3), [1, 2, 1]),
])
def test_constant_coefficients(complex_, expected):
    assert betti_numbers(constant_sheaf(complex_)) == expected
    assert betti_numbers(constant_cosheaf(complex_)) == expected


def test_compact_supports_on_intervals():
    half_open = constant_sheaf(standard.half_open_interval())
    assert betti_numbers(half_open, COMPACT) == [0, 0]
    assert betti_numbers(half_open) == [1, 0]

    open_line = constant_sheaf(standard.open_interval())
    assert cohomology_c(open_line, 1).dim == 1
    assert cohomology(open_line, 1).dim == 0

    assert betti_numbers(constant_sheaf(standard.half_open_square()), COMPACT) == [0, 0, 0]


def test_borel_moore_homology_of_the_open_line():
    cosheaf = constant_cosheaf(standard.open_interval_with_midpoint())
    assert betti_numbers(cosheaf, BOREL_MOORE) == [0, 1]
    assert homology_bm(cosheaf, 1).dim == 1
    assert homology(cosheaf, 0).dim == 1


def test_twisted_circle_depends_on_the_field():
    circle = standard.circle(4)
    assert betti_numbers(twisted_circle_sheaf(circle)) == [0, 0]
    assert betti_numbers(twisted_circle_sheaf(circle, field=get_field('F2'))) == [1, 1]


def test_coboundary_squares_to_zero(rng, small_complexes):
    for complex_ in small_complexes:
        for _ in range(5):
            assert cochain_complex_c(random_sheaf(complex_, rng)).is_complex()


def test_dual_cosheaf_homology_matches_sheaf_cohomology(rng, small_complexes):
    for complex_ in small_complexes:
        for _ in range(5):
            sheaf = random_sheaf(complex_, rng)
            dual = linear_dual(sheaf)
            for i in range(complex_.dimension + 1):
                assert homology(dual, i).dim == cohomology(sheaf, i).dim
                assert homology_bm(dual, i).dim == cohomology_c(sheaf, i).dim


def test_euler_characteristic_matches_betti_numbers(rng, small_complexes):
    for complex_ in small_complexes:
        sheaf = random_sheaf(complex_, rng)
        betti = betti_numbers(sheaf, COMPACT)
        assert euler_characteristic(sheaf, COMPACT) == sum(
            (-1) ** k * b for (k, b) in enumerate(betti))


def test_witnesses_are_cocycles():
    sheaf = constant_sheaf(standard.circle(3))
    group = cohomology_c(sheaf, 1)
    assert group.witnesses.shape == (3, 1)


def test_skyscraper_on_an_edge():
    sky = skyscraper(standard.interval(), 'a', 2)
    assert betti_numbers(sky) == [0, 2]


def test_flavours_must_match_the_kind():
    with pytest.raises(ValueError):
        complex_for(constant_sheaf(standard.interval()), BOREL_MOORE)

    with pytest.raises(ValueError):
        complex_for(constant_cosheaf(standard.interval()), COMPACT)

    with pytest.raises(IncompatibleShapes):
        cohomology_c(constant_cosheaf(standard.interval()), 0)


def test_cech_homology_of_a_hollow_triangle():
    nerve = simplicial_complex([('a', 'b'), ('b', 'c'), ('a', 'c')])
    data = CechData(constant_cosheaf(nerve))
    assert data.validate().ok
    assert [cech_homology(data, k) for k in range(2)] == [1, 1]


def test_cech_needs_a_simplicial_nerve():
    with pytest.raises(NotSimplicial):
        cech_data_from_cosheaf(constant_cosheaf(standard.unit_square()))


def test_graph_sheaf_homology():
    assert sheaf_homology_graph(constant_sheaf(standard.circle(3))) == (1, 1)
    assert sheaf_homology_graph(constant_sheaf(standard.interval())) == (1, 0)

    with pytest.raises(IncompatibleShapes):
        sheaf_homology_graph(constant_sheaf(standard.unit_square()))
