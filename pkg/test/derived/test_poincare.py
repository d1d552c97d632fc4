import pytest

from cellsheaf.derived import poincare_check
from cellsheaf.exceptions import NotManifoldData
from cellsheaf.linalg import get_field
from cellsheaf.sheaves import (
    constant_sheaf, random_sheaf, twisted_circle_sheaf, twisted_torus_sheaf)
from cellsheaf.topology.standard import circle, grid_torus, half_open_interval, interval


def test_constant_sheaf_on_the_circle():
    rows = poincare_check(circle(3), constant_sheaf(circle(3)))
    assert [(row.cohomology, row.homology) for row in rows] == [(1, 1), (1, 1)]
    assert all(row.ok for row in rows)


@pytest.mark.parametrize('field, expected', [('Q', [(0, 0), (0, 0)]), ('F2', [(1, 1), (1, 1)])])
def test_twisted_circle(field, expected):
    complex_ = circle(3)
    rows = poincare_check(complex_, twisted_circle_sheaf(complex_, get_field(field)))
    assert [(row.cohomology, row.homology) for row in rows] == expected
    assert all(row.ok for row in rows)


def test_random_sheaves_on_a_circle(rng):
    complex_ = circle(4)
    for _ in range(5):
        assert all(row.ok for row in poincare_check(complex_, random_sheaf(complex_, rng)))


@pytest.mark.smoke
def test_torus():
    complex_ = grid_torus(3, 3)
    rows = poincare_check(complex_, constant_sheaf(complex_))
    assert [row.cohomology for row in rows] == [1, 2, 1]
    assert all(row.ok for row in rows)

    rows = poincare_check(complex_, twisted_torus_sheaf(complex_))
    assert [row.cohomology for row in rows] == [0, 0, 0]
    assert all(row.ok for row in rows)


@pytest.mark.parametrize('complex_', [interval(), half_open_interval()])
def test_not_a_closed_manifold(complex_):
    with pytest.raises(NotManifoldData):
        poincare_check(complex_, constant_sheaf(complex_))
