import pytest

from cellsheaf.exceptions import UnknownCell
from cellsheaf.sheaves import (
    INJECTIVE_COSHEAF, INJECTIVE_SHEAF, PROJECTIVE_COSHEAF, PROJECTIVE_SHEAF, elementary,
    random_cosheaf, random_sheaf)
from cellsheaf.sheaves.standard import twisted_circle_sheaf, twisted_torus_sheaf
from cellsheaf.topology import standard


@pytest.mark.parametrize('kind, cell, support', [
    (INJECTIVE_SHEAF, 'x', ['x']),
    (INJECTIVE_SHEAF, 'a', ['x', 'y', 'a']),
    (PROJECTIVE_SHEAF, 'x', ['x', 'a']),
    (PROJECTIVE_SHEAF, 'a', ['a']),
    (PROJECTIVE_COSHEAF, 'a', ['x', 'y', 'a']),
    (INJECTIVE_COSHEAF, 'y', ['y', 'a']),
])
def test_elementary_supports(closed_interval, kind, cell, support):
    rep = elementary(kind, closed_interval, cell)
    assert rep.support() == support
    assert rep.validate().ok


def test_elementary_errors(closed_interval):
    with pytest.raises(UnknownCell):
        elementary(INJECTIVE_SHEAF, closed_interval, 'q')

    with pytest.raises(KeyError):
        elementary('flasque', closed_interval, 'x')


def test_twisted_local_systems_commute():
    assert twisted_circle_sheaf(standard.circle(4)).validate().ok
    assert twisted_torus_sheaf(standard.grid_torus(3, 3)).validate().ok


@pytest.mark.parametrize('builder', [
    standard.interval, standard.half_open_interval, standard.unit_square, standard.two_sphere,
])
def test_random_representations_commute(rng, builder):
    complex_ = builder()
    for _ in range(10):
        assert random_sheaf(complex_, rng).validate().ok
        assert random_cosheaf(complex_, rng).validate().ok


def test_random_sheaves_over_a_prime_field(rng, f7):
    sheaf = random_sheaf(standard.unit_square(), rng, field=f7, generators=4)
    assert sheaf.field == f7
    assert sheaf.validate().ok
