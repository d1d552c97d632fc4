import pytest

from cellsheaf.exceptions import IncompatibleShapes, NotCommuting
from cellsheaf.linalg import Matrix, get_field
from cellsheaf.sheaves import (
    SheafComplex, SheafMorphism, concentrated, constant_sheaf, identity_morphism, skyscraper)

Q = get_field('Q')


def evaluation_complex(complex_):
    sheaf, sky = constant_sheaf(complex_), skyscraper(complex_, 'x')
    d = SheafMorphism(sheaf, sky, {'x': Matrix.identity(Q, 1)})
    return SheafComplex({0: sheaf, 1: sky}, {0: d})


def test_stalk_complexes(closed_interval):
    complex_ = evaluation_complex(closed_interval).check()
    assert complex_.stalk_complex('x').is_acyclic()
    assert complex_.stalk_complex('a').betti() == {0: 1}


def test_homology_objects(closed_interval):
    complex_ = evaluation_complex(closed_interval)
    h0 = complex_.homology_object(0)
    assert h0.stalks == {'x': 0, 'y': 1, 'a': 1}
    assert h0.validate().ok
    assert complex_.homology_object(1).is_zero()
    assert complex_.homology_object(5) is None


def test_a_concentrated_complex_is_its_own_homology(closed_interval):
    sheaf = constant_sheaf(closed_interval, 2)
    assert concentrated(sheaf).homology_object(0) == sheaf
    assert concentrated(sheaf.dual()).homological


def test_square_of_identity_is_not_a_complex(closed_interval):
    sheaf = constant_sheaf(closed_interval)
    identity = identity_morphism(sheaf)
    complex_ = SheafComplex({0: sheaf, 1: sheaf, 2: sheaf}, {0: identity, 1: identity})
    with pytest.raises(NotCommuting):
        complex_.check()


def test_construction_errors(closed_interval):
    with pytest.raises(IncompatibleShapes):
        SheafComplex({})

    sheaf = constant_sheaf(closed_interval)
    with pytest.raises(IncompatibleShapes):
        SheafComplex({0: sheaf}, {0: identity_morphism(sheaf)})


def test_missing_differentials_are_zero(closed_interval):
    sheaf = constant_sheaf(closed_interval)
    complex_ = SheafComplex({0: sheaf, 1: sheaf})
    assert complex_.d(0).is_zero()
    assert complex_.d(1) is None
    assert complex_.shifted(2).degrees() == [2, 3]
