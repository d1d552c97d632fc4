import pytest

from cellsheaf.exceptions import IncompatibleShapes, NotCommuting, ShapeMismatch
from cellsheaf.linalg import Matrix, get_field
from cellsheaf.sheaves import (
    SheafMorphism, constant_cosheaf, constant_sheaf, identity_morphism, skyscraper,
    zero_morphism)

Q = get_field('Q')
ONE = Matrix.identity(Q, 1)


def evaluation_at_x(complex_):
    """ The constant sheaf onto the skyscraper at x, identity at x """
    return SheafMorphism(constant_sheaf(complex_), skyscraper(complex_, 'x'), {'x': ONE})


def test_identity(closed_interval):
    sheaf = constant_sheaf(closed_interval, 2)
    identity = identity_morphism(sheaf)
    assert identity.is_natural()
    assert identity.is_isomorphism()
    assert identity.inverse() == identity
    assert identity.compose(identity) == identity
    assert (identity - identity).is_zero()


def test_naturality_failures(closed_interval):
    sheaf = constant_sheaf(closed_interval)
    components = {cell: ONE for cell in closed_interval.cells}
    components['x'] = Matrix.from_rows(Q, [[2]])
    morphism = SheafMorphism(sheaf, sheaf, components)
    assert morphism.naturality_failures() == [('x', 'a')]
    with pytest.raises(NotCommuting):
        morphism.check()


def test_kernel_image_cokernel(closed_interval):
    morphism = evaluation_at_x(closed_interval)
    assert morphism.is_natural()
    assert morphism.rank_profile() == {'x': 1, 'y': 0, 'a': 0}

    kernel, inclusion = morphism.kernel()
    assert kernel.stalks == {'x': 0, 'y': 1, 'a': 1}
    assert kernel.validate().ok
    assert inclusion.is_natural()
    assert morphism.compose(inclusion).is_zero()

    image, _ = morphism.image()
    assert image.stalks == {'x': 1, 'y': 0, 'a': 0}

    cokernel, projection = morphism.cokernel()
    assert cokernel.is_zero()
    assert projection.is_natural()


def test_cokernel_of_an_inclusion(closed_interval):
    kernel, inclusion = evaluation_at_x(closed_interval).kernel()
    cokernel, projection = inclusion.cokernel()
    assert cokernel.stalks == {'x': 1, 'y': 0, 'a': 0}
    assert projection.compose(inclusion).is_zero()


def test_arithmetic(closed_interval):
    morphism = evaluation_at_x(closed_interval)
    doubled = morphism + morphism
    assert doubled == morphism.scale(2)
    assert (doubled - morphism) == morphism
    assert (-morphism)['x'] == Matrix.from_rows(Q, [[-1]])


def test_ends_must_agree(closed_interval):
    with pytest.raises(IncompatibleShapes):
        SheafMorphism(constant_sheaf(closed_interval), constant_cosheaf(closed_interval))

    with pytest.raises(ShapeMismatch):
        SheafMorphism(constant_sheaf(closed_interval), constant_sheaf(closed_interval),
                      {'x': Matrix.identity(Q, 2)})

    sheaf = constant_sheaf(closed_interval)
    with pytest.raises(IncompatibleShapes):
        identity_morphism(sheaf).compose(evaluation_at_x(closed_interval))


def test_zero_morphism(closed_interval):
    zero = zero_morphism(constant_sheaf(closed_interval), skyscraper(closed_interval, 'a'))
    assert zero.is_zero()
    assert zero.is_natural()
