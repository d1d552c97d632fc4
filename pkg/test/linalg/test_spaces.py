import pytest

from cellsheaf.linalg import Matrix, Subspace, cokernel, get_field, image, kernel
from cellsheaf.linalg.spaces import induced_quotient_map, subspace_map

Q = get_field('Q')


def plane():
    return Subspace.span(Matrix.from_rows(Q, [[1, 0], [0, 1], [0, 0]]))


def line():
    return Subspace.span(Matrix.from_rows(Q, [[1], [1], [1]]))


def test_span_drops_dependent_columns():
    space = Subspace.span(Matrix.from_rows(Q, [[1, 2], [1, 2]]))
    assert space.dim == 1
    assert space.ambient == 2


def test_containment_and_equality():
    x_axis = Subspace.span(Matrix.from_rows(Q, [[2], [0], [0]]))
    assert plane().contains(Matrix.from_rows(Q, [[3], [-1], [0]]))
    assert not plane().contains(Matrix.from_rows(Q, [[0], [0], [1]]))
    assert x_axis == Subspace.span(Matrix.from_rows(Q, [[1], [0], [0]]))
    assert x_axis != line()
    assert Subspace.zero(Q, 3).contains(Matrix.zeros(Q, 3, 1))


def test_sum_and_intersection():
    assert plane().sum(line()) == Subspace.whole(Q, 3)
    assert plane().intersection(line()).dim == 0

    diagonal_plane = Subspace.span(Matrix.from_rows(Q, [[1, 0], [0, 1], [1, 1]]))
    meet = plane().intersection(diagonal_plane)
    assert meet.dim == 1
    assert meet.contains(Matrix.from_rows(Q, [[1], [-1], [0]]))


def test_coordinates():
    coords = plane().coordinates(Matrix.from_rows(Q, [[3], [4], [0]]))
    assert plane().basis @ coords == Matrix.from_rows(Q, [[3], [4], [0]])

    with pytest.raises(ValueError):
        plane().coordinates(Matrix.from_rows(Q, [[0], [0], [1]]))


def test_quotient_projection_and_section():
    quotient = line().quotient()
    assert quotient.dim == 2
    assert (quotient.projection @ quotient.section).is_identity()
    assert (quotient.projection @ line().basis).is_zero()
    assert quotient.kernel() == line()


def test_free_function_front_end():
    m = Matrix.from_rows(Q, [[1, 1, 0], [0, 0, 1]])
    assert kernel(m).dim == 1
    assert image(m).dim == 2
    assert cokernel(m).dim == 0
    assert cokernel(Matrix.from_rows(Q, [[1], [0]])).dim == 1


def test_induced_maps():
    # the identity of k^3 descends to the quotient by a line
    quotient = line().quotient()
    induced = induced_quotient_map(quotient, quotient, Matrix.identity(Q, 3))
    assert induced.is_identity()

    swap = Matrix.from_rows(Q, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert subspace_map(line(), line(), swap).is_identity()
