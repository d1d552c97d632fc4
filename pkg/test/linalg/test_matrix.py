import pytest

from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.linalg import Matrix, get_field
from cellsheaf.linalg.matrix import coordinate_inclusion, unit_vector

Q = get_field('Q')
F2 = get_field('F2')


def test_constructors_agree():
    by_rows = Matrix.from_rows(Q, [[1, 2, 0], [0, -1, 3]])
    by_columns = Matrix.from_columns(Q, [[1, 0], [2, -1], [0, 3]], 2)
    by_dict = Matrix.from_dict(Q, 2, 3, {(0, 0): 1, (0, 1): 2, (1, 1): -1, (1, 2): 3})

    assert by_rows == by_columns == by_dict
    assert by_rows.shape == (2, 3)
    assert by_rows.T.shape == (3, 2)
    assert by_rows.to_text_rows() == [['1', '2', '0'], ['0', '-1', '3']]


def test_ragged_rows_are_rejected():
    with pytest.raises(IncompatibleShapes):
        Matrix.from_rows(Q, [[1, 2], [3]])

    with pytest.raises(IncompatibleShapes):
        Matrix.from_rows(Q, [])


def test_empty_matrices():
    empty = Matrix.from_rows(Q, [], cols=3)
    assert empty.shape == (0, 3)
    assert empty.rank() == 0
    assert empty.kernel_basis().shape == (3, 3)
    assert (Matrix.zeros(Q, 2, 0) @ Matrix.zeros(Q, 0, 4)).is_zero()


def test_block_and_stacks():
    a = Matrix.identity(Q, 2)
    b = Matrix.from_rows(Q, [[5]])
    total = Matrix.direct_sum(Q, [a, b])
    assert total == Matrix.from_rows(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 5]])

    assert Matrix.hstack(Q, 2, [a, a]).shape == (2, 4)
    assert Matrix.vstack(Q, 2, [a, a]).shape == (4, 2)

    with pytest.raises(IncompatibleShapes):
        Matrix.block(Q, [2], [2], {(0, 0): b})

    with pytest.raises(IncompatibleShapes):
        Matrix.hstack(Q, 2, [a, b])


def test_blocks_land_at_their_offsets():
    m = Matrix.block(Q, [1, 2], [2, 1], {
        (0, 1): Matrix.from_rows(Q, [[5]]),
        (1, 0): Matrix.identity(Q, 2),
    })
    assert m == Matrix.from_rows(Q, [[0, 0, 5], [1, 0, 0], [0, 1, 0]])


def test_arithmetic():
    a = Matrix.from_rows(Q, [[1, 2], [3, 4]])
    b = Matrix.from_rows(Q, [[0, 1], [1, 0]])

    assert a @ b == Matrix.from_rows(Q, [[2, 1], [4, 3]])
    assert a + b - b == a
    assert (-a).scale(-1) == a
    assert (a - a).is_zero()

    with pytest.raises(IncompatibleShapes):
        a @ Matrix.identity(Q, 3)

    with pytest.raises(IncompatibleShapes):
        a + Matrix.identity(Q, 3)


def test_kronecker_layout():
    a = Matrix.from_rows(Q, [[1, 2]])
    b = Matrix.from_rows(Q, [[1], [3]])
    assert a.kron(b) == Matrix.from_rows(Q, [[1, 2], [3, 6]])


def test_rank_kernel_and_image():
    m = Matrix.from_rows(Q, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    kernel = m.kernel_basis()
    assert kernel.shape == (3, 1)
    assert (m @ kernel).is_zero()
    assert m.image_basis().shape == (3, 2)
    assert m.pivots() == (0, 1)


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert Matrix.from_rows(Q, rows).rank() == 2
    assert Matrix.from_rows(F2, rows).rank() == 1


def test_solve():
    m = Matrix.from_rows(Q, [[1, 1], [0, 2]])
    rhs = Matrix.from_rows(Q, [[3], [4]])
    solution = m.solve(rhs)
    assert m @ solution == rhs

    singular = Matrix.from_rows(Q, [[1, 1], [1, 1]])
    assert singular.solve(Matrix.from_rows(Q, [[1], [0]])) is None

    with pytest.raises(IncompatibleShapes):
        m.solve(Matrix.zeros(Q, 3, 1))


def test_inverse():
    m = Matrix.from_rows(Q, [[2, 1], [1, 1]])
    assert (m @ m.inverse()).is_identity()
    assert m.is_invertible()

    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows(Q, [[1, 2], [2, 4]]).inverse()

    with pytest.raises(IncompatibleShapes):
        Matrix.zeros(Q, 2, 3).inverse()


def test_rref_is_normalized():
    reduced, pivots = Matrix.from_rows(Q, [[2, 4], [1, 3]]).rref()
    assert pivots == (0, 1)
    assert reduced.is_identity()


def test_helpers():
    assert unit_vector(Q, 3, 1) == Matrix.from_rows(Q, [[0], [1], [0]])
    assert coordinate_inclusion(Q, 3, [2, 0]) == Matrix.from_rows(Q, [[0, 1], [0, 0], [1, 0]])


def test_matrices_are_hashable():
    a = Matrix.identity(Q, 2)
    assert len({a, Matrix.identity(Q, 2)}) == 1
