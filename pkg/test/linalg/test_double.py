import pytest

from cellsheaf.exceptions import NotAnticommuting
from cellsheaf.linalg import DoubleComplex, Matrix, get_field, totalize

Q = get_field('Q')
ONE = Matrix.identity(Q, 1)


def square_of_identities():
    dims = {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    horizontal = {(0, 0): ONE, (0, 1): ONE}
    vertical = {(0, 0): ONE, (1, 0): ONE}
    return dims, horizontal, vertical


def test_commuting_square_is_twisted():
    dims, horizontal, vertical = square_of_identities()
    double = DoubleComplex.from_commuting(Q, dims, horizontal, vertical)
    double.check_anticommutes()

    total = totalize(double)
    assert total.is_complex()
    assert [total.dim(n) for n in total.degrees()] == [1, 2, 1]
    assert total.is_acyclic()


def test_untwisted_square_is_rejected():
    dims, horizontal, vertical = square_of_identities()
    with pytest.raises(NotAnticommuting):
        totalize(DoubleComplex(Q, dims, horizontal, vertical))


def test_single_row_totalizes_to_itself():
    double = DoubleComplex(Q, {(0, 0): 1, (1, 0): 1}, {(0, 0): ONE}, {})
    total = totalize(double)
    assert total.betti() == {0: 0, 1: 0}
