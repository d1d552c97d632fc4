import pytest

from cellsheaf.exceptions import IncompatibleShapes
from cellsheaf.linalg import Diagram, Matrix, colimit_over, get_field, limit_over

Q = get_field('Q')
ONE = Matrix.identity(Q, 1)


def test_limit_of_a_cospan_of_identities():
    diagram = Diagram(Q, ['x', 'y', 'a'], {'x': 1, 'y': 1, 'a': 1},
                      [('x', 'a', ONE), ('y', 'a', ONE)])
    limit = limit_over(diagram)
    assert limit.dim == 1
    assert limit.projection('x') == limit.projection('y')


def test_limit_with_a_zero_leg():
    diagram = Diagram(Q, ['x', 'y', 'a'], {'x': 2, 'y': 1, 'a': 1},
                      [('x', 'a', Matrix.zeros(Q, 1, 2)), ('y', 'a', ONE)])
    # sections vanish on y and a but are free on x
    assert limit_over(diagram).dim == 2


def test_colimit_of_a_span():
    diagram = Diagram(Q, ['a', 'x', 'y'], {'a': 1, 'x': 1, 'y': 1},
                      [('a', 'x', ONE), ('a', 'y', ONE)])
    colimit = colimit_over(diagram)
    assert colimit.dim == 1
    assert colimit.injection('x') == colimit.injection('y')


def test_colimit_into_a_zero_space():
    diagram = Diagram(Q, ['a', 'x', 'y'], {'a': 1, 'x': 1, 'y': 0},
                      [('a', 'x', ONE), ('a', 'y', Matrix.zeros(Q, 0, 1))])
    assert colimit_over(diagram).dim == 0


def test_arrow_shapes_are_checked():
    with pytest.raises(IncompatibleShapes):
        Diagram(Q, ['x', 'a'], {'x': 2, 'a': 1}, [('x', 'a', ONE)])

    with pytest.raises(IncompatibleShapes):
        Diagram(Q, ['x'], {'x': 1}, [('x', 'z', ONE)])
