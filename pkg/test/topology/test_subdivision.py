from cellsheaf.topology import PosetMap, barycentric_subdivision, dual_complex
from cellsheaf.topology.standard import half_open_interval, interval, unit_square


def test_interval_subdivision():
    subdivided, projection = barycentric_subdivision(interval())
    assert subdivided.validate().ok
    assert subdivided.cells == ['a', 'x', 'y', 'x<a', 'y<a']
    assert projection.validate().ok
    assert projection('x<a') == 'a'


def test_open_cells_gain_a_point_at_infinity():
    subdivided, projection = barycentric_subdivision(half_open_interval())
    assert subdivided.validate().ok
    assert subdivided.cells == ['a', 'x', '*<a', 'x<a']
    assert not subdivided.is_compact('*<a')
    assert subdivided.is_compact('x<a')
    assert subdivided.sign('a', '*<a') == 1
    assert type(projection) is PosetMap
    assert projection.validate().ok
    assert projection.fiber('a') == {'a', '*<a', 'x<a'}


def test_square_subdivision_counts():
    subdivided, _ = barycentric_subdivision(unit_square())
    assert subdivided.validate().ok
    assert [len(subdivided.cells_of_dim(k)) for k in range(3)] == [9, 16, 8]


def test_dual_of_the_interval():
    dual, correspondence = dual_complex(interval())
    assert dual.validate().ok
    assert dual.cells_of_dim(0) == ['a']
    assert dual.sign('a', 'x') == -1
    assert correspondence['a'] == 'a'
