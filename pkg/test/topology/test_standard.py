import pytest

from cellsheaf.topology import standard


def euler(complex_):
    return sum((-1) ** complex_.dim(cell) for cell in complex_.cells)


@pytest.mark.parametrize('complex_, expected', [
    (standard.point(), 1),
    (standard.interval(), 1),
    (standard.circle(2), 0),
    (standard.circle(5), 0),
    (standard.simplex(3), 1),
    (standard.simplex_boundary(2), 2),
    (standard.two_sphere(), 2),
    (standard.unit_square(), 1),
    (standard.grid_torus(3, 4), 0),
])
def test_euler_characteristics(complex_, expected):
    assert complex_.validate().ok
    assert euler(complex_) == expected


def test_paths_with_open_ends():
    line = standard.path(['u', 'v', 'w'], open_left=True, open_right=True)
    assert line.validate().ok
    assert line.cells_of_dim(1) == ['<-u', 'u-v', 'v-w', 'w->']
    assert not line.is_compact('<-u')
    assert line.sign('u', '<-u') == 1
    assert line.sign('w', 'w->') == -1


def test_open_intervals():
    assert standard.open_interval().cells == ['a']
    middle = standard.open_interval_with_midpoint()
    assert middle.validate().ok
    assert [middle.is_compact(c) for c in middle.cells] == [True, False, False]


def test_degenerate_shapes():
    with pytest.raises(ValueError):
        standard.circle(1)

    with pytest.raises(ValueError):
        standard.grid_torus(1, 3)


def test_grid_torus_naming():
    torus = standard.grid_torus(2, 2)
    assert len(torus.cells_of_dim(2)) == 4
    assert torus.vertices('h.1.0') == ['p.0.0', 'p.1.0']
    assert torus.sign('h.0.1', 's.0.0') == -1


def test_sphere_height_model():
    sphere, target, f = standard.sphere_height_model()
    assert euler(sphere) == 2
    assert target.cells == ['x', 'y', 'x-y']
    assert f.validate().ok
    assert f('pq') == 'x'
    assert f('rs') == 'y'
    assert f('pqr') == 'x-y'


def test_torus_height_model():
    torus, target, f = standard.torus_height_model()
    assert torus.validate().ok
    assert euler(torus) == 0
    assert len(torus.cells_of_dim(2)) == 28
    assert f.validate().ok
    assert set(f.assignment.values()) == set(target.cells)


def test_height_map_follows_the_path_not_the_names():
    target = standard.height_interval(['x', 'y', 'z', 'w'])
    f = standard.height_map(standard.interval(), target, {'x': 'z', 'y': 'w'})
    assert f('a') == 'z-w'
    assert f.validate().ok


def test_height_map_rejects_skipped_levels():
    line = standard.interval()
    target = standard.height_interval(['x', 'y', 'z'])
    with pytest.raises(ValueError):
        standard.height_map(line, target, {'x': 'x', 'y': 'z'})


def test_circle_map_example():
    source, target, f = standard.circle_map_example()
    assert source.validate().ok
    assert target.validate().ok
    assert sorted(f.assignment.values()) == sorted(target.cells)


def test_inclusion_with_renaming():
    sub = standard.interval('p', 'e', 'q')
    f = standard.inclusion(sub, standard.interval(), {'p': 'x', 'e': 'a', 'q': 'y'})
    assert f.validate().ok
