import pytest

from cellsheaf.exceptions import ShapeMismatch, UnknownCell
from cellsheaf.linalg import Matrix, get_field
from cellsheaf.sheaves import CellCosheaf, CellSheaf, constant_sheaf, skyscraper
from cellsheaf.topology.standard import interval, unit_square

Q = get_field('Q')


def test_constant_sheaf_on_the_square(square):
    sheaf = constant_sheaf(square, 2)
    assert sheaf.validate().ok
    assert sheaf.total_dim() == 18
    assert sheaf.restriction('00', 'square').is_identity()


def test_missing_maps_default_to_zero(closed_interval):
    sheaf = CellSheaf(closed_interval, {'x': 2, 'a': 1})
    assert sheaf.stalk('y') == 0
    assert sheaf.cover_map('x', 'a').shape == (1, 2)
    assert sheaf.cover_map('x', 'a').is_zero()
    assert sheaf.support() == ['x', 'a']


def test_map_shapes_are_checked(closed_interval):
    with pytest.raises(ShapeMismatch):
        CellSheaf(closed_interval, {'x': 2, 'a': 1}, {('x', 'a'): Matrix.identity(Q, 1)})

    # a cosheaf stores F(a) -> F(x)
    with pytest.raises(ShapeMismatch):
        CellCosheaf(closed_interval, {'x': 2, 'a': 1}, {('x', 'a'): Matrix.zeros(Q, 1, 2)})


def test_unknown_cells_and_pairs(closed_interval):
    with pytest.raises(UnknownCell):
        CellSheaf(closed_interval, {'q': 1})

    with pytest.raises(UnknownCell):
        CellSheaf(closed_interval, {'x': 1, 'y': 1}, {('x', 'y'): Matrix.identity(Q, 1)})

    with pytest.raises(UnknownCell):
        constant_sheaf(closed_interval).stalk('q')


def test_non_commuting_square():
    square = unit_square()
    sheaf = constant_sheaf(square)
    maps = dict(sheaf.maps)
    maps[('top', 'square')] = Matrix.from_rows(Q, [[-1]])
    report = CellSheaf(square, sheaf.stalks, maps).validate()
    assert not report.ok
    assert [v.kind for v in report.violations] == ['commutativity', 'commutativity']
    assert {v.cells[-1] for v in report.violations} == {'square'}


def test_cosheaf_transfer_runs_downward():
    square = unit_square()
    maps = {pair: Matrix.identity(Q, 1) for pair in square.poset.covers}
    maps[('bottom', 'square')] = Matrix.from_rows(Q, [[3]])
    maps[('left', 'square')] = Matrix.from_rows(Q, [[3]])
    cosheaf = CellCosheaf(square, {cell: 1 for cell in square.cells}, maps)
    assert cosheaf.extension('00', 'square') == Matrix.from_rows(Q, [[3]])
    assert cosheaf.extension('bottom', 'bottom').is_identity()


def test_duals_transpose_every_map(closed_interval):
    sheaf = CellSheaf(closed_interval, {'x': 2, 'a': 1, 'y': 1},
                      {('x', 'a'): Matrix.from_rows(Q, [[1, 2]]),
                       ('y', 'a'): Matrix.from_rows(Q, [[1]])})
    cosheaf = sheaf.dual()
    assert cosheaf.kind == 'cosheaf'
    assert cosheaf.extension('x', 'a') == Matrix.from_rows(Q, [[1], [2]])
    assert cosheaf.dual() == sheaf


def test_restriction_to_a_subcomplex():
    square = unit_square()
    boundary = square.subcomplex(c for c in square.cells if c != 'square')
    sheaf = constant_sheaf(square).restricted(boundary)
    assert sheaf.complex == boundary
    assert sheaf.total_dim() == 8
    assert sheaf.validate().ok


def test_diagram_over_a_star():
    sheaf = constant_sheaf(interval())
    diagram = sheaf.diagram(['x', 'a'])
    assert diagram.objects == ['x', 'a']
    assert len(diagram.arrows) == 1


def test_zero_and_skyscraper(closed_interval):
    assert CellSheaf(closed_interval, {}).is_zero()
    sky = skyscraper(closed_interval, 'a', 3)
    assert sky.support() == ['a']
    assert sky.stalk('a') == 3
