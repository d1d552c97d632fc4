import pytest

from cellsheaf.barcodes import PathComplex, path_order
from cellsheaf.exceptions import NotPathComplex
from cellsheaf.topology.standard import (
    circle, complex_from_records, interval, open_interval, path, unit_square)


def test_left_to_right_by_incidence():
    assert path_order(interval()) == ['x', 'a', 'y']

    flipped = complex_from_records(
        [('x', 0, True), ('y', 0, True), ('a', 1, True)],
        [('x', 'a', 1), ('y', 'a', -1)])
    assert path_order(flipped) == ['y', 'a', 'x']


def test_open_ends():
    line = PathComplex(path(['u', 'v'], open_left=True, open_right=True))
    assert line.order == ['<-u', 'u', 'u-v', 'v', 'v->']
    assert not line.is_compact()
    assert not line.is_closed_end('<-u')
    assert line.cover_between(0) == ('u', '<-u')
    assert line.cover_between(1) == ('u', 'u-v')


def test_single_cells():
    assert path_order(open_interval()) == ['a']
    assert PathComplex(interval()).is_compact()


@pytest.mark.parametrize('complex_', [
    circle(3),
    unit_square(),
    complex_from_records(
        [('c', 0, True), ('p', 0, True), ('q', 0, True), ('r', 0, True),
         ('e1', 1, True), ('e2', 1, True), ('e3', 1, True)],
        [('c', 'e1', -1), ('p', 'e1', 1), ('c', 'e2', -1), ('q', 'e2', 1),
         ('c', 'e3', -1), ('r', 'e3', 1)]),
    complex_from_records(
        [('x', 0, True), ('y', 0, True), ('z', 0, True)], []),
])
def test_non_paths(complex_):
    with pytest.raises(NotPathComplex):
        PathComplex(complex_)
