import pytest

from cellsheaf.exceptions import CycleDetected, RedundantCover, UnknownElement
from cellsheaf.topology import build_poset


def interval_poset():
    return build_poset([('x', 'a'), ('y', 'a')])


def test_stars_and_closures():
    poset = interval_poset()
    assert poset.open_star('x') == {'x', 'a'}
    assert poset.closure('a') == {'x', 'y', 'a'}
    assert poset.leq('y', 'a')
    assert not poset.leq('a', 'y')
    assert poset.up_set(['x', 'y']) == {'x', 'y', 'a'}
    assert poset.down_set(['x']) == {'x'}
    assert poset.faces('a') == {'x', 'y'}
    assert poset.cofaces('x') == {'a'}


def test_unknown_elements():
    with pytest.raises(UnknownElement):
        interval_poset().open_star('z')

    with pytest.raises(UnknownElement):
        interval_poset().chain_between('a', 'x')


def test_cycles_are_rejected():
    with pytest.raises(CycleDetected):
        build_poset([('x', 'y'), ('y', 'x')])

    with pytest.raises(CycleDetected):
        build_poset([('x', 'x')])


def test_implied_covers_are_rejected():
    with pytest.raises(RedundantCover):
        build_poset([('x', 'a'), ('a', 's'), ('x', 's')])


def test_isolated_elements():
    poset = build_poset([('x', 'a')], elements=['z'])
    assert len(poset) == 3
    assert poset.minimal_elements() == {'x', 'z'}
    assert poset.maximal_elements() == {'a', 'z'}
    assert poset.connected_components() == [{'a', 'x'}, {'z'}]


def test_linear_extension_breaks_ties_by_id():
    assert interval_poset().ordered() == ['x', 'y', 'a']


def test_chains():
    poset = build_poset([('x', 'a'), ('a', 's')])
    assert poset.longest_chain_length() == 2
    assert poset.chain_between('x', 's') == ['x', 'a', 's']
    assert sorted(interval_poset().order_complex_chains()) == [
        ('a',), ('x',), ('x', 'a'), ('y',), ('y', 'a')]


def test_induced_covers_skip_missing_middles():
    poset = build_poset([('x', 'a'), ('a', 's')])
    assert poset.induced_covers(['x', 's']) == [('x', 's')]
    assert poset.induced(['x', 'a']).covers == {('x', 'a')}


def test_components_of_a_subset():
    poset = interval_poset()
    assert poset.connected_components(['x', 'y']) == [{'x'}, {'y'}]
