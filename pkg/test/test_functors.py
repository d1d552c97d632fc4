import pytest

from cellsheaf.exceptions import IncompatibleShapes, NotCellularMap, UnknownElement
from cellsheaf.functors import (
    OPEN_PUSHFORWARD_PULLBACK, PULLBACK_PUSHFORWARD, check_adjunction, global_sections,
    open_counit, open_unit, pullback, pushforward, pushforward_compact, pushforward_counit,
    pushforward_open, pushforward_unit, sections)
from cellsheaf.sheaves import constant_cosheaf, constant_sheaf, random_sheaf
from cellsheaf.topology import CellularMap, constant_map, identity_map
from cellsheaf.topology.standard import (
    circle, circle_map_example, complex_from_records, half_open_interval, interval,
    open_interval_with_midpoint, point)

FUNCTORS = {
    'lower-star': pushforward,
    'dagger': pushforward_open,
    'shriek': pushforward_compact,
}


@pytest.mark.parametrize('name', ['half-open-to-point', 'open-inclusion', 'circle-map'])
def test_functor_table(corpus, name):
    fixture = corpus.get(name)
    f = corpus.load(fixture).body
    sheaf = corpus.load_partner(fixture).body
    assert sheaf.validate().ok

    for (key, functor) in FUNCTORS.items():
        pushed = functor(f, sheaf)
        assert pushed.stalks == fixture.expect[key], key
        assert pushed.validate().ok


def test_compact_pushforward_around_the_circle(corpus):
    fixture = corpus.get('circle-map')
    pushed = pushforward_compact(corpus.load(fixture).body, corpus.load_partner(fixture).body)
    assert pushed.restriction('x', 'b').is_zero()
    assert not pushed.restriction('x', 'a').is_zero()


@pytest.mark.parametrize('builder, expected', [
    # (f_*, f_dagger, f_!) of the constant sheaf pushed to a point
    (interval, (1, 1, 1)),
    (half_open_interval, (1, 1, 0)),
    (open_interval_with_midpoint, (1, 1, 0)),
    (lambda: circle(3), (1, 1, 1)),
])
def test_pushing_constant_sheaves_to_a_point(builder, expected):
    complex_ = builder()
    f = constant_map(complex_, point(), '*')
    sheaf = constant_sheaf(complex_)
    pushed = (pushforward(f, sheaf), pushforward_open(f, sheaf), pushforward_compact(f, sheaf))
    assert tuple(p.stalks['*'] for p in pushed) == expected


def test_sections():
    sheaf = constant_sheaf(circle(4), 2)
    assert global_sections(sheaf).dim == 2
    assert sections(sheaf, ['v0', 'e0']).dim == 2
    assert global_sections(constant_cosheaf(interval())).dim == 1

    with pytest.raises(UnknownElement):
        sections(sheaf, ['v9'])


def test_pullback_along_a_constant_map():
    f = constant_map(interval(), point(), '*')
    sheaf = constant_sheaf(point(), 2)
    pulled = pullback(f, sheaf)
    assert pulled == constant_sheaf(interval(), 2)


def test_pullback_along_the_identity(rng):
    complex_ = circle(3)
    sheaf = random_sheaf(complex_, rng)
    assert pullback(identity_map(complex_), sheaf) == sheaf
    assert pushforward(identity_map(complex_), sheaf).stalks == sheaf.stalks


def test_compact_pushforward_needs_a_cellular_sheaf_map():
    complex_ = interval()
    f = constant_map(complex_, point(), '*')
    with pytest.raises(IncompatibleShapes):
        pushforward_compact(f, constant_cosheaf(complex_))

    with pytest.raises(NotCellularMap):
        pushforward_compact(f.underlying, constant_sheaf(complex_))


def test_units_and_counits_are_natural(rng):
    source, target, f = circle_map_example()
    for _ in range(5):
        F, G = random_sheaf(source, rng), random_sheaf(target, rng)
        assert pushforward_unit(f, G).is_natural()
        assert pushforward_counit(f, F).is_natural()
        assert open_unit(f, F).is_natural()
        assert open_counit(f, G).is_natural()


@pytest.mark.parametrize('pair', [PULLBACK_PUSHFORWARD, OPEN_PUSHFORWARD_PULLBACK])
def test_adjunctions_on_random_sheaves(rng, pair):
    source, target, f = circle_map_example()
    for _ in range(50):
        F = random_sheaf(source, rng)
        G = random_sheaf(target, rng)
        assert check_adjunction(pair, f, F, G)


def test_adjunction_along_a_collapse(rng):
    complex_ = half_open_interval()
    f = constant_map(complex_, point(), '*')
    for _ in range(5):
        F = random_sheaf(complex_, rng)
        G = constant_sheaf(point(), rng.randint(1, 3))
        assert check_adjunction(PULLBACK_PUSHFORWARD, f, F, G)
        assert check_adjunction(OPEN_PUSHFORWARD_PULLBACK, f, F, G)


def test_unknown_adjoint_pair():
    source, target, f = circle_map_example()
    with pytest.raises(ValueError):
        check_adjunction('shriek-pullback', f, constant_sheaf(source), constant_sheaf(target))


def subdivided_circle_map():
    # the circle map with its open edge b split at a midpoint m on both sides
    source = complex_from_records(
        [("x'", 0, True), ("y'", 0, True), ("m'", 0, True), ("a'", 1, True),
         ("b1'", 1, True), ("b2'", 1, False)],
        [("x'", "a'", -1), ("y'", "a'", 1), ("y'", "b1'", -1), ("m'", "b1'", 1),
         ("m'", "b2'", -1)])
    target = complex_from_records(
        [('x', 0, True), ('y', 0, True), ('m', 0, True), ('a', 1, True), ('b1', 1, True),
         ('b2', 1, True)],
        [('x', 'a', -1), ('y', 'a', 1), ('y', 'b1', -1), ('m', 'b1', 1), ('m', 'b2', -1),
         ('x', 'b2', 1)])
    f = CellularMap(source, target, {c: c[:-1] for c in source.cells})
    return source, target, f


def test_open_pushforward_does_not_commute_with_target_subdivision():
    _, circle_target, f = circle_map_example()
    source, target, f_sub = subdivided_circle_map()
    collapse = CellularMap(target, circle_target, {
        'x': 'x', 'y': 'y', 'a': 'a', 'm': 'b', 'b1': 'b', 'b2': 'b'})

    pushed_then_subdivided = pullback(collapse, pushforward_open(f, constant_sheaf(f.source)))
    subdivided_then_pushed = pushforward_open(f_sub, constant_sheaf(source))

    assert pushed_then_subdivided.stalks['m'] == 2
    assert subdivided_then_pushed.stalks['m'] == 1
    assert subdivided_then_pushed.stalks['b1'] == 1
    assert subdivided_then_pushed.stalks['b2'] == 2
    assert pushed_then_subdivided != subdivided_then_pushed
