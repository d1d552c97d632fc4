import pytest

from cellsheaf.applications import (
    SensorNerve, evasion_cosheaf, evasion_sets, forced_section_count, forcing,
    sensing_cokernel, sensing_les, sensing_sheaf)
from cellsheaf.exceptions import IncompatibleShapes, NotInjective
from cellsheaf.homology import cohomology_c, homology
from cellsheaf.linalg import Matrix, get_field
from cellsheaf.sheaves import SheafMorphism, constant_sheaf
from cellsheaf.topology.standard import interval

Q = get_field('Q')


def two_sensors():
    """ One sensor per end of an edge, each measuring its own coordinate """
    return SensorNerve.from_covectors([('u', 'v')], 2, {'u': [[1, 0]], 'v': [[0, 1]]})


def test_measured_spaces():
    nerve = two_sensors()
    assert nerve.measured('u').dim == 1
    assert nerve.measured('uv').dim == 2

    sheaf, iota = sensing_sheaf(nerve)
    assert sheaf.stalks == {'u': 1, 'v': 1, 'uv': 2}
    assert iota.target.stalks == {'u': 2, 'v': 2, 'uv': 2}
    iota.check()


def test_cokernel_and_evasion_cosheaf():
    _, iota = sensing_sheaf(two_sensors())
    cokernel, projection = sensing_cokernel(iota)
    assert cokernel.stalks == {'u': 1, 'v': 1, 'uv': 0}
    assert projection.compose(iota).is_zero()

    cosheaf = evasion_cosheaf(iota)
    assert cosheaf.stalks == cokernel.stalks
    assert homology(cosheaf, 0).dim == 2


def test_long_exact_sequence():
    _, iota = sensing_sheaf(two_sensors())
    les = sensing_les(iota)
    assert les.is_exact()
    assert les.node('H^0(F)').dim == cohomology_c(iota.source, 0).dim == 0
    assert les.node('H^0(const)').dim == 2
    assert les.node('H^0(cok)').dim == 2
    assert forced_section_count(les) == 2


def test_evasion_sets_and_forcing():
    nerve = two_sensors()
    sets = evasion_sets(nerve)
    assert [(s.covector, s.cells, s.components) for s in sets] == [
        (0, ('v',), 1), (1, ('u',), 1)]

    les = sensing_les(sensing_sheaf(nerve)[1])
    assert forcing(les, [1]) == 1
    with pytest.raises(ValueError):
        forcing(les, [3])


def test_a_blind_vertex():
    nerve = SensorNerve.from_covectors([('u', 'v'), ('v', 'w')], 1, {'u': [[1]]})
    (unseen,) = evasion_sets(nerve)
    assert unseen.cells == ('v', 'w', 'vw')
    assert unseen.components == 1


def test_sensor_shapes():
    complex_ = interval()
    with pytest.raises(IncompatibleShapes):
        SensorNerve(complex_, 2, {'x': Matrix.from_rows(Q, [[1]])})
    with pytest.raises(IncompatibleShapes):
        SensorNerve(complex_, 1, {'a': Matrix.from_rows(Q, [[1]])})

    slanted = SensorNerve.from_covectors([('u', 'v')], 2, {'u': [[1, 1]]})
    with pytest.raises(IncompatibleShapes):
        evasion_sets(slanted)


def test_cokernel_needs_an_embedding():
    constant = constant_sheaf(interval())
    zero = SheafMorphism(constant, constant,
                         {cell: Matrix.zeros(Q, 1, 1) for cell in constant.complex.cells})
    with pytest.raises(NotInjective):
        sensing_cokernel(zero)
