import pytest

from cellsheaf.barcodes import check_persistence_corollary, persistence_cosheaves
from cellsheaf.sheaves import CellCosheaf
from cellsheaf.topology import identity_map
from cellsheaf.topology.standard import path, sphere_height_model, torus_height_model


def test_sphere_over_an_interval():
    _, target, f = sphere_height_model()
    rows = check_persistence_corollary(f)
    assert [row.total for row in rows] == [1, 0, 1]
    assert all(row.ok for row in rows)

    layers = persistence_cosheaves(f)
    assert all(isinstance(layer, CellCosheaf) for layer in layers.values())
    assert all(set(layer.complex.cells) == set(target.cells) for layer in layers.values())


@pytest.mark.smoke
def test_torus_over_four_levels():
    _, _, f = torus_height_model()
    rows = check_persistence_corollary(f)
    assert [row.total for row in rows] == [1, 2, 1]
    assert all(row.ok for row in rows)


def test_identity_on_a_path():
    complex_ = path(['u', 'v', 'w'])
    rows = check_persistence_corollary(identity_map(complex_))
    assert [(row.total, row.h0_term, row.h1_term) for row in rows] == [(1, 1, 0), (0, 0, 0)]
