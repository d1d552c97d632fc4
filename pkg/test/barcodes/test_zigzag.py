import pytest

from cellsheaf.barcodes import (
    PathComplex, barcode_homology, format_bar, long_bar, rank_check, zigzag_decompose)
from cellsheaf.containers import Bar
from cellsheaf.corpus import Corpus
from cellsheaf.exceptions import NotPathComplex
from cellsheaf.homology import homology, cohomology
from cellsheaf.linalg import Matrix, get_field
from cellsheaf.sheaves import (
    CellCosheaf, conjugate, constant_cosheaf, constant_sheaf, random_cosheaf, random_sheaf)
from cellsheaf.topology.standard import circle, interval, path

Q = get_field('Q')
CORPUS = Corpus()

PATHS = [
    interval(),
    path(['u', 'v', 'w', 'z']),
    path(['u', 'v', 'w'], open_left=True),
    path(['u', 'v'], open_left=True, open_right=True),
]


def random_invertible(rng, size, field=Q):
    if not size:
        return Matrix.identity(field, 0)
    while True:
        matrix = Matrix.from_rows(
            field, [[rng.randint(-2, 2) for _ in range(size)] for _ in range(size)], size)
        if matrix.is_invertible():
            return matrix


def texts(barcode):
    return [format_bar(bar) for bar in barcode.bars()]


def test_format_bar():
    assert format_bar(Bar('x', 'w', True, True, 1)) == '[x, w] kind=cc mult=1'
    assert format_bar(Bar('y', 'b', True, False, 2)) == '[y, b[ kind=co mult=2'
    assert format_bar(Bar('a', 'a', False, False, 1)) == ']a, a[ kind=oo mult=1'


def test_constant_cosheaf_is_one_long_bar():
    barcode = zigzag_decompose(constant_cosheaf(path(['u', 'v', 'w'])))
    assert texts(barcode) == ['[u, w] kind=cc mult=1']
    assert long_bar(barcode).multiplicity == 1
    assert barcode_homology(barcode) == (1, 0)


def test_a_zero_map_splits_the_bar():
    complex_ = interval()
    cosheaf = CellCosheaf(complex_, {'x': 1, 'a': 1, 'y': 1},
                          {('x', 'a'): Matrix.identity(Q, 1),
                           ('y', 'a'): Matrix.zeros(Q, 1, 1)})
    barcode = zigzag_decompose(cosheaf)
    assert texts(barcode) == ['[x, a[ kind=co mult=1', '[y, y] kind=cc mult=1']
    assert long_bar(barcode) is None
    assert barcode.verify(cosheaf)


def test_multiplicities():
    barcode = zigzag_decompose(constant_sheaf(interval(), 3))
    assert texts(barcode) == ['[x, y] kind=cc mult=3']
    assert barcode.multiset() == [('x', 'y', 3)]
    assert len(barcode) == 3


def test_zero_representation_has_no_bars():
    assert len(zigzag_decompose(CellCosheaf(interval(), {}))) == 0


def test_non_path_complexes_are_rejected():
    with pytest.raises(NotPathComplex):
        zigzag_decompose(constant_cosheaf(circle(3)))


@pytest.mark.parametrize('complex_', PATHS)
def test_random_decompositions_verify(rng, complex_):
    for _ in range(10):
        for rep in (random_sheaf(complex_, rng, generators=4),
                    random_cosheaf(complex_, rng, generators=4)):
            barcode = zigzag_decompose(rep)
            assert barcode.verify(rep)
            assert rank_check(rep, barcode)
            assert sum(bar.multiplicity for bar in barcode.bars()) == len(barcode)


@pytest.mark.parametrize('complex_', PATHS)
def test_barcodes_are_invariant_under_change_of_basis(rng, complex_):
    for _ in range(50):
        rep = random_cosheaf(complex_, rng, generators=4)
        changes = {cell: random_invertible(rng, rep.stalks[cell]) for cell in complex_.cells}
        conjugated, _ = conjugate(rep, changes)
        assert zigzag_decompose(conjugated).multiset() == zigzag_decompose(rep).multiset()


@pytest.mark.parametrize('fixture', [
    pytest.param(f, id=f.name) for f in CORPUS if 'barcode' in f.expect])
def test_corpus_barcodes_are_invariant_under_change_of_basis(rng, fixture):
    rep = CORPUS.load(fixture, environ={}).body
    expected = zigzag_decompose(rep).multiset()
    for _ in range(50):
        changes = {cell: random_invertible(rng, rep.stalks[cell], rep.field)
                   for cell in rep.complex.cells}
        conjugated, _ = conjugate(rep, changes)
        assert zigzag_decompose(conjugated).multiset() == expected


def test_barcode_homology_table(rng):
    complex_ = path(['u', 'v', 'w'])
    for _ in range(10):
        cosheaf = random_cosheaf(complex_, rng, generators=4)
        assert barcode_homology(zigzag_decompose(cosheaf)) == (
            homology(cosheaf, 0).dim, homology(cosheaf, 1).dim)

        sheaf = random_sheaf(complex_, rng, generators=4)
        assert barcode_homology(zigzag_decompose(sheaf)) == (
            cohomology(sheaf, 0).dim, cohomology(sheaf, 1).dim)


def test_explicit_path_argument():
    complex_ = interval()
    barcode = zigzag_decompose(constant_cosheaf(complex_), PathComplex(complex_))
    assert barcode.path.order == ['x', 'a', 'y']
