import random

import pytest

from cellsheaf.corpus import Corpus
from cellsheaf.linalg import get_field
from cellsheaf.topology import standard


@pytest.fixture
def corpus():
    return Corpus()


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def rationals():
    return get_field('Q')


@pytest.fixture
def f7():
    return get_field('F7')


@pytest.fixture
def closed_interval():
    return standard.interval()


@pytest.fixture
def square():
    return standard.unit_square()


@pytest.fixture
def small_complexes():
    return [
        standard.interval(),
        standard.half_open_interval(),
        standard.circle(3),
        standard.unit_square(),
        standard.half_open_square(),
        standard.two_sphere(),
    ]
