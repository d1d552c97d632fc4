import pytest

from cellsheaf.applications import CodedGraph, SensorNerve
from cellsheaf.formats import parse, serialize
from cellsheaf.linalg import Matrix, get_field
from cellsheaf.sheaves import constant_cosheaf
from cellsheaf.topology.standard import circle_map_example, interval

CLOSED_COSHEAF = """kind cosheaf
format 1.1.0
field Q
cell x dim=0 compact=true
cell y dim=0 compact=true
cell a dim=1 compact=true
cover x a sign=-1
cover y a sign=1
stalk x 1
stalk y 1
stalk a 1
map x a rows=[[1]]
map y a rows=[[1]]
"""


def test_representation_text():
    assert serialize(constant_cosheaf(interval())) == CLOSED_COSHEAF


def test_corpus_documents_are_stable(corpus):
    for fixture in corpus:
        body = corpus.load(fixture, environ={}).body
        text = serialize(body)
        assert serialize(parse(text, environ={}).body) == text


def test_map_text():
    _, _, f = circle_map_example()
    text = serialize(f)
    assert 'cellular true' in text
    assert "assign b' b fiber_compact=false" not in text
    assert "cell b' dim=1 compact=false" in text
    assert parse(text, environ={}).body.assignment == f.assignment


def test_graph_text():
    q = get_field('Q')
    graph = CodedGraph({'s': 1, 't': 0}, {'e': ('s', 't'), 'f': ('t', None)},
                       capacities={'f': 1},
                       codings={'s': Matrix.from_rows(q, [[1]]),
                                't': Matrix.from_rows(q, [['1/2']])})
    assert serialize(graph).splitlines()[3:] == [
        'vertex s capacity=1',
        'vertex t',
        'edge e s t',
        'edge f t -',
        'coding s rows=[[1]]',
        'coding t rows=[[1/2]]',
    ]


def test_nerve_text():
    nerve = SensorNerve.from_covectors([('a', 'b'), ('b', 'c')], 2, {'b': [[0, 1]]})
    lines = serialize(nerve).splitlines()
    assert lines[3:] == ['ambient 2', 'simplex a b', 'simplex b c',
                         'sensor b covectors=[[0, 1]]']


def test_field_line():
    text = serialize(interval(), get_field('F3'))
    assert text.splitlines()[:3] == ['kind complex', 'format 1.1.0', 'field F3']
    assert 'field' not in serialize(interval())


def test_unknown_objects():
    with pytest.raises(TypeError):
        serialize(42)
