import pytest

from cellsheaf.exceptions import ParseError
from cellsheaf.formats import Record, lex, lex_line


def test_positional_words_and_options():
    assert lex_line('cell x dim=0 compact=false', 3) == Record(
        line=3, keyword='cell', args=['x'], options={'dim': '0', 'compact': 'false'})
    assert lex_line('simplex a b c   # a triangle', 1).args == ['a', 'b', 'c']


def test_bracketed_values_may_span_spaces():
    record = lex_line('map x a rows=[[1, 2], [3/4,  -1]]', 1)
    assert record.options == {'rows': [['1', '2'], ['3/4', '-1']]}
    assert lex_line('sensor v covectors=[]', 1).options == {'covectors': []}


@pytest.mark.parametrize('text', ['', '   ', '# only a comment', '\t# indented comment'])
def test_blank_lines(text):
    assert lex_line(text, 1) is None


def test_lex_skips_blank_lines_and_counts_them():
    records = lex('kind complex\n\n# cells\ncell x dim=0\n')
    assert [(r.line, r.keyword) for r in records] == [(1, 'kind'), (4, 'cell')]


@pytest.mark.parametrize('text, column', [
    ('Cell x', 1),
    ('cell x dim=', None),
    ('cell dim=0 x', None),
    ('cell x dim=0 dim=1', None),
    ('map x a rows=[[1 2]]', None),
    ('map x a rows=[[1, 2]', None),
])
def test_malformed_lines(text, column):
    with pytest.raises(ParseError) as info:
        lex_line(text, 7)
    assert info.value.line == 7
    assert 'line 7' in str(info.value)
    if column is not None:
        assert info.value.column == column
