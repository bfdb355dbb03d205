# -*- coding: utf-8 -*-
import json

import pytest

from hgpcodes import alist
from hgpcodes.alist import AlistParseError, MatrixFormatError
from hgpcodes.constructions import cycle_graph
from hgpcodes.gf2 import BinaryMatrix

REPETITION = """3 2
2 2
1 2 1
2 2
1
1 2
2
1 2
2 3
"""

# Fixtures ###

@pytest.fixture
def repetition():
    return BinaryMatrix.from_rows(['110', '011'])

def broken(lineno, replacement):
    lines = REPETITION.split('\n')
    lines[lineno - 1] = replacement
    return '\n'.join(lines)

# Tests ###

def test_emit(repetition):
    text = alist.emit_alist(repetition)
    assert text == REPETITION
    assert len(text.splitlines()) == 9

def test_parse(repetition):
    assert alist.parse_alist(REPETITION) == repetition
    assert alist.parse_alist(REPETITION.rstrip('\n')) == repetition

def test_empty_columns_and_rows():
    m = BinaryMatrix.from_rows(['100', '000'])
    text = alist.emit_alist(m)
    assert text.split('\n')[2:4] == ['1 0 0', '1 0']
    assert alist.parse_alist(text) == m
    empty = BinaryMatrix.zeros(0, 2)
    assert alist.parse_alist(alist.emit_alist(empty)) == empty

def test_sparse_matrix_survives():
    c = cycle_graph(12).with_layout('sparse')
    assert alist.parse_alist(alist.emit_alist(c)) == c

@pytest.mark.parametrize('lineno, replacement, message', [
    (1, '3', 'line 1: expected 2 numbers'),
    (2, '3 2', 'line 2: maximum column weight'),
    (3, '1 2 x', 'line 3: expected integers'),
    (4, '2 1', 'line 4: row weights sum'),
    (6, '1 4', 'line 6: index 4 out of range'),
    (9, '2 2', 'line 9: repeated index'),
    (10, '7', 'line 10: unexpected trailing data'),
])
def test_parse_errors_cite_lines(lineno, replacement, message):
    text = broken(lineno, replacement)
    with pytest.raises(AlistParseError) as excinfo:
        alist.parse_alist(text)
    assert message in str(excinfo.value)

def test_disagreeing_lists():
    text = broken(9, '1 3')
    with pytest.raises(AlistParseError) as excinfo:
        alist.parse_alist(text)
    assert 'disagrees with the column lists' in str(excinfo.value)

def test_truncated_input():
    with pytest.raises(AlistParseError) as excinfo:
        alist.parse_alist('\n'.join(REPETITION.split('\n')[:6]))
    assert 'line 7: unexpected end of input' in str(excinfo.value)

def test_parse_error_is_a_format_error():
    assert issubclass(AlistParseError, MatrixFormatError)

def test_files(tmpdir, repetition):
    path = str(tmpdir.join('h.alist'))
    alist.write_alist(path, repetition)
    assert alist.read_alist(path) == repetition
    bad = tmpdir.join('bad.alist')
    bad.write('oops\n')
    with pytest.raises(AlistParseError) as excinfo:
        alist.read_alist(str(bad))
    assert str(excinfo.value).startswith(str(bad))
    binary = tmpdir.join('binary.alist')
    binary.write_binary(b'\xff\xfe3 2\n')
    with pytest.raises(AlistParseError) as excinfo:
        alist.read_alist(str(binary))
    assert 'not a text file' in str(excinfo.value)

def test_json(repetition):
    obj = alist.matrix_to_json(repetition)
    assert obj == {'rows': 2, 'cols': 3, 'row_supports': [[0, 1], [1, 2]]}
    assert alist.matrix_from_json(json.loads(json.dumps(obj))) == repetition
    with pytest.raises(MatrixFormatError):
        alist.matrix_from_json({'rows': 2})
