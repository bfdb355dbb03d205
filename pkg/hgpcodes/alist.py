# alist.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""Reading and writing parity-check matrices.

The alist layout is line based:

  cols rows
  max_col_weight max_row_weight
  column weights
  row weights
  one line per column: its rows, 1-based
  one line per row: its columns, 1-based

Lists are not padded with zeros, so an empty column is an empty line.
"""
import logging

from hgpcodes.gf2 import BinaryMatrix

log = logging.getLogger(__name__)

class MatrixFormatError(ValueError):
    pass

class AlistParseError(MatrixFormatError):
    pass

def _reader(lines):
    def ints(lineno, expected=None):
        if lineno > len(lines):
            if expected == 0:
                return []
            raise AlistParseError('line %d: unexpected end of input' %
                                  lineno)
        text = lines[lineno - 1]
        try:
            values = [int(tok) for tok in text.split()]
        except ValueError:
            raise AlistParseError('line %d: expected integers, got %r' %
                                  (lineno, text))
        if expected is not None and len(values) != expected:
            raise AlistParseError('line %d: expected %d numbers, found %d' %
                                  (lineno, expected, len(values)))
        return values
    return ints

def _incidences(ints, first_line, count, weights, bound, what):
    pairs = set()
    for j in range(count):
        lineno = first_line + j
        seen = ints(lineno, weights[j])
        for i in seen:
            if not 1 <= i <= bound:
                raise AlistParseError('line %d: index %d out of range 1..%d'
                                      % (lineno, i, bound))
        if len(set(seen)) != len(seen):
            raise AlistParseError('line %d: repeated index in %s %d' %
                                  (lineno, what, j + 1))
        pairs.update((j, i - 1) for i in seen)
    return pairs

def parse_alist(text):
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    ints = _reader(lines)
    cols, rows = ints(1, 2)
    if cols < 0 or rows < 0:
        raise AlistParseError('line 1: negative dimensions %d %d' %
                              (cols, rows))
    max_col, max_row = ints(2, 2)
    col_weights = ints(3, cols)
    row_weights = ints(4, rows)
    if max(col_weights, default=0) != max_col:
        raise AlistParseError('line 2: maximum column weight is %d, not %d'
                              % (max(col_weights, default=0), max_col))
    if max(row_weights, default=0) != max_row:
        raise AlistParseError('line 2: maximum row weight is %d, not %d' %
                              (max(row_weights, default=0), max_row))
    if sum(col_weights) != sum(row_weights):
        raise AlistParseError('line 4: row weights sum to %d but column '
                              'weights to %d' % (sum(row_weights),
                                                 sum(col_weights)))
    by_col = _incidences(ints, 5, cols, col_weights, rows, 'column')
    by_row = _incidences(ints, 5 + cols, rows, row_weights, cols, 'row')
    by_col = {(i, j) for (j, i) in by_col}
    if by_col != by_row:
        i = min(i for (i, _) in by_col ^ by_row)
        raise AlistParseError('line %d: row %d disagrees with the column '
                              'lists' % (5 + cols + i, i + 1))
    end = 4 + cols + rows
    for lineno, extra in enumerate(lines[end:], end + 1):
        if extra.strip():
            raise AlistParseError('line %d: unexpected trailing data' %
                                  lineno)
    supports = [[] for _ in range(rows)]
    for i, j in by_row:
        supports[i].append(j)
    return BinaryMatrix.from_supports(rows, cols, supports)

def _join(values):
    return ' '.join(str(int(v)) for v in values)

def emit_alist(m):
    col_weights = m.col_weights()
    row_weights = m.row_weights()
    lines = ['%d %d' % (m.cols, m.rows),
             '%d %d' % (max(col_weights.tolist(), default=0),
                        max(row_weights.tolist(), default=0)),
             _join(col_weights),
             _join(row_weights)]
    lines += [_join(i + 1 for i in s) for s in m.col_supports()]
    lines += [_join(j + 1 for j in s) for s in m.row_supports()]
    return '\n'.join(lines) + '\n'

def read_alist(path):
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise AlistParseError('%s: not a text file: %s' % (path, e))
    try:
        return parse_alist(text)
    except AlistParseError as e:
        raise AlistParseError('%s: %s' % (path, e))

def write_alist(path, m):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(emit_alist(m))
    log.debug('wrote %dx%d matrix to %s', m.rows, m.cols, path)

def matrix_to_json(m):
    return {'rows': m.rows, 'cols': m.cols,
            'row_supports': m.row_supports()}

def matrix_from_json(obj):
    try:
        return BinaryMatrix.from_supports(obj['rows'], obj['cols'],
                                          obj['row_supports'])
    except (KeyError, TypeError, ValueError) as e:
        raise MatrixFormatError('malformed matrix object: %s' % e)
