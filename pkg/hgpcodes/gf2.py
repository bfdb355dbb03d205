# gf2.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""Exact linear algebra over GF(2).

Rows are packed into 64-bit words: column ``c`` is bit ``c % 64`` of word
``c // 64``.  Wide matrices that are nearly empty are kept as
``scipy.sparse`` index lists instead and packed when elimination needs
them.
"""
from __future__ import annotations

import logging

import numpy as np
from scipy import sparse

log = logging.getLogger(__name__)

WORD_BITS = 64
SPARSE_MAX_DENSITY = 0.05
SPARSE_MIN_COLS = 4096

class DimensionError(ValueError):
    pass

def word_count(cols):
    return -(-cols // WORD_BITS)

def pack_rows(dense):
    """Pack a 2-d 0/1 array into an array of ``uint64`` words per row."""
    dense = np.asarray(dense)
    if dense.ndim != 2:
        raise DimensionError('expected a 2-d array, got shape %r' %
                             (dense.shape,))
    bits = dense.astype(np.uint8) & 1
    rows, cols = bits.shape
    words = word_count(cols)
    if rows == 0 or cols == 0:
        return np.zeros((rows, words), dtype=np.uint64)
    padded = np.zeros((rows, words * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = bits
    packed = np.packbits(padded, axis=1, bitorder='little')
    return packed.view('<u8').astype(np.uint64)

def unpack_rows(words, cols):
    rows = words.shape[0]
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    raw = np.ascontiguousarray(words, dtype='<u8').view(np.uint8)
    return np.unpackbits(raw, axis=1, count=cols, bitorder='little')

def popcount(words):
    """Number of set bits along the last axis of a packed array."""
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)

def _use_sparse(layout, rows, cols, nnz):
    if layout == 'dense':
        return False
    if layout == 'sparse':
        return True
    if layout != 'auto':
        raise ValueError('unknown layout %r' % (layout,))
    return cols > SPARSE_MIN_COLS and nnz < SPARSE_MAX_DENSITY * rows * cols

class BinaryVector(object):
    """A vector over GF(2)."""

    __slots__ = ('bits',)

    def __init__(self, bits):
        arr = np.array(bits, dtype=np.uint8).reshape(-1) & 1
        arr.setflags(write=False)
        self.bits = arr

    @classmethod
    def from_string(cls, text):
        return cls([int(c) for c in text if not c.isspace()])

    @classmethod
    def from_support(cls, length, support):
        bits = np.zeros(length, dtype=np.uint8)
        for i in support:
            if not 0 <= i < length:
                raise DimensionError('index %d out of range for length %d'
                                     % (i, length))
            bits[i] = 1
        return cls(bits)

    @classmethod
    def zeros(cls, length):
        return cls(np.zeros(length, dtype=np.uint8))

    @property
    def weight(self):
        return int(self.bits.sum(dtype=np.int64))

    def support(self):
        return np.flatnonzero(self.bits).tolist()

    def packed(self):
        return pack_rows(self.bits[np.newaxis, :])[0]

    def __len__(self):
        return self.bits.shape[0]

    def __iter__(self):
        return (int(b) for b in self.bits)

    def __getitem__(self, i):
        if not 0 <= i < len(self):
            raise DimensionError('index %d out of range for length %d'
                                 % (i, len(self)))
        return int(self.bits[i])

    def __xor__(self, other):
        if len(self) != len(other):
            raise DimensionError('cannot add vectors of length %d and %d'
                                 % (len(self), len(other)))
        return BinaryVector(self.bits ^ other.bits)

    def __eq__(self, other):
        if not isinstance(other, BinaryVector):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    __hash__ = None

    def __str__(self):
        return ''.join('1' if b else '0' for b in self.bits)

    def __repr__(self):
        return 'BinaryVector(%r)' % str(self)

class BinaryMatrix(object):
    """A matrix over GF(2), bit-packed or sparse."""

    __slots__ = ('rows', 'cols', '_words', '_csr')

    def __init__(self, rows, cols, words=None, csr=None):
        if words is None and csr is None:
            raise ValueError('a matrix needs packed words or a sparse body')
        if words is not None:
            words.setflags(write=False)
        self.rows = rows
        self.cols = cols
        self._words = words
        self._csr = csr

    # Construction

    @classmethod
    def from_dense(cls, array, layout='auto'):
        dense = np.asarray(array)
        if dense.ndim != 2:
            raise DimensionError('expected a 2-d array, got shape %r' %
                                 (dense.shape,))
        bits = dense.astype(np.uint8) & 1
        rows, cols = bits.shape
        if _use_sparse(layout, rows, cols, int(bits.sum(dtype=np.int64))):
            return cls(rows, cols, csr=sparse.csr_matrix(bits))
        return cls(rows, cols, words=pack_rows(bits))

    @classmethod
    def from_sparse(cls, matrix, layout='auto'):
        csr = sparse.csr_matrix(matrix, dtype=np.int64)
        csr.sum_duplicates()
        csr.data %= 2
        csr.eliminate_zeros()
        csr = csr.astype(np.uint8)
        rows, cols = csr.shape
        if _use_sparse(layout, rows, cols, csr.nnz):
            return cls(rows, cols, csr=csr)
        return cls(rows, cols, words=pack_rows(csr.toarray()))

    @classmethod
    def from_supports(cls, rows, cols, supports, layout='auto'):
        """Build a matrix from the list of column indices set in each row."""
        supports = list(supports)
        if len(supports) != rows:
            raise DimensionError('%d supports given for %d rows' %
                                 (len(supports), rows))
        row_idx, col_idx = [], []
        for i, support in enumerate(supports):
            for j in sorted(set(support)):
                if not 0 <= j < cols:
                    raise DimensionError('column index %d out of range for '
                                         '%d columns' % (j, cols))
                row_idx.append(i)
                col_idx.append(j)
        data = np.ones(len(row_idx), dtype=np.uint8)
        coo = sparse.coo_matrix(
            (data, (np.asarray(row_idx, dtype=np.intp),
                    np.asarray(col_idx, dtype=np.intp))),
            shape=(rows, cols))
        return cls.from_sparse(coo, layout)

    @classmethod
    def from_rows(cls, rows, cols=None, layout='auto'):
        """Build a matrix from bit strings (``"110"``) or 0/1 sequences."""
        parsed = []
        for row in rows:
            if isinstance(row, str):
                row = [c for c in row if not c.isspace()]
            bits = [int(b) for b in row]
            if any(b not in (0, 1) for b in bits):
                raise ValueError('row %r is not binary' % (row,))
            parsed.append(bits)
        if cols is None:
            if not parsed:
                raise DimensionError('cannot infer the column count of an '
                                     'empty row list')
            cols = len(parsed[0])
        if any(len(bits) != cols for bits in parsed):
            raise DimensionError('rows must all have %d entries' % cols)
        dense = np.array(parsed, dtype=np.uint8).reshape(len(parsed), cols)
        return cls.from_dense(dense, layout)

    @classmethod
    def zeros(cls, rows, cols, layout='auto'):
        return cls.from_dense(np.zeros((rows, cols), dtype=np.uint8), layout)

    @classmethod
    def identity(cls, n, layout='auto'):
        return cls.from_dense(np.eye(n, dtype=np.uint8), layout)

    # Access

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_sparse(self):
        return self._csr is not None

    @property
    def words(self):
        if self._words is None:
            words = pack_rows(self._csr.toarray())
            words.setflags(write=False)
            self._words = words
        return self._words

    @property
    def nnz(self):
        if self.is_sparse:
            return int(self._csr.nnz)
        return int(popcount(self.words).sum())

    def with_layout(self, layout):
        if layout == 'sparse':
            return BinaryMatrix.from_sparse(self.to_sparse(), layout)
        return BinaryMatrix.from_dense(self.to_dense(), layout)

    def to_dense(self):
        if self.is_sparse:
            return self._csr.toarray().astype(np.uint8)
        return unpack_rows(self.words, self.cols)

    def to_sparse(self):
        if self.is_sparse:
            return self._csr.copy()
        return sparse.csr_matrix(self.to_dense())

    def row(self, i):
        if not 0 <= i < self.rows:
            raise DimensionError('row %d out of range for %d rows' %
                                 (i, self.rows))
        if self.is_sparse:
            return BinaryVector(self._csr.getrow(i).toarray()[0])
        return BinaryVector(unpack_rows(self.words[i:i + 1], self.cols)[0])

    def row_supports(self):
        if self.is_sparse:
            csr = self._csr
            return [sorted(csr.indices[csr.indptr[i]:csr.indptr[i + 1]]
                           .tolist()) for i in range(self.rows)]
        return [np.flatnonzero(r).tolist() for r in self.to_dense()]

    def col_supports(self):
        return transpose(self).row_supports()

    def row_weights(self):
        if self.is_sparse:
            return np.diff(self._csr.indptr).astype(np.int64)
        return popcount(self.words)

    def col_weights(self):
        if self.is_sparse:
            return np.bincount(self._csr.indices,
                               minlength=self.cols).astype(np.int64)
        return self.to_dense().sum(axis=0, dtype=np.int64)

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError('entry (%d, %d) out of range for a %dx%d '
                                 'matrix' % (i, j, self.rows, self.cols))
        if self.is_sparse:
            return int(self._csr[i, j])
        w, b = divmod(j, WORD_BITS)
        return int(self.words[i, w] >> np.uint64(b)) & 1

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if not (self.is_sparse or other.is_sparse):
            return np.array_equal(self.words, other.words)
        return np.array_equal(self.to_dense(), other.to_dense())

    __hash__ = None

    def __str__(self):
        return '\n'.join(''.join('1' if b else '0' for b in row)
                         for row in self.to_dense())

    def __repr__(self):
        return 'BinaryMatrix(%dx%d, %s)' % (
            self.rows, self.cols, 'sparse' if self.is_sparse else 'dense')

# Elimination

def _eliminate(words, cols):
    """Gauss-Jordan elimination on packed rows.

    Columns are scanned left to right and the pivot is the lowest-index
    remaining row with a one in that column.  Returns the nonzero rows of
    the reduced row echelon form and the pivot columns.
    """
    a = np.array(words, dtype=np.uint64)
    nrows = a.shape[0]
    pivots = []
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        w, b = divmod(c, WORD_BITS)
        bit = np.uint64(1) << np.uint64(b)
        hits = np.flatnonzero(a[r:, w] & bit)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        mask = (a[:, w] & bit) != 0
        mask[r] = False
        a[mask] ^= a[r]
        pivots.append(c)
        r += 1
    return a[:r], pivots

def row_reduce(m):
    """Return the reduced row echelon form of ``m`` and its pivot columns."""
    reduced, pivots = _eliminate(m.words, m.cols)
    return BinaryMatrix(len(pivots), m.cols, words=reduced), pivots

def rank(m):
    _, pivots = _eliminate(m.words, m.cols)
    log.debug('rank of %dx%d matrix: %d', m.rows, m.cols, len(pivots))
    return len(pivots)

def kernel_matrix(m):
    """Basis of the kernel of ``m`` as the rows of a matrix.

    The basis is systematic: row ``i`` has a one on the ``i``-th free
    column and zeros on every other free column.
    """
    reduced, pivots = _eliminate(m.words, m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((len(free), m.cols), dtype=np.uint8)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            dense = unpack_rows(reduced, m.cols)
            basis[:, pivots] = dense[:, free].T
    return BinaryMatrix.from_dense(basis, layout='dense')

def kernel_basis(m):
    kernel = kernel_matrix(m)
    return [BinaryVector(row) for row in kernel.to_dense()]

def free_columns(m):
    _, pivots = _eliminate(m.words, m.cols)
    pivot_set = set(pivots)
    return [c for c in range(m.cols) if c not in pivot_set]

def vstack(*parts):
    """Stack matrices and vectors with a common column count."""
    cols = None
    blocks = []
    for part in parts:
        if isinstance(part, BinaryVector):
            part = BinaryMatrix.from_dense(part.bits[np.newaxis, :],
                                           layout='dense')
        if cols is None:
            cols = part.cols
        elif part.cols != cols:
            raise DimensionError('cannot stack %d and %d columns' %
                                 (cols, part.cols))
        blocks.append(part)
    if not blocks:
        raise DimensionError('nothing to stack')
    if all(b.is_sparse for b in blocks):
        return BinaryMatrix.from_sparse(
            sparse.vstack([b.to_sparse() for b in blocks]), layout='sparse')
    words = np.vstack([b.words for b in blocks])
    return BinaryMatrix(words.shape[0], cols, words=words)

def hstack(*parts):
    rows = {p.rows for p in parts}
    if len(rows) != 1:
        raise DimensionError('cannot join matrices with row counts %s' %
                             sorted(rows))
    return BinaryMatrix.from_sparse(
        sparse.hstack([p.to_sparse() for p in parts], format='csr'))

def in_row_space(m, v):
    if len(v) != m.cols:
        raise DimensionError('vector of length %d against %d columns' %
                             (len(v), m.cols))
    return rank(m) == rank(vstack(m, v))

def mat_mul(a, b):
    if a.cols != b.rows:
        raise DimensionError('cannot multiply %dx%d by %dx%d' %
                             (a.rows, a.cols, b.rows, b.cols))
    if a.is_sparse and b.is_sparse:
        prod = a.to_sparse().astype(np.int64) @ b.to_sparse().astype(np.int64)
        return BinaryMatrix.from_sparse(prod)
    mask = a.to_dense().astype(bool)
    bw = b.words
    out = np.zeros((a.rows, bw.shape[1]), dtype=np.uint64)
    for i in range(a.rows):
        if mask[i].any():
            out[i] = np.bitwise_xor.reduce(bw[mask[i]], axis=0)
    return BinaryMatrix(a.rows, b.cols, words=out)

def mat_vec(m, v):
    if len(v) != m.cols:
        raise DimensionError('vector of length %d against %d columns' %
                             (len(v), m.cols))
    parity = popcount(m.words & v.packed()) & 1
    return BinaryVector(parity)

def transpose(m):
    if m.is_sparse:
        return BinaryMatrix.from_sparse(m.to_sparse().T, layout='sparse')
    return BinaryMatrix.from_dense(m.to_dense().T, layout='dense')
