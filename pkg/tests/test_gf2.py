# -*- coding: utf-8 -*-
import itertools

import numpy as np
import pytest

from hgpcodes import gf2
from hgpcodes.gf2 import BinaryMatrix, BinaryVector, DimensionError

# Fixtures ###

@pytest.fixture
def rng():
    return np.random.default_rng(20260118)

@pytest.fixture
def pair():
    return BinaryMatrix.from_rows(['110', '011'])

def random_matrix(rng, rows, cols, density=0.5, layout='dense'):
    dense = (rng.random((rows, cols)) < density).astype(np.uint8)
    return BinaryMatrix.from_dense(dense, layout=layout)

def row_span(m):
    """Every vector in the row space of ``m``, as tuples."""
    dense = m.to_dense()
    span = set()
    for coeffs in itertools.product((0, 1), repeat=m.rows):
        v = np.zeros(m.cols, dtype=np.uint8)
        for c, row in zip(coeffs, dense):
            if c:
                v ^= row
        span.add(tuple(v))
    return span

# Tests ###

def test_vector_basics():
    v = BinaryVector.from_string('101')
    assert v.weight == 2
    assert str(v) == '101'
    assert v.support() == [0, 2]
    assert BinaryVector.zeros(5).weight == 0
    assert v ^ BinaryVector.from_string('110') == BinaryVector.from_string('011')
    assert BinaryVector.from_support(4, [1, 3]) == BinaryVector.from_string('0101')
    with pytest.raises(DimensionError):
        v ^ BinaryVector.zeros(4)
    with pytest.raises(DimensionError):
        v[3]

def test_rank_examples(pair):
    assert gf2.rank(BinaryMatrix.identity(3)) == 3
    assert gf2.rank(BinaryMatrix.zeros(4, 7)) == 0
    assert gf2.rank(pair) == 2

def test_kernel_examples(pair):
    assert gf2.kernel_basis(pair) == [BinaryVector.from_string('111')]
    assert gf2.kernel_basis(BinaryMatrix.identity(4)) == []
    assert gf2.kernel_basis(BinaryMatrix.from_rows(['11'])) == \
        [BinaryVector.from_string('11')]

def test_empty_matrices():
    assert gf2.rank(BinaryMatrix.zeros(0, 3)) == 0
    assert len(gf2.kernel_basis(BinaryMatrix.zeros(0, 3))) == 3
    assert gf2.rank(BinaryMatrix.zeros(3, 0)) == 0
    assert gf2.kernel_basis(BinaryMatrix.zeros(3, 0)) == []

def test_row_reduce_pivot_rule():
    reduced, pivots = gf2.row_reduce(BinaryMatrix.from_rows(['011', '110']))
    assert pivots == [0, 1]
    assert reduced == BinaryMatrix.from_rows(['101', '011'])

def test_in_row_space(pair):
    assert gf2.in_row_space(pair, BinaryVector.zeros(3))
    assert gf2.in_row_space(pair, BinaryVector.from_string('101'))
    single = BinaryMatrix.from_rows(['110'])
    assert not gf2.in_row_space(single, BinaryVector.from_string('001'))
    with pytest.raises(DimensionError):
        gf2.in_row_space(pair, BinaryVector.zeros(4))

def test_mat_mul_examples():
    b = BinaryMatrix.from_rows(['101', '011', '111'])
    assert gf2.mat_mul(BinaryMatrix.identity(3), b) == b
    ones = gf2.mat_mul(BinaryMatrix.from_rows(['11']),
                       BinaryMatrix.from_rows(['1', '1']))
    assert ones == BinaryMatrix.zeros(1, 1)
    with pytest.raises(DimensionError):
        gf2.mat_mul(b, BinaryMatrix.identity(2))

def test_mat_vec():
    m = BinaryMatrix.from_rows(['110', '011'])
    assert gf2.mat_vec(m, BinaryVector.from_string('100')) == \
        BinaryVector.from_string('10')
    assert gf2.mat_vec(m, BinaryVector.from_string('111')).weight == 0

def test_entry_access():
    m = BinaryMatrix.from_rows(['010'])
    assert m[0, 1] == 1
    assert m[0, 2] == 0
    with pytest.raises(DimensionError):
        m[1, 0]
    with pytest.raises(DimensionError):
        m[0, 3]

def test_word_boundaries():
    cols = 130
    supports = [[0, 63, 64, 129], [1, 64], [63, 128]]
    m = BinaryMatrix.from_supports(3, cols, supports)
    assert m.row_supports() == supports
    assert m[0, 129] == 1 and m[2, 128] == 1 and m[1, 63] == 0
    assert gf2.rank(m) == 3
    for v in gf2.kernel_basis(m):
        assert gf2.mat_vec(m, v).weight == 0

def test_layout_choice():
    wide = BinaryMatrix.from_supports(10, 5000, [[i] for i in range(10)])
    assert wide.is_sparse
    small = BinaryMatrix.from_rows(['11'])
    assert not small.is_sparse
    assert wide == wide.with_layout('dense')
    assert BinaryMatrix.from_rows(['101'], layout='sparse') == \
        BinaryMatrix.from_rows(['101'], layout='dense')

def test_kernel_is_systematic(rng):
    for _ in range(20):
        m = random_matrix(rng, 6, 11)
        kernel = gf2.kernel_matrix(m).to_dense()
        free = gf2.free_columns(m)
        assert kernel.shape == (11 - gf2.rank(m), 11)
        assert (kernel[:, free] == np.eye(len(free), dtype=np.uint8)).all()

def test_rank_properties(rng):
    for _ in range(50):
        rows, cols = rng.integers(1, 12, size=2)
        m = random_matrix(rng, rows, cols, density=rng.random())
        r = gf2.rank(m)
        assert r == gf2.rank(gf2.transpose(m))
        assert r <= min(rows, cols)
        kernel = gf2.kernel_basis(m)
        assert r + len(kernel) == cols
        for v in kernel:
            assert gf2.mat_vec(m, v).weight == 0
        assert gf2.transpose(gf2.transpose(m)) == m

def test_in_row_space_matches_oracle(rng):
    for _ in range(25):
        m = random_matrix(rng, rng.integers(1, 6), 8, density=0.4)
        span = row_span(m)
        for bits in itertools.product((0, 1), repeat=8):
            v = BinaryVector(bits)
            assert gf2.in_row_space(m, v) == (tuple(bits) in span)

def test_layouts_agree(rng):
    for _ in range(20):
        dense = random_matrix(rng, 7, 9, density=0.3)
        sparse = dense.with_layout('sparse')
        other = random_matrix(rng, 9, 5, density=0.3)
        assert sparse.is_sparse
        assert gf2.rank(dense) == gf2.rank(sparse)
        assert gf2.kernel_matrix(dense) == gf2.kernel_matrix(sparse)
        assert gf2.mat_mul(dense, other) == \
            gf2.mat_mul(sparse, other.with_layout('sparse'))

def test_stacking():
    a = BinaryMatrix.from_rows(['10'])
    b = BinaryMatrix.from_rows(['01'])
    assert gf2.vstack(a, b) == BinaryMatrix.identity(2)
    assert gf2.vstack(a, BinaryVector.from_string('11')) == \
        BinaryMatrix.from_rows(['10', '11'])
    assert gf2.hstack(a, b) == BinaryMatrix.from_rows(['1001'])
    with pytest.raises(DimensionError):
        gf2.vstack(a, BinaryMatrix.from_rows(['111']))
