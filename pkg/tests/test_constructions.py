# -*- coding: utf-8 -*-
import pytest

from hgpcodes import constructions, css, gf2
from hgpcodes.constructions import (ClassicalCodeSpec, CycleGraph, Explicit,
                                    Hamming, RandomRegular, Repetition,
                                    build_classical)
from hgpcodes.gf2 import BinaryMatrix

# Fixtures ###

@pytest.fixture
def repetition():
    return BinaryMatrix.from_rows(['110', '011'])

# Tests ###

def test_cycle_graph():
    c = constructions.cycle_graph(4)
    assert c.col_supports() == [[0, 1], [1, 2], [2, 3], [0, 3]]
    double = constructions.cycle_graph(2)
    assert double == BinaryMatrix.from_rows(['11', '11'])
    with pytest.raises(constructions.InvalidParameter):
        constructions.cycle_graph(1)

def test_toric_matches_hgp():
    c = constructions.cycle_graph(4)
    _, code = constructions.hgp(c, c)
    toric = constructions.toric(4)
    assert toric.h_x == code.h_x
    assert toric.h_z == code.h_z
    assert toric.n == 32

@pytest.mark.parametrize('m', [0, 1])
def test_toric_rejects_small_m(m):
    with pytest.raises(constructions.InvalidParameter):
        constructions.toric(m)

def test_hgp_repetition_squared(repetition):
    p, code = constructions.hgp(repetition, repetition)
    assert code.n == 12
    assert css.quantum_dimension(code) == css.dimension_by_formula(p)
    assert gf2.mat_mul(code.h_x, gf2.transpose(code.h_z)).nnz == 0

def test_hgp_from_single(repetition):
    p, code = constructions.hgp_from_single(repetition)
    assert code.n == 13
    assert css.quantum_dimension(code) == 1
    assert p.right.incidence == gf2.transpose(repetition)

def test_hgp_from_single_identity():
    _, code = constructions.hgp_from_single(BinaryMatrix.identity(4))
    assert code.n == 32
    assert css.quantum_dimension(code) == 0

def test_hgp_from_single_rejects_rank_deficient():
    redundant = BinaryMatrix.from_rows(['110', '011', '101'])
    with pytest.raises(constructions.RankDeficientError) as excinfo:
        constructions.hgp_from_single(redundant)
    assert 'row-reduce' in str(excinfo.value)

def test_repetition():
    assert build_classical(Repetition(4)) == \
        BinaryMatrix.from_rows(['1100', '0110', '0011'])
    with pytest.raises(constructions.InvalidParameter):
        build_classical(Repetition(1))

def test_hamming():
    h = build_classical(Hamming(3))
    assert h.shape == (3, 7)
    columns = h.to_dense()
    values = [sum(int(columns[i, j]) << i for i in range(3))
              for j in range(7)]
    assert values == list(range(1, 8))

def test_cycle_graph_kind():
    assert build_classical(CycleGraph(5)) == constructions.cycle_graph(5)

def test_random_regular():
    h = build_classical(RandomRegular(12, 3, 4, seed=7))
    assert h.shape == (9, 12)
    assert (h.col_weights() == 3).all()
    assert (h.row_weights() == 4).all()
    assert h.to_dense().max() == 1
    again = build_classical(RandomRegular(12, 3, 4, seed=7))
    assert again == h

def test_random_regular_seeds_differ():
    a = build_classical(RandomRegular(12, 3, 4, seed=1))
    b = build_classical(RandomRegular(12, 3, 4, seed=2))
    assert a != b

@pytest.mark.parametrize('kind', [
    RandomRegular(10, 3, 4),   # 30 sockets do not split into rows of 4
    RandomRegular(5, 2, 10),   # rows wider than the code
    RandomRegular(0, 3, 3),
])
def test_random_regular_infeasible(kind):
    with pytest.raises(constructions.InvalidParameter):
        build_classical(kind)

def test_random_regular_gives_up(monkeypatch):
    monkeypatch.setattr(constructions, 'MAX_RETRIES', 0)
    with pytest.raises(constructions.GenerationFailure) as excinfo:
        build_classical(RandomRegular(12, 3, 4, seed=11))
    assert 'seed 11' in str(excinfo.value)

def test_expected_parameters(repetition):
    spec = ClassicalCodeSpec(Explicit(repetition), expected=(3, 1, 3))
    assert build_classical(spec) == repetition
    wrong = ClassicalCodeSpec(Hamming(3), expected=(7, 4, 4))
    with pytest.raises(constructions.InvalidParameter):
        build_classical(wrong)

def test_classical_params():
    n, k, d = constructions.classical_params(build_classical(Hamming(3)))
    assert (n, k, d.weight) == (7, 4, 3)
    n, k, d = constructions.classical_params(BinaryMatrix.identity(3))
    assert (n, k) == (3, 0)
    assert d.is_infinite

def test_single_matrix_distance_matches_classical(repetition):
    for h in (repetition, build_classical(Hamming(3)),
              build_classical(Repetition(4))):
        _, code = constructions.hgp_from_single(h)
        params = css.full_params(code)
        assert params.d.weight == css.classical_min_distance(h).weight
