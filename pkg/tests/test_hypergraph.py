# -*- coding: utf-8 -*-
import numpy as np
import pytest

from hgpcodes import gf2, hypergraph
from hgpcodes.constructions import (Hamming, RandomRegular, build_classical,
                                    cycle_graph)
from hgpcodes.gf2 import BinaryMatrix

# Fixtures ###

@pytest.fixture
def rng():
    return np.random.default_rng(4242)

@pytest.fixture
def c3():
    return hypergraph.from_incidence(cycle_graph(3))

@pytest.fixture
def repetition():
    return BinaryMatrix.from_rows(['110', '011'])

def random_hypergraph(rng, max_vertices=4, max_edges=5):
    v = int(rng.integers(1, max_vertices + 1))
    e = int(rng.integers(1, max_edges + 1))
    dense = (rng.random((v, e)) < 0.5).astype(np.uint8)
    return hypergraph.from_incidence(BinaryMatrix.from_dense(dense))

def random_products(rng, count):
    for _ in range(count):
        yield hypergraph.product(random_hypergraph(rng),
                                 random_hypergraph(rng))

# Tests ###

def test_from_incidence(repetition):
    h = hypergraph.from_incidence(repetition)
    assert (h.vertex_count, h.edge_count) == (2, 3)
    assert h.edge(1) == [0, 1]
    assert h.degree(0) == 2
    empty = hypergraph.from_incidence(BinaryMatrix.zeros(0, 3))
    assert (empty.vertex_count, empty.edge_count) == (0, 3)
    assert empty.edge(2) == []

def test_cycle_graph_edges(c3):
    assert c3.is_uniform() == 2
    assert c3.is_regular() == 2
    assert [c3.edge(j) for j in range(3)] == [[0, 1], [1, 2], [0, 2]]

def test_transpose():
    hamming = hypergraph.from_incidence(build_classical(Hamming(3)))
    t = hypergraph.transpose_hg(hamming)
    assert (t.vertex_count, t.edge_count) == (7, 3)
    assert hypergraph.transpose_hg(t) == hamming
    c5 = hypergraph.from_incidence(cycle_graph(5))
    assert hypergraph.weight_profile(c5.incidence) == \
        hypergraph.weight_profile(hypergraph.transpose_hg(c5).incidence)

def test_cycle_code_dim(c3):
    assert hypergraph.cycle_code_dim(c3) == 1
    hamming = hypergraph.from_incidence(build_classical(Hamming(3)))
    assert hypergraph.cycle_code_dim(hamming) == 4
    assert hypergraph.cycle_code_dim(hypergraph.transpose_hg(hamming)) == 0
    assert hypergraph.cocycle_code_dim(hamming) == 3

def test_product_sizes(c3, repetition):
    p = hypergraph.product(c3, c3)
    assert (p.product.vertex_count, p.edge_count) == (9, 18)
    point = hypergraph.from_incidence(BinaryMatrix.from_rows(['1']))
    q = hypergraph.product(point, point)
    assert (q.product.vertex_count, q.edge_count) == (1, 2)
    h = hypergraph.from_incidence(repetition)
    r = hypergraph.product(h, hypergraph.transpose_hg(h))
    assert (r.product.vertex_count, r.edge_count) == (6, 13)

def test_index_conventions(repetition):
    h1 = hypergraph.from_incidence(repetition)
    h2 = hypergraph.from_incidence(BinaryMatrix.from_rows(['10', '11', '01']))
    p = hypergraph.product(h1, h2)
    inc = p.product.incidence
    v2 = h2.vertex_count
    for a in range(h1.vertex_count):
        for beta in range(h2.edge_count):
            column = p.left_edge_id(a, beta)
            assert column == a * h2.edge_count + beta
            rows = [i for i in range(inc.rows) if inc[i, column]]
            assert rows == [p.vertex_id(a, y) for y in h2.edge(beta)]
    for b in range(v2):
        for alpha in range(h1.edge_count):
            column = p.right_edge_id(b, alpha)
            rows = [i for i in range(inc.rows) if inc[i, column]]
            assert rows == [p.vertex_id(x, b) for x in h1.edge(alpha)]
    assert p.vertex_id(1, 2) == 1 * v2 + 2
    labels = p.edge_index
    assert len(labels) == p.edge_count
    assert labels[0] == hypergraph.EdgeLabel('L', 0, 0)
    assert labels[p.left_edge_count] == hypergraph.EdgeLabel('R', 0, 0)

def test_chambers(c3):
    p = hypergraph.product(c3, c3)
    found = list(hypergraph.chambers(p))
    assert len(found) == 9
    assert all(c.support.weight == 4 for c in found)
    assert [(c.alpha, c.beta) for c in found[:4]] == \
        [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert p.chamber_matrix == gf2.vstack(*[c.support for c in found])

def test_chambers_of_edgeless_factor(c3):
    isolated = hypergraph.from_incidence(BinaryMatrix.zeros(2, 0))
    p = hypergraph.product(c3, isolated)
    assert list(hypergraph.chambers(p)) == []
    assert p.chamber_matrix.rows == 0

def test_duality_on_random_products(rng):
    for p in random_products(rng, 60):
        dual = hypergraph.poincare_dual(p)
        assert hypergraph.transport(dual.chamber_matrix, dual) == \
            p.product.incidence
        assert hypergraph.transport(dual.product.incidence, dual) == \
            p.chamber_matrix
        back = hypergraph.poincare_dual(dual)
        assert back.product.incidence == p.product.incidence

def test_transport_vector(c3):
    p = hypergraph.product(c3, c3)
    dual = hypergraph.poincare_dual(p)
    chamber = next(hypergraph.chambers(dual)).support
    assert hypergraph.transport(chamber, dual) == p.product.incidence.row(0)
    with pytest.raises(ValueError):
        hypergraph.transport(chamber, p)

def test_toric_dual_profile():
    c4 = hypergraph.from_incidence(cycle_graph(4))
    p = hypergraph.product(c4, c4)
    dual = hypergraph.poincare_dual(p)
    assert hypergraph.weight_profile(dual.product.incidence) == \
        hypergraph.weight_profile(p.product.incidence)

def test_chamber_redundancy_on_random_products(rng):
    for p in random_products(rng, 60):
        z1 = gf2.kernel_basis(p.left.incidence)
        z2 = gf2.kernel_basis(p.right.incidence)
        rows = p.chamber_matrix.to_dense()
        e2 = p.right.edge_count
        for u in z1:
            for w in z2:
                total = np.zeros(p.edge_count, dtype=np.uint8)
                for alpha in u.support():
                    for beta in w.support():
                        total ^= rows[alpha * e2 + beta]
                assert not total.any()

def test_code_dimensions_on_random_products(rng):
    for p in random_products(rng, 60):
        dims = hypergraph.cycle_dims(p)
        assert gf2.rank(p.chamber_matrix) == \
            p.left.edge_count * p.right.edge_count - dims.k * dims.h
        assert gf2.rank(p.product.incidence) == \
            p.left.vertex_count * p.right.vertex_count - dims.r * dims.s

def test_weight_law_regular():
    h = hypergraph.from_incidence(build_classical(RandomRegular(12, 3, 4, 7)))
    assert h.is_uniform() == 3
    assert h.is_regular() == 4
    p = hypergraph.product(h, hypergraph.transpose_hg(h))
    law = hypergraph.expected_weight_law(p)
    assert law == hypergraph.WeightLaw(7, {3, 4}, 7, {3, 4})
    x = hypergraph.weight_profile(p.product.incidence)
    z = hypergraph.weight_profile(p.chamber_matrix)
    assert dict(x.rows) == {7: 9 * 12}
    assert dict(x.cols) == {4: 9 * 9, 3: 12 * 12}
    assert dict(z.rows) == {7: 12 * 9}
    assert dict(z.cols) == {4: 9 * 9, 3: 12 * 12}

def test_weight_law_irregular(repetition):
    h = hypergraph.from_incidence(repetition)
    p = hypergraph.product(h, h)
    assert hypergraph.expected_weight_law(p) is None

def test_validate_reports_isolated_vertices(caplog):
    h = hypergraph.from_incidence(BinaryMatrix.from_rows(['10', '00']))
    warnings = h.validate()
    assert warnings == ['isolated vertices: [1]', 'empty edges: [1]']
    assert 'isolated vertices' in caplog.text
