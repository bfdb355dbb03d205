# hypergraph.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""Hypergraphs, their transposes and products.

A hypergraph is identified with its vertex-edge incidence matrix: rows are
vertices, columns are edges.  The product of two hypergraphs has vertex
set V1 x V2 and edge set E_L + E_R, indexed as follows:

  vertex (x, y)           ->  x * |V2| + y
  E_L edge (a, beta)      ->  a * |E2| + beta
  E_R edge (b, alpha)     ->  |V1| * |E2| + b * |E1| + alpha
  chamber (alpha, beta)   ->  alpha * |E2| + beta

Every serialized matrix depends on these conventions.
"""
from collections import Counter, namedtuple
from functools import cached_property
import logging

import numpy as np
from scipy import sparse

from hgpcodes import gf2
from hgpcodes.gf2 import BinaryMatrix, BinaryVector

log = logging.getLogger(__name__)

INDEX_CONVENTIONS = {
    'vertex': 'x * |V2| + y',
    'edge_left': 'a * |E2| + beta',
    'edge_right': '|V1| * |E2| + b * |E1| + alpha',
    'chamber': 'alpha * |E2| + beta',
}

EdgeLabel = namedtuple('EdgeLabel', 'side vertex edge')
Chamber = namedtuple('Chamber', 'alpha beta support')
WeightProfile = namedtuple('WeightProfile', 'rows cols')
WeightLaw = namedtuple('WeightLaw', 'x_row x_cols z_row z_cols')

class Hypergraph(object):
    def __init__(self, incidence):
        self.incidence = incidence

    @property
    def vertex_count(self):
        return self.incidence.rows

    @property
    def edge_count(self):
        return self.incidence.cols

    @cached_property
    def _edges(self):
        return self.incidence.col_supports()

    def edge(self, j):
        return self._edges[j]

    def degree(self, i):
        return int(self.incidence.row_weights()[i])

    def is_uniform(self):
        """The common edge size, or None when edges differ in size."""
        sizes = self.incidence.col_weights()
        if sizes.size and (sizes == sizes[0]).all():
            return int(sizes[0])
        return None

    def is_regular(self):
        """The common vertex degree, or None when degrees differ."""
        degrees = self.incidence.row_weights()
        if degrees.size and (degrees == degrees[0]).all():
            return int(degrees[0])
        return None

    def validate(self):
        """Report isolated vertices and empty edges.

        Both are legal but put zero rows and columns into H_X, which
        silently lowers the distance.
        """
        warnings = []
        isolated = np.flatnonzero(self.incidence.row_weights() == 0)
        empty = np.flatnonzero(self.incidence.col_weights() == 0)
        if isolated.size:
            warnings.append('isolated vertices: %s' % isolated.tolist())
        if empty.size:
            warnings.append('empty edges: %s' % empty.tolist())
        for w in warnings:
            log.warning('hypergraph %dx%d has %s', self.vertex_count,
                        self.edge_count, w)
        return warnings

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.incidence == other.incidence

    __hash__ = None

    def __repr__(self):
        return 'Hypergraph(%d vertices, %d edges)' % (self.vertex_count,
                                                     self.edge_count)

def from_incidence(m):
    return Hypergraph(m)

def transpose_hg(h):
    return Hypergraph(gf2.transpose(h.incidence))

def cycle_code_dim(h):
    """Dimension of the cycle code Z(H), the kernel of the incidence."""
    return h.edge_count - gf2.rank(h.incidence)

def cocycle_code_dim(h):
    return gf2.rank(h.incidence)

CycleDims = namedtuple('CycleDims', 'k h r s')

def cycle_dims(p):
    """Cycle code dimensions of both factors of ``p`` and their transposes."""
    return CycleDims(cycle_code_dim(p.left), cycle_code_dim(p.right),
                     cycle_code_dim(transpose_hg(p.left)),
                     cycle_code_dim(transpose_hg(p.right)))

class ProductHypergraph(object):
    """The product H1.H2 together with its edge labelling.

    ``identification`` is set on Poincare duals only: entry ``e`` is the
    index, in this hypergraph, of edge ``e`` of the product it is dual to.
    """

    def __init__(self, left, right, product, identification=None):
        self.left = left
        self.right = right
        self.product = product
        self.identification = identification

    @property
    def edge_count(self):
        return self.product.edge_count

    @property
    def left_edge_count(self):
        return self.left.vertex_count * self.right.edge_count

    def vertex_id(self, x, y):
        return x * self.right.vertex_count + y

    def left_edge_id(self, a, beta):
        return a * self.right.edge_count + beta

    def right_edge_id(self, b, alpha):
        return self.left_edge_count + b * self.left.edge_count + alpha

    @property
    def edge_index(self):
        v1, e1 = self.left.vertex_count, self.left.edge_count
        v2, e2 = self.right.vertex_count, self.right.edge_count
        labels = [EdgeLabel('L', a, beta)
                  for a in range(v1) for beta in range(e2)]
        labels += [EdgeLabel('R', b, alpha)
                   for b in range(v2) for alpha in range(e1)]
        return labels

    @cached_property
    def chamber_matrix(self):
        return chamber_incidence(self)

    def __repr__(self):
        return 'ProductHypergraph(%r . %r)' % (self.left, self.right)

def _coords(h):
    coo = h.incidence.to_sparse().tocoo()
    return coo.row.astype(np.intp), coo.col.astype(np.intp)

def _assemble(rows, cols, row_parts, col_parts):
    r = np.concatenate(row_parts) if row_parts else np.zeros(0, np.intp)
    c = np.concatenate(col_parts) if col_parts else np.zeros(0, np.intp)
    data = np.ones(r.shape[0], dtype=np.uint8)
    return BinaryMatrix.from_sparse(
        sparse.coo_matrix((data, (r, c)), shape=(rows, cols)))

def product(h1, h2):
    v1, e1 = h1.vertex_count, h1.edge_count
    v2, e2 = h2.vertex_count, h2.edge_count
    n = v1 * e2 + v2 * e1
    # E_L edge (a, beta) holds the vertices (a, y) for y in beta.
    y, beta = _coords(h2)
    a = np.arange(v1, dtype=np.intp)[:, np.newaxis]
    left_rows = (a * v2 + y).ravel()
    left_cols = (a * e2 + beta).ravel()
    # E_R edge (b, alpha) holds the vertices (x, b) for x in alpha.
    x, alpha = _coords(h1)
    b = np.arange(v2, dtype=np.intp)[:, np.newaxis]
    right_rows = (x * v2 + b).ravel()
    right_cols = (v1 * e2 + b * e1 + alpha).ravel()
    incidence = _assemble(v1 * v2, n, [left_rows, right_rows],
                          [left_cols, right_cols])
    log.debug('product of %r and %r: %d vertices, %d edges', h1, h2,
              v1 * v2, n)
    return ProductHypergraph(h1, h2, Hypergraph(incidence))

def chambers(p):
    """Yield the chambers of ``p`` in row-major (alpha, beta) order."""
    h1, h2 = p.left, p.right
    v1, e1 = h1.vertex_count, h1.edge_count
    e2 = h2.edge_count
    n = p.edge_count
    for alpha in range(e1):
        xs = h1.edge(alpha)
        for beta in range(e2):
            ys = h2.edge(beta)
            support = [a * e2 + beta for a in xs]
            support += [v1 * e2 + b * e1 + alpha for b in ys]
            yield Chamber(alpha, beta, BinaryVector.from_support(n, support))

def chamber_incidence(p):
    """The chamber-edge incidence matrix, one row per (alpha, beta)."""
    h1, h2 = p.left, p.right
    v1, e1 = h1.vertex_count, h1.edge_count
    e2 = h2.edge_count
    a, alpha = _coords(h1)
    beta = np.arange(e2, dtype=np.intp)[:, np.newaxis]
    left_rows = (alpha * e2 + beta).ravel()
    left_cols = (a * e2 + beta).ravel()
    b, beta2 = _coords(h2)
    alpha2 = np.arange(e1, dtype=np.intp)[:, np.newaxis]
    right_rows = (alpha2 * e2 + beta2).ravel()
    right_cols = (v1 * e2 + b * e1 + alpha2).ravel()
    return _assemble(e1 * e2, p.edge_count, [left_rows, right_rows],
                     [left_cols, right_cols])

def dual_identification(p):
    """Map each edge of ``p`` to its edge in the Poincare dual."""
    v1, e1 = p.left.vertex_count, p.left.edge_count
    v2, e2 = p.right.vertex_count, p.right.edge_count
    perm = np.empty(p.edge_count, dtype=np.intp)
    # E_L edge (a, beta) is the dual's E_R edge (beta, a).
    left = np.arange(v1 * e2, dtype=np.intp)
    a, beta = left // max(e2, 1), left % max(e2, 1)
    perm[:v1 * e2] = e1 * v2 + beta * v1 + a
    # E_R edge (b, alpha) is the dual's E_L edge (alpha, b).
    right = np.arange(v2 * e1, dtype=np.intp)
    b, alpha = right // max(e1, 1), right % max(e1, 1)
    perm[v1 * e2:] = alpha * v2 + b
    return perm

def poincare_dual(p):
    """The product H1^T . H2^T, with edges identified with those of ``p``."""
    g = product(transpose_hg(p.left), transpose_hg(p.right))
    g.identification = dual_identification(p)
    return g

def transport(item, dual):
    """Re-index a matrix or vector over the edges of ``dual`` into the edge
    order of the product it is dual to."""
    perm = dual.identification
    if perm is None:
        raise ValueError('%r carries no edge identification' % (dual,))
    if isinstance(item, BinaryVector):
        return BinaryVector(item.bits[perm])
    return BinaryMatrix.from_dense(item.to_dense()[:, perm])

def weight_profile(m):
    return WeightProfile(Counter(int(w) for w in m.row_weights()),
                         Counter(int(w) for w in m.col_weights()))

def expected_weight_law(p):
    """Weights H_X and H_Z must have when both factors are uniform and
    regular, or None when they are not."""
    t1, d1 = p.left.is_uniform(), p.left.is_regular()
    t2, d2 = p.right.is_uniform(), p.right.is_regular()
    if None in (t1, d1, t2, d2):
        return None
    return WeightLaw(d1 + d2, {t1, t2}, t1 + t2, {d1, d2})
