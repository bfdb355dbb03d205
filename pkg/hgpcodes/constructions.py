# constructions.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""Named codes: toric codes, hypergraph products and classical inputs."""
from __future__ import annotations

from dataclasses import dataclass
import logging

import numpy as np
from scipy import sparse

from hgpcodes import css, gf2, hypergraph
from hgpcodes.gf2 import BinaryMatrix

log = logging.getLogger(__name__)

MAX_RETRIES = 1000

class InvalidParameter(ValueError):
    pass

class RankDeficientError(ValueError):
    pass

class GenerationFailure(RuntimeError):
    pass

@dataclass(frozen=True)
class Repetition:
    n: int

@dataclass(frozen=True)
class Hamming:
    r: int

@dataclass(frozen=True)
class CycleGraph:
    m: int

@dataclass(frozen=True)
class RandomRegular:
    n: int
    col_weight: int
    row_weight: int
    seed: int = 0

@dataclass(frozen=True)
class Explicit:
    matrix: BinaryMatrix

@dataclass(frozen=True)
class ClassicalCodeSpec:
    kind: object
    expected: tuple | None = None

def cycle_graph(m):
    """Incidence of the cycle C_m: edge j joins vertices j and j + 1 mod m.

    For m = 2 both edges join the same two vertices and are kept apart.
    """
    if m < 2:
        raise InvalidParameter('a cycle needs at least 2 vertices, got %d'
                               % m)
    j = np.arange(m, dtype=np.intp)
    rows = np.concatenate([j, (j + 1) % m])
    cols = np.concatenate([j, j])
    data = np.ones(2 * m, dtype=np.uint8)
    return BinaryMatrix.from_sparse(
        sparse.coo_matrix((data, (rows, cols)), shape=(m, m)))

def _hypergraph(h):
    if isinstance(h, hypergraph.Hypergraph):
        return h
    return hypergraph.from_incidence(h)

def hgp(h1, h2):
    """The hypergraph product code of two check matrices.

    H_X is the vertex-edge incidence of the product and H_Z its
    chamber-edge incidence.
    """
    p = hypergraph.product(_hypergraph(h1), _hypergraph(h2))
    return p, css.new_css(p.product.incidence, p.chamber_matrix)

def toric(m):
    if m < 2:
        raise InvalidParameter('the toric code needs m >= 2, got %d' % m)
    c = cycle_graph(m)
    _, code = hgp(c, c)
    return code

def hgp_from_single(h):
    """Product of a full-rank check matrix with its transpose.

    The result has length n^2 + (n - k)^2 and dimension k^2.
    """
    r = gf2.rank(h)
    if r != h.rows:
        raise RankDeficientError(
            'check matrix has %d rows but rank %d; row-reduce it to full '
            'rank first' % (h.rows, r))
    n, k = h.cols, h.cols - h.rows
    p, code = hgp(h, gf2.transpose(h))
    if code.n != n * n + (n - k) ** 2:
        raise css.TheoremViolation('length %d, expected %d' %
                                   (code.n, n * n + (n - k) ** 2))
    big_k = css.quantum_dimension(code)
    if big_k != k * k:
        raise css.TheoremViolation('dimension %d, expected %d' %
                                   (big_k, k * k))
    return p, code

# Classical codes

def _repetition(n):
    if n < 2:
        raise InvalidParameter('repetition length must be >= 2, got %d' % n)
    return BinaryMatrix.from_supports(n - 1, n,
                                      [(i, i + 1) for i in range(n - 1)])

def _hamming(r):
    if r < 2:
        raise InvalidParameter('Hamming redundancy must be >= 2, got %d' % r)
    # Column j is j + 1 in binary, least significant bit in row 0.
    j = np.arange(1, 2 ** r, dtype=np.int64)
    bits = (j[np.newaxis, :] >> np.arange(r)[:, np.newaxis]) & 1
    return BinaryMatrix.from_dense(bits)

def _random_regular(spec):
    n, t, delta = spec.n, spec.col_weight, spec.row_weight
    if n < 1 or t < 1 or delta < 1:
        raise InvalidParameter('degrees and length must be positive: %r'
                               % (spec,))
    if (n * t) % delta:
        raise InvalidParameter('n * col_weight = %d is not divisible by '
                               'row_weight %d' % (n * t, delta))
    rows = n * t // delta
    if delta > n:
        raise InvalidParameter('row weight %d exceeds length %d' % (delta, n))
    if t > rows:
        raise InvalidParameter('column weight %d exceeds the %d rows' %
                               (t, rows))
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    col_sockets = np.repeat(np.arange(n, dtype=np.intp), t)
    row_sockets = np.repeat(np.arange(rows, dtype=np.intp), delta)
    for attempt in range(1, MAX_RETRIES + 1):
        paired = rng.permutation(row_sockets)
        # Simple when no (row, col) pair repeats.
        if np.unique(paired * n + col_sockets).size == paired.size:
            log.debug('configuration model paired after %d attempts',
                      attempt)
            data = np.ones(paired.size, dtype=np.uint8)
            return BinaryMatrix.from_sparse(sparse.coo_matrix(
                (data, (paired, col_sockets)), shape=(rows, n)))
    raise GenerationFailure('no simple pairing for %d x %d, column weight '
                            '%d, row weight %d after %d attempts (seed %d)'
                            % (rows, n, t, delta, MAX_RETRIES, spec.seed))

def build_classical(spec):
    if not isinstance(spec, ClassicalCodeSpec):
        spec = ClassicalCodeSpec(spec)
    kind = spec.kind
    if isinstance(kind, Repetition):
        h = _repetition(kind.n)
    elif isinstance(kind, Hamming):
        h = _hamming(kind.r)
    elif isinstance(kind, CycleGraph):
        h = cycle_graph(kind.m)
    elif isinstance(kind, RandomRegular):
        h = _random_regular(kind)
    elif isinstance(kind, Explicit):
        h = kind.matrix
    else:
        raise InvalidParameter('unknown code kind %r' % (kind,))
    if spec.expected is not None:
        n, k, d = classical_params(h)
        if (n, k, d.value) != tuple(spec.expected):
            raise InvalidParameter('%r has parameters [%d, %d, %s], expected '
                                   '%r' % (kind, n, k, d.short(),
                                           spec.expected))
    return h

def classical_params(h, budget=None):
    """Return (n, k, d) of the code with checks ``h``; d is a DistanceResult."""
    return h.cols, h.cols - gf2.rank(h), css.classical_min_distance(h, budget)
