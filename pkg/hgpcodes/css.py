# css.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""CSS codes, their parameters [[N, K, D]] and a certified distance search.

A CSS code is a pair (H_X, H_Z) of parity-check matrices whose row spaces
are orthogonal.  C_X = ker H_X, C_Z = ker H_Z, and the distance is the
least weight of a vector of C_X outside the row space of H_Z, or of C_Z
outside the row space of H_X.

The distance search never guesses.  It either enumerates the whole kernel
or searches by increasing information-set weight; in both cases an exact
answer comes with a witness, and a search cut short by its budget is
reported as a lower bound.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
import logging
import math

import numpy as np

from hgpcodes import gf2, hypergraph
from hgpcodes.gf2 import BinaryMatrix, BinaryVector, popcount

log = logging.getLogger(__name__)

EXACT = 'exact'
LOWER_BOUND = 'lower-bound'
INFINITE = 'infinite'

ENUMERATION = 'enumeration'
WEIGHT_SEARCH = 'weight-search'
BOUND_ONLY = 'bound-only'

# Kernel vectors are produced in blocks of 2**SPAN_BITS.
SPAN_BITS = 16
BATCH = 1 << 16

NO_LOGICALS = 'no logical qubits; D = ∞ by convention'

class ShapeError(ValueError):
    pass

class OrthogonalityError(ValueError):
    pass

class TheoremViolation(AssertionError):
    pass

@dataclass(frozen=True)
class SearchBudget:
    full_enum_dim: int = 28
    max_weight: int = 10
    max_candidates: int = 10000000
    threads: int = 1

@dataclass(frozen=True)
class DistanceResult:
    kind: str
    weight: int | None = None
    witness: BinaryVector | None = None
    search_budget_used: int = 0
    method: str = ENUMERATION
    upper_bound: int | None = None

    @classmethod
    def exact(cls, weight, witness, used, method=ENUMERATION):
        return cls(EXACT, weight, witness, used, method, weight)

    @classmethod
    def lower_bound(cls, weight, used, upper_bound=None, witness=None):
        return cls(LOWER_BOUND, weight, witness, used, BOUND_ONLY,
                   upper_bound)

    @classmethod
    def infinite(cls, used=0, method=ENUMERATION):
        return cls(INFINITE, None, None, used, method)

    @property
    def is_exact(self):
        return self.kind == EXACT

    @property
    def is_infinite(self):
        return self.kind == INFINITE

    @property
    def is_lower_bound(self):
        return self.kind == LOWER_BOUND

    @property
    def value(self):
        """The distance, or its lower bound; ``math.inf`` when infinite."""
        if self.is_infinite:
            return math.inf
        return self.weight

    def short(self):
        if self.is_infinite:
            return '∞'
        if self.is_lower_bound:
            return '≥%d' % self.weight
        return str(self.weight)

    def __str__(self):
        if self.is_infinite:
            return '∞'
        if self.is_lower_bound:
            return '≥ %d (budget exhausted)' % self.weight
        return 'Exact(%d)' % self.weight

class CssCode(object):
    def __init__(self, h_x, h_z):
        self.h_x = h_x
        self.h_z = h_z

    @property
    def n(self):
        return self.h_x.cols

    def __repr__(self):
        return 'CssCode(n=%d, %d X checks, %d Z checks)' % (
            self.n, self.h_x.rows, self.h_z.rows)

@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: DistanceResult
    d_x: DistanceResult
    d_z: DistanceResult
    rank_x: int
    rank_z: int
    row_weights_x: dict
    col_weights_x: dict
    row_weights_z: dict
    col_weights_z: dict
    k_formula: int | None = None
    notes: tuple = ()

    def summary(self):
        return '[[%d,%d,%s]]' % (self.n, self.k, self.d.short())

@dataclass(frozen=True)
class BoundCheck:
    name: str
    statement: str
    holds: bool | None

@dataclass(frozen=True)
class BoundReport:
    d1: DistanceResult
    d2: DistanceResult
    d1_t: DistanceResult
    d2_t: DistanceResult
    distance: DistanceResult
    lower_bound: float
    checks: tuple = field(default=())
    conclusive: bool = True
    note: str = ''

    @property
    def violations(self):
        return [c for c in self.checks if c.holds is False]

    @property
    def ok(self):
        return not self.violations

def new_css(h_x, h_z):
    if h_x.cols != h_z.cols:
        raise ShapeError('H_X has %d columns but H_Z has %d' %
                         (h_x.cols, h_z.cols))
    overlap = gf2.mat_mul(h_x, gf2.transpose(h_z))
    if overlap.nnz:
        row_x, row_z = (int(i) for i in np.argwhere(overlap.to_dense())[0])
        raise OrthogonalityError(
            'row %d of H_X is not orthogonal to row %d of H_Z' %
            (row_x, row_z), (row_x, row_z))
    return CssCode(h_x, h_z)

def quantum_dimension(c):
    k = c.n - gf2.rank(c.h_x) - gf2.rank(c.h_z)
    assert k >= 0, 'negative dimension %d: H_X and H_Z are not orthogonal' % k
    return k

def dimension_by_formula(p):
    """Dimension of the product code from the factors alone.

    Both closed forms are evaluated; they must agree.
    """
    v1, e1 = p.left.vertex_count, p.left.edge_count
    v2, e2 = p.right.vertex_count, p.right.edge_count
    k, h, r, s = hypergraph.cycle_dims(p)
    first = 2 * r * s + r * (e2 - v2) + s * (e1 - v1)
    second = 2 * k * h + k * (v2 - e2) + h * (v1 - e1)
    if first != second:
        raise TheoremViolation(
            'dimension forms disagree: %d (from r=%d, s=%d) vs %d '
            '(from k=%d, h=%d)' % (first, r, s, second, k, h))
    return first

# Distance search

class _Echelon(object):
    """Rows in echelon form over packed words, grown one vector at a time."""

    def __init__(self):
        self.rows = []

    @staticmethod
    def _leading(v):
        nonzero = np.flatnonzero(v)
        if nonzero.size == 0:
            return None
        w = int(nonzero[0])
        word = int(v[w])
        return w * gf2.WORD_BITS + (word & -word).bit_length() - 1

    def reduce(self, v):
        v = v.copy()
        for col, row in self.rows:
            w, b = divmod(col, gf2.WORD_BITS)
            if (int(v[w]) >> b) & 1:
                v ^= row
        return v

    def add(self, v):
        """Add ``v`` unless it is in the span; return whether it was."""
        v = self.reduce(v)
        col = self._leading(v)
        if col is None:
            return False
        self.rows.append((col, v))
        self.rows.sort(key=lambda item: item[0])
        return True

def _logical_tests(code_checks, excluded):
    """Vectors of ker(excluded) that lie outside rowspace(code_checks).

    A kernel vector of ``code_checks`` belongs to the row space of
    ``excluded`` exactly when it is orthogonal to every returned vector.
    """
    span = _Echelon()
    reduced, _ = gf2.row_reduce(code_checks)
    for row in reduced.words:
        span.add(row)
    tests = [v for v in gf2.kernel_matrix(excluded).words if span.add(v)]
    width = gf2.word_count(code_checks.cols)
    if not tests:
        return np.zeros((0, width), dtype=np.uint64)
    return np.array(tests, dtype=np.uint64)

def _nontrivial(vectors, tests):
    hits = np.zeros(vectors.shape[0], dtype=bool)
    for t in tests:
        hits |= (popcount(vectors & t) & 1).astype(bool)
    return hits

def _block_best(vectors, tests):
    """Position and weight of the first lightest nontrivial vector."""
    ok = _nontrivial(vectors, tests)
    if not ok.any():
        return None
    weights = np.where(ok, popcount(vectors), np.iinfo(np.int64).max)
    i = int(np.argmin(weights))
    return int(weights[i]), i

def _fan_out(run, items, threads):
    """Run ``run`` over contiguous slices of ``items``; results in order."""
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [run(items)]
    size = -(-len(items) // threads)
    slices = [items[i:i + size] for i in range(0, len(items), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(run, slices))

def _merge(results):
    found = [r for r in results if r is not None]
    if not found:
        return None
    return min(found, key=lambda r: r[0])

def _gray_span(rows, width):
    """Every combination of ``rows`` in reflected Gray-code order."""
    span = np.zeros((1, width), dtype=np.uint64)
    for row in rows:
        span = np.concatenate([span, span[::-1] ^ row])
    return span

def _enumerate_kernel(kernel, tests, threads):
    k0, width = kernel.shape
    low = min(k0, SPAN_BITS)
    table = _gray_span(kernel[:low], width)
    high = kernel[low:]

    def run(blocks):
        best = None
        for g in blocks:
            code = g ^ (g >> 1)
            prefix = np.zeros(width, dtype=np.uint64)
            for j in range(high.shape[0]):
                if (code >> j) & 1:
                    prefix ^= high[j]
            vectors = table ^ prefix
            found = _block_best(vectors, tests)
            if found is None:
                continue
            key = (found[0], g * table.shape[0] + found[1])
            if best is None or key < best[0]:
                best = (key, vectors[found[1]].copy())
        return best

    return _merge(_fan_out(run, range(1 << high.shape[0]), threads))

def _search_level(kernel, tests, t, threads):
    k0 = kernel.shape[0]

    def run(firsts):
        best = None
        for i in firsts:
            rest = combinations(range(i + 1, k0), t - 1)
            while True:
                chunk = list(islice(rest, BATCH))
                if not chunk:
                    break
                idx = np.array(chunk, dtype=np.intp).reshape(len(chunk),
                                                             t - 1)
                vectors = np.bitwise_xor.reduce(kernel[idx], axis=1)
                vectors ^= kernel[i]
                found = _block_best(vectors, tests)
                if found is None:
                    continue
                key = (found[0], t, (i,) + chunk[found[1]])
                if best is None or key < best[0]:
                    best = (key, vectors[found[1]].copy())
        return best

    return _merge(_fan_out(run, range(k0 - t + 1), threads))

def _vector(words, cols):
    return BinaryVector(gf2.unpack_rows(words[np.newaxis, :], cols)[0])

def min_weight_coset(code_checks, excluded_rowspace, budget=None):
    """Least weight of a nonzero v with ``code_checks . v = 0`` outside the
    row space of ``excluded_rowspace``."""
    budget = budget or SearchBudget()
    if code_checks.cols != excluded_rowspace.cols:
        raise ShapeError('checks have %d columns but the excluded space has '
                         '%d' % (code_checks.cols, excluded_rowspace.cols))
    cols = code_checks.cols
    tests = _logical_tests(code_checks, excluded_rowspace)
    if tests.shape[0] == 0:
        log.debug('kernel lies inside the excluded row space')
        return DistanceResult.infinite()
    kernel = np.array(gf2.kernel_matrix(code_checks).words)
    k0 = kernel.shape[0]
    if k0 <= budget.full_enum_dim:
        log.debug('enumerating all 2**%d kernel vectors', k0)
        (weight, _), words = _enumerate_kernel(kernel, tests, budget.threads)
        return DistanceResult.exact(weight, _vector(words, cols), 1 << k0,
                                    ENUMERATION)
    log.debug('kernel dimension %d exceeds %d, searching by weight', k0,
              budget.full_enum_dim)
    # The kernel basis is systematic, so a sum of t rows weighs at least t.
    # Once every sum of up to t rows is seen the rest weigh at least t + 1.
    best = None
    used = 0
    done = 0
    for t in range(1, k0 + 1):
        level = math.comb(k0, t)
        if t > budget.max_weight or used + level > budget.max_candidates:
            break
        found = _search_level(kernel, tests, t, budget.threads)
        used += level
        done = t
        if found is not None and (best is None or found[0] < best[0]):
            best = found
        log.debug('weight search level %d: %d combinations, best %s', t,
                  level, best[0][0] if best else None)
        if best is not None and best[0][0] <= t + 1:
            break
    if best is not None and (best[0][0] <= done + 1 or done == k0):
        return DistanceResult.exact(best[0][0], _vector(best[1], cols), used,
                                    WEIGHT_SEARCH)
    if best is None:
        log.warning('search budget exhausted after weight %d', done)
        return DistanceResult.lower_bound(done + 1, used)
    log.warning('search budget exhausted after weight %d; best seen %d',
                done, best[0][0])
    return DistanceResult.lower_bound(min(best[0][0], done + 1), used,
                                      best[0][0], _vector(best[1], cols))

def classical_min_distance(checks, budget=None):
    """Minimum distance of the code with parity checks ``checks``."""
    return min_weight_coset(checks, BinaryMatrix.zeros(0, checks.cols),
                            budget)

def verify_witness(code_checks, excluded_rowspace, result):
    """Re-check an exact distance claim without running the search."""
    if not result.is_exact or result.witness is None:
        return False
    v = result.witness
    return (v.weight == result.weight and
            gf2.mat_vec(code_checks, v).weight == 0 and
            not gf2.in_row_space(excluded_rowspace, v))

def _combine(d_x, d_z):
    used = d_x.search_budget_used + d_z.search_budget_used
    finite = [r for r in (d_x, d_z) if not r.is_infinite]
    if not finite:
        return DistanceResult.infinite(used)
    exact = [r for r in finite if r.is_exact]
    bounded = [r for r in finite if r.is_lower_bound]
    if exact:
        best = min(exact, key=lambda r: r.weight)
        if all(best.weight <= r.weight for r in bounded):
            return DistanceResult.exact(best.weight, best.witness, used,
                                        best.method)
    uppers = [r.upper_bound for r in finite if r.upper_bound is not None]
    return DistanceResult.lower_bound(min(r.weight for r in finite), used,
                                      min(uppers) if uppers else None)

def _histogram(weights):
    return dict(sorted(Counter(int(w) for w in weights).items()))

def full_params(c, budget=None, product=None):
    """Compute [[N, K, D]] of ``c``.

    With ``product`` given, the dimension formula is evaluated as well and
    must match the rank computation.
    """
    budget = budget or SearchBudget()
    rank_x = gf2.rank(c.h_x)
    rank_z = gf2.rank(c.h_z)
    k = c.n - rank_x - rank_z
    assert k >= 0, 'negative dimension %d' % k
    k_formula = None
    if product is not None:
        k_formula = dimension_by_formula(product)
        if k_formula != k:
            raise TheoremViolation('rank gives K=%d but the dimension '
                                   'formula gives %d' % (k, k_formula))
    d_x = min_weight_coset(c.h_x, c.h_z, budget)
    d_z = min_weight_coset(c.h_z, c.h_x, budget)
    d = _combine(d_x, d_z)
    notes = (NO_LOGICALS,) if k == 0 else ()
    params = CodeParams(
        n=c.n, k=k, d=d, d_x=d_x, d_z=d_z, rank_x=rank_x, rank_z=rank_z,
        row_weights_x=_histogram(c.h_x.row_weights()),
        col_weights_x=_histogram(c.h_x.col_weights()),
        row_weights_z=_histogram(c.h_z.row_weights()),
        col_weights_z=_histogram(c.h_z.col_weights()),
        k_formula=k_formula, notes=notes)
    log.info('%s: D_X=%s D_Z=%s', params.summary(), d_x, d_z)
    return params

def _fmt(value):
    return '∞' if value == math.inf else str(value)

def check_distance_bounds(p, params, budget=None):
    """Compare D with the distances of the four factor codes.

    D >= min(d1, d2, d1T, d2T) always; D <= d1 when d1 and d2T are finite;
    D <= d2 when d2 and d1T are finite.
    """
    budget = budget or SearchBudget()
    h1, h2 = p.left.incidence, p.right.incidence
    d1 = classical_min_distance(h1, budget)
    d2 = classical_min_distance(h2, budget)
    d1_t = classical_min_distance(gf2.transpose(h1), budget)
    d2_t = classical_min_distance(gf2.transpose(h2), budget)
    factors = (d1, d2, d1_t, d2_t)
    big_d = params.d
    lower = min(r.value for r in factors)
    conclusive = (not big_d.is_lower_bound and
                  not any(r.is_lower_bound for r in factors))
    notes = []
    if big_d.is_infinite:
        notes.append('no logical operators; D = ∞ by convention')
    if not conclusive:
        notes.append('inconclusive: not every distance is exact')
        log.warning('distance bounds are inconclusive for %r', p)

    def holds(ok):
        return bool(ok) if conclusive else None

    checks = [BoundCheck(
        'distance lower bound',
        'D = %s >= min(d1, d2, d1T, d2T) = %s' % (_fmt(big_d.value),
                                                  _fmt(lower)),
        holds(big_d.value >= lower))]
    if not d1.is_infinite and not d2_t.is_infinite:
        checks.append(BoundCheck(
            'distance upper bound (d1)',
            'D = %s <= d1 = %s' % (_fmt(big_d.value), _fmt(d1.value)),
            holds(big_d.value <= d1.value)))
    if not d2.is_infinite and not d1_t.is_infinite:
        checks.append(BoundCheck(
            'distance upper bound (d2)',
            'D = %s <= d2 = %s' % (_fmt(big_d.value), _fmt(d2.value)),
            holds(big_d.value <= d2.value)))
    report = BoundReport(d1, d2, d1_t, d2_t, big_d, lower, tuple(checks),
                         conclusive, '; '.join(notes))
    for c in report.violations:
        log.error('theorem violation: %s', c.statement)
    return report
