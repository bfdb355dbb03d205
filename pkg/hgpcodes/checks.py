# checks.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""Structural checks on a product code, as run by ``hgp verify``.

Each check returns a CheckResult whose ``passed`` is True, False, or None
when the check does not apply to the code at hand.
"""
from dataclasses import dataclass
import logging

import numpy as np

from hgpcodes import css, gf2, hypergraph
from hgpcodes.gf2 import BinaryMatrix
from hgpcodes.report import witness

log = logging.getLogger(__name__)

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool | None
    detail: str = ''

    @property
    def status(self):
        return {True: 'pass', False: 'FAIL', None: 'skip'}[self.passed]

def _result(name, ok, detail):
    return CheckResult(name, bool(ok), detail)

def check_orthogonality(h_x, h_z):
    try:
        css.new_css(h_x, h_z)
    except (css.ShapeError, css.OrthogonalityError) as e:
        return CheckResult('orthogonality', False, e.args[0])
    return CheckResult('orthogonality', True, 'H_X H_Z^T = 0')

def check_ranks(code):
    rank_x, rank_z = gf2.rank(code.h_x), gf2.rank(code.h_z)
    k = code.n - rank_x - rank_z
    return _result('rank', k >= 0,
                   'rank H_X = %d, rank H_Z = %d, K = %d' %
                   (rank_x, rank_z, k))

def check_transpose(p):
    ok = all(hypergraph.transpose_hg(hypergraph.transpose_hg(h)) == h
             for h in (p.left, p.right))
    return _result('transpose identity', ok, 'H^T^T = H for both factors')

def check_edge_count(p):
    v1, e1 = p.left.vertex_count, p.left.edge_count
    v2, e2 = p.right.vertex_count, p.right.edge_count
    expected = v1 * e2 + v2 * e1
    return _result('edge count', p.edge_count == expected,
                   '|E| = %d, |V1||E2| + |V2||E1| = %d' %
                   (p.edge_count, expected))

def check_duality(p, code):
    """Chambers of the dual are the vertices of ``p`` and vice versa."""
    dual = hypergraph.poincare_dual(p)
    chambers_ok = hypergraph.transport(dual.chamber_matrix, dual) == code.h_x
    vertices_ok = hypergraph.transport(dual.product.incidence,
                                       dual) == code.h_z
    back = hypergraph.poincare_dual(dual)
    involution_ok = back.product.incidence == p.product.incidence
    failed = [name for name, ok in (('dual chambers vs H_X', chambers_ok),
                                    ('dual vertices vs H_Z', vertices_ok),
                                    ('dual of dual', involution_ok))
              if not ok]
    return _result('Poincare duality', not failed,
                   'mismatch: %s' % ', '.join(failed) if failed else
                   'dual chambers = H_X, dual vertices = H_Z')

def check_chamber_redundancy(p):
    """Chambers over a pair of cycles sum to zero."""
    z1 = gf2.kernel_matrix(p.left.incidence).to_dense()
    z2 = gf2.kernel_matrix(p.right.incidence).to_dense()
    if z1.shape[0] == 0 or z2.shape[0] == 0:
        return CheckResult('chamber redundancy', None,
                           'a factor has a trivial cycle code')
    pairs = BinaryMatrix.from_dense(np.kron(z1, z2))
    sums = gf2.mat_mul(pairs, p.chamber_matrix)
    return _result('chamber redundancy', sums.nnz == 0,
                   '%d cycle pairs, %d nonzero sums' %
                   (pairs.rows, int(np.count_nonzero(
                       sums.row_weights()))))

def check_chamber_code_dim(p, code):
    dims = hypergraph.cycle_dims(p)
    expected = p.left.edge_count * p.right.edge_count - dims.k * dims.h
    found = gf2.rank(code.h_z)
    return _result('chamber code dimension', found == expected,
                   'rank H_Z = %d, |E1||E2| - kh = %d' % (found, expected))

def check_cocycle_code_dim(p, code):
    dims = hypergraph.cycle_dims(p)
    expected = (p.left.vertex_count * p.right.vertex_count -
                dims.r * dims.s)
    found = gf2.rank(code.h_x)
    return _result('cocycle code dimension', found == expected,
                   'rank H_X = %d, |V1||V2| - rs = %d' % (found, expected))

def check_dimension_formula(p, code):
    k = css.quantum_dimension(code)
    try:
        formula = css.dimension_by_formula(p)
    except css.TheoremViolation as e:
        return CheckResult('dimension formula', False, str(e))
    return _result('dimension formula', k == formula,
                   'K = %d by rank, %d by formula' % (k, formula))

def check_zero_dimension(p, code):
    dims = hypergraph.cycle_dims(p)
    if not (dims.r == dims.s == 0 or dims.k == dims.h == 0):
        return CheckResult('zero dimension', None,
                           'factors have nontrivial cycle codes')
    rank_x, rank_z = gf2.rank(code.h_x), gf2.rank(code.h_z)
    ok = code.n - rank_x - rank_z == 0
    return _result('zero dimension', ok,
                   'rank H_X + rank H_Z = %d, N = %d' %
                   (rank_x + rank_z, code.n))

def check_weight_law(p, code):
    law = hypergraph.expected_weight_law(p)
    if law is None:
        return CheckResult('weight law', None,
                           'factors are not uniform and regular')
    x = hypergraph.weight_profile(code.h_x)
    z = hypergraph.weight_profile(code.h_z)
    ok = (set(x.rows) <= {law.x_row} and set(x.cols) <= law.x_cols and
          set(z.rows) <= {law.z_row} and set(z.cols) <= law.z_cols)
    return _result('weight law', ok,
                   'H_X rows %s cols %s, H_Z rows %s cols %s' %
                   (sorted(x.rows), sorted(x.cols), sorted(z.rows),
                    sorted(z.cols)))

def check_witnesses(code, params):
    results = []
    for side, result, checks, excluded in (
            ('X', params.d_x, code.h_x, code.h_z),
            ('Z', params.d_z, code.h_z, code.h_x)):
        name = 'witness D_%s' % side
        if not result.is_exact:
            results.append(CheckResult(name, None, 'D_%s = %s' %
                                       (side, result)))
            continue
        results.append(_result(
            name, css.verify_witness(checks, excluded, result),
            'weight %d' % result.weight))
    return results

def check_distance_bounds(p, params, budget=None):
    bounds = css.check_distance_bounds(p, params, budget)
    return [CheckResult(c.name, c.holds, c.statement + (
        ' (%s)' % bounds.note if bounds.note else ''))
            for c in bounds.checks]

def _is_single(p):
    return p.right.incidence == gf2.transpose(p.left.incidence)

def check_single_matrix(p, params, budget=None):
    """A product of H with H^T has [[n^2 + (n-k)^2, k^2, d]]."""
    if not _is_single(p) or gf2.rank(p.left.incidence) != p.left.vertex_count:
        return CheckResult('single-matrix parameters', None,
                           'not a product of a full-rank H with H^T')
    n = p.left.edge_count
    k = n - p.left.vertex_count
    ok = params.n == n * n + (n - k) ** 2 and params.k == k * k
    detail = 'n = %d, k = %d' % (n, k)
    d = css.classical_min_distance(p.left.incidence, budget)
    if ok and d.is_exact and params.d.is_exact:
        ok = params.d.weight == d.weight
        detail += ', D = %d, d = %d' % (params.d.weight, d.weight)
    return _result('single-matrix parameters', ok, detail)

def check_report(report, code, params):
    """Claims stored in a report against a fresh computation."""
    if report is None:
        return CheckResult('report', None, 'no report.json')
    claims = [report.params['n'] == params.n,
              report.params['k']['value'] == params.k]
    d = report.params['d']
    if d['kind'] == 'exact' and params.d.is_exact:
        claims.append(d['weight'] == params.d.weight)
    for side, checks, excluded, claimed in (
            ('x', code.h_x, code.h_z, report.params['d_x']),
            ('z', code.h_z, code.h_x, report.params['d_z'])):
        try:
            v = witness(report, side, code.n)
        except gf2.DimensionError:
            claims.append(False)
            continue
        if v is None:
            continue
        # A bounded search stores its best vector, of weight upper_bound.
        expected = (claimed['upper_bound']
                    if claimed['kind'] == css.LOWER_BOUND
                    else claimed['weight'])
        claims.append(v.weight == expected and
                      gf2.mat_vec(checks, v).weight == 0 and
                      not gf2.in_row_space(excluded, v))
    return _result('report', all(claims), 'report %s' % report.summary)

def run_checks(h_x, h_z, product=None, budget=None, report=None):
    """Every check that applies to the stored matrices."""
    results = [check_orthogonality(h_x, h_z)]
    if not results[0].passed:
        return results
    code = css.CssCode(h_x, h_z)
    results.append(check_ranks(code))
    params = css.full_params(code, budget)
    results += check_witnesses(code, params)
    results.append(check_report(report, code, params))
    if product is None:
        log.warning('no product factors: only orthogonality, rank and '
                    'witness checks ran')
        return results
    if product.product.incidence != h_x or product.chamber_matrix != h_z:
        results.append(CheckResult('product matches', False,
                                   'H_X and H_Z differ from h1 . h2'))
        return results
    results += [
        check_transpose(product),
        check_edge_count(product),
        check_duality(product, code),
        check_chamber_redundancy(product),
        check_chamber_code_dim(product, code),
        check_cocycle_code_dim(product, code),
        check_dimension_formula(product, code),
        check_zero_dimension(product, code),
        check_weight_law(product, code),
        check_single_matrix(product, params, budget),
    ]
    results += check_distance_bounds(product, params, budget)
    return results
