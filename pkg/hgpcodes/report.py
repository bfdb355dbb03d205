# report.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""The JSON report written next to every built code.

Every number in a report says how it was obtained: ``rank-formula`` for
ranks and dimensions, ``theorem-formula`` for the closed dimension
formula, and the distance search method for distances.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
import json
import math

from hgpcodes import get_version
from hgpcodes.css import EXACT, INFINITE, LOWER_BOUND, DistanceResult
from hgpcodes.gf2 import BinaryVector
from hgpcodes.hypergraph import INDEX_CONVENTIONS

SCHEMA = 'hgpcodes.report/1'

RANK_FORMULA = 'rank-formula'
THEOREM_FORMULA = 'theorem-formula'

class ReportFormatError(ValueError):
    pass

@dataclass
class Report:
    params: dict
    construction: dict
    bounds: dict | None = None
    witnesses: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)
    schema: str = SCHEMA

    @property
    def summary(self):
        return '[[%d,%d,%s]]' % (self.params['n'], self.params['k']['value'],
                                 _short(self.params['d']))

def _short(d):
    if d['kind'] == 'infinite':
        return '∞'
    if d['kind'] == 'lower-bound':
        return '≥%d' % d['weight']
    return str(d['weight'])

def _number(value):
    return 'inf' if value == math.inf else value

def distance_to_json(result):
    return {'kind': result.kind, 'weight': result.weight,
            'method': result.method,
            'search_budget_used': result.search_budget_used,
            'upper_bound': result.upper_bound}

def distance_from_json(obj, witness=None):
    try:
        return DistanceResult(obj['kind'], obj['weight'], witness,
                              obj['search_budget_used'], obj['method'],
                              obj.get('upper_bound'))
    except (KeyError, TypeError) as e:
        raise ReportFormatError('malformed distance entry: %s' % e)

def construction(kind, arguments, seed=None):
    return {'kind': kind, 'arguments': arguments, 'seed': seed,
            'index_conventions': dict(INDEX_CONVENTIONS),
            'version': get_version()}

def _keyed(histogram):
    # JSON object keys are strings.
    return {str(w): count for w, count in histogram.items()}

def _params(params):
    k_formula = None
    if params.k_formula is not None:
        k_formula = {'value': params.k_formula, 'method': THEOREM_FORMULA}
    return {
        'n': params.n,
        'k': {'value': params.k, 'method': RANK_FORMULA},
        'k_formula': k_formula,
        'd': distance_to_json(params.d),
        'd_x': distance_to_json(params.d_x),
        'd_z': distance_to_json(params.d_z),
        'rank_x': {'value': params.rank_x, 'method': RANK_FORMULA},
        'rank_z': {'value': params.rank_z, 'method': RANK_FORMULA},
        'histograms': {
            'h_x_rows': _keyed(params.row_weights_x),
            'h_x_cols': _keyed(params.col_weights_x),
            'h_z_rows': _keyed(params.row_weights_z),
            'h_z_cols': _keyed(params.col_weights_z),
        },
        'notes': list(params.notes),
    }

def _bounds(bounds):
    return {
        'd1': distance_to_json(bounds.d1),
        'd2': distance_to_json(bounds.d2),
        'd1_t': distance_to_json(bounds.d1_t),
        'd2_t': distance_to_json(bounds.d2_t),
        'lower_bound': _number(bounds.lower_bound),
        'checks': [asdict(c) for c in bounds.checks],
        'conclusive': bounds.conclusive,
        'note': bounds.note,
    }

def build_report(params, construction, bounds=None, timing=None,
                 deterministic=False):
    witnesses = {}
    for side, result in (('x', params.d_x), ('z', params.d_z)):
        if result.witness is not None:
            witnesses[side] = result.witness.support()
    timing = dict(timing or {})
    if deterministic:
        timing = dict.fromkeys(timing, 0.0)
    return Report(_params(params), construction,
                  _bounds(bounds) if bounds is not None else None,
                  witnesses, timing)

def witness(report, side, n):
    """The stored witness for ``side`` ('x' or 'z') as a vector, or None."""
    support = report.witnesses.get(side)
    if support is None:
        return None
    return BinaryVector.from_support(n, support)

def to_json(report):
    return json.dumps(asdict(report), indent=2, sort_keys=True,
                      ensure_ascii=False) + '\n'

def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)

def _check_distance(name, obj):
    if not isinstance(obj, dict):
        raise ReportFormatError('report params "%s" must be an object' % name)
    if obj.get('kind') not in (EXACT, LOWER_BOUND, INFINITE):
        raise ReportFormatError('report params "%s" has unknown kind %r' %
                                (name, obj.get('kind')))
    for key in ('weight', 'method', 'search_budget_used', 'upper_bound'):
        if key not in obj:
            raise ReportFormatError('report params "%s" lack "%s"' %
                                    (name, key))
    # An infinite distance has no weight.
    if obj['kind'] != INFINITE and not _is_int(obj['weight']):
        raise ReportFormatError('report params "%s" weight must be an '
                                'integer' % name)
    if obj['upper_bound'] is not None and not _is_int(obj['upper_bound']):
        raise ReportFormatError('report params "%s" upper_bound must be '
                                'an integer' % name)

def _check_params(params):
    if not isinstance(params, dict):
        raise ReportFormatError('report params must be an object')
    for key in ('n', 'k', 'd', 'd_x', 'd_z'):
        if key not in params:
            raise ReportFormatError('report params lack "%s"' % key)
    if not _is_int(params['n']):
        raise ReportFormatError('report params "n" must be an integer')
    k = params['k']
    if not isinstance(k, dict) or not _is_int(k.get('value')):
        raise ReportFormatError('report params "k" must be an object '
                                'with an integer "value"')
    for key in ('d', 'd_x', 'd_z'):
        _check_distance(key, params[key])

def _check_witnesses(witnesses):
    if not isinstance(witnesses, dict) or not all(
            side in ('x', 'z') and isinstance(support, list) and
            all(_is_int(i) and i >= 0 for i in support)
            for side, support in witnesses.items()):
        raise ReportFormatError('report witnesses must map "x" and "z" to '
                                'lists of qubit indices')

def from_json(text):
    try:
        obj = json.loads(text)
    except ValueError as e:
        raise ReportFormatError('report is not valid JSON: %s' % e)
    if not isinstance(obj, dict):
        raise ReportFormatError('report must be a JSON object')
    schema = obj.get('schema')
    if schema != SCHEMA:
        raise ReportFormatError('unknown report schema %r (expected %r)' %
                                (schema, SCHEMA))
    for key in ('params', 'construction'):
        if key not in obj:
            raise ReportFormatError('report lacks "%s"' % key)
    params = obj['params']
    _check_params(params)
    _check_witnesses(obj.get('witnesses') or {})
    return Report(params, obj['construction'], obj.get('bounds'),
                  obj.get('witnesses') or {}, obj.get('timing') or {},
                  schema)
