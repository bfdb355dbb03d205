# commands.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

from functools import wraps
import inspect
import keyword
import logging
import math
import os
import sys
import time

from hgpcodes import alist, checks, cmdutil, constructions, css, gf2
from hgpcodes import report as report_mod
from hgpcodes.cmdutil import (EXIT_NOT_EXACT, EXIT_OK, EXIT_VERIFY,
                              UsageError, parse_int)
from hgpcodes.config import budget_from_config
from hgpcodes.store import CodeDirectory

log = logging.getLogger(__name__)

commands = {}

BUDGET_OPTIONS = '''\
      --full-enum-dim <k>   Enumerate kernels of dimension up to k.
      --max-weight <t>      Largest information-set weight searched.
      --max-candidates <c>  Candidate budget of the weight search.
      --threads <n>         Worker threads for the distance search.
'''

QUANTUM_KINDS = ('toric', 'hgp', 'hgp-single')
CLASSICAL_KINDS = ('repetition', 'hamming', 'cycle', 'regular')

def _hook(config, func_name, attr):
    if hasattr(config, 'has_section') and config.has_section('hooks'):
        hook = config['hooks'].get(func_name)
        if hook is not None:
            __import__(hook, {}, {}, [])
            mod = sys.modules[hook]
            return getattr(mod, attr, None)
    return None

def pre_hook(config, func_name):
    return (_hook(config, func_name, 'pre') or
            (lambda config, args, kwargs: (args, kwargs)))

def post_hook(config, func_name):
    return _hook(config, func_name, 'post') or (lambda config, res: res)

def command(name=None, aliases=(), budget=False):
    def decorator(func):
        if budget:
            func.__doc__ = func.__doc__.rstrip() + '\n' + BUDGET_OPTIONS
        @wraps(func)
        def decorated(config, *args, **kwargs):
            args, kwargs = pre_hook(config, decorated.name)(config, args,
                                                            kwargs)
            res = func(config, *args, **kwargs)
            return post_hook(config, decorated.name)(config, res)
        decorated.name = name or func.__code__.co_name
        decorated.description = func.__doc__.split('\n')[0].strip()
        commands[decorated.name] = decorated
        for alias in aliases:
            if alias not in commands:
                commands[alias] = decorated
        return decorated
    return decorator

def argument_name(arg):
    """Keyword argument for a docopt key: ``--full-enum-dim`` becomes
    ``full_enum_dim``, ``<code-dir>`` ``code_dir`` and ``--in`` ``in_``."""
    name = arg.lstrip('-').strip('<>').replace('-', '_')
    if keyword.iskeyword(name):
        name += '_'
    return name

def run_command(config, name, args):
    from docopt import docopt
    func_name = cmdutil.complete(commands, name, 'command')
    cmd = commands[func_name]
    args = docopt(inspect.getdoc(cmd), argv=[func_name] + args)
    params = inspect.signature(cmd).parameters
    call_args = {}
    for arg, value in args.items():
        a = argument_name(arg)
        if a in params:
            call_args[a] = value
    return cmd(config, **call_args)

def _budget(config, full_enum_dim=None, max_weight=None, max_candidates=None,
            threads=None):
    try:
        return budget_from_config(config, full_enum_dim=full_enum_dim,
                                  max_weight=max_weight,
                                  max_candidates=max_candidates,
                                  threads=threads)
    except ValueError as e:
        raise UsageError('invalid search budget: %s' % e)

def summary_line(params):
    d = params.d
    if d.is_exact:
        return '%s D=%s' % (params.summary(), d)
    if d.is_lower_bound:
        return '%s D %s' % (params.summary(), d)
    return params.summary()

def print_params(params):
    print(summary_line(params))
    table = [['Quantity', 'Value', 'Method'],
             ['N', str(params.n), ''],
             ['K', str(params.k), report_mod.RANK_FORMULA]]
    if params.k_formula is not None:
        table.append(['K (formula)', str(params.k_formula),
                      report_mod.THEOREM_FORMULA])
    for label, d in (('D', params.d), ('D_X', params.d_x),
                     ('D_Z', params.d_z)):
        table.append([label, d.short(), d.method])
    table += [
        ['rank H_X', str(params.rank_x), report_mod.RANK_FORMULA],
        ['rank H_Z', str(params.rank_z), report_mod.RANK_FORMULA],
        ['H_X rows', cmdutil.format_histogram(params.row_weights_x), ''],
        ['H_X cols', cmdutil.format_histogram(params.col_weights_x), ''],
        ['H_Z rows', cmdutil.format_histogram(params.row_weights_z), ''],
        ['H_Z cols', cmdutil.format_histogram(params.col_weights_z), ''],
    ]
    cmdutil.pprint_table(table)
    for note in params.notes:
        print('note: %s' % note)

def _matching_product(directory, code):
    if not directory.has_factors():
        return None
    p = directory.load_product()
    if p.product.incidence != code.h_x or p.chamber_matrix != code.h_z:
        log.warning('%s: h1/h2 do not generate the stored code; ignoring '
                    'them', directory.path)
        return None
    return p

# Commands

@command(aliases=('make',), budget=True)
def build(config, kind, out=None, m=None, n=None, r=None, in_=None,
          left=None, right=None, col_weight=None, row_weight=None, seed='0',
          deterministic=False, full_enum_dim=None, max_weight=None,
          max_candidates=None, threads=None):
    """Build a code and write it to a directory

    Usage: hgp (build | make) <kind> [options]

    Quantum kinds write h_x.alist, h_z.alist, the factors h1.alist and
    h2.alist, and report.json to the output directory, then print the
    parameter table:

      toric         --m         toric code on the m x m torus
      hgp           --left --right
                                product of two alist check matrices
      hgp-single    --in        product of a full-rank check matrix with
                                its transpose

    Classical kinds print [n, k, d] and write H.alist when --out is given:

      repetition    --n
      hamming       --r
      cycle         --m
      regular       --n --col-weight --row-weight [--seed]

    Options:
      -o <dir>, --out <dir>   Output directory.
      --m <m>                 Cycle length.
      --n <n>                 Code length.
      --r <r>                 Number of Hamming check bits.
      --in <file>             Check matrix for hgp-single.
      --left <file>           Left factor for hgp.
      --right <file>          Right factor for hgp.
      --col-weight <t>        Column weight of a regular code.
      --row-weight <w>        Row weight of a regular code.
      --seed <seed>           Random seed of a regular code [default: 0].
      --deterministic         Zero the timing fields of the report.
    """
    budget = _budget(config, full_enum_dim, max_weight, max_candidates,
                     threads)
    if kind in CLASSICAL_KINDS:
        return _build_classical(kind, out, m, n, r, col_weight, row_weight,
                                seed, budget)
    if kind not in QUANTUM_KINDS:
        raise UsageError('unknown kind "%s"; expected one of %s' %
                         (kind, ', '.join(QUANTUM_KINDS + CLASSICAL_KINDS)))
    if out is None:
        raise UsageError('build %s needs --out' % kind)
    started = time.perf_counter()
    if kind == 'toric':
        m = parse_int(m, 'm', 2)
        c = constructions.cycle_graph(m)
        p, code = constructions.hgp(c, c)
        arguments = {'m': m}
    elif kind == 'hgp':
        if left is None or right is None:
            raise UsageError('build hgp needs --left and --right')
        p, code = constructions.hgp(alist.read_alist(left),
                                    alist.read_alist(right))
        arguments = {'left': left, 'right': right}
    else:
        if in_ is None:
            raise UsageError('build hgp-single needs --in')
        p, code = constructions.hgp_from_single(alist.read_alist(in_))
        arguments = {'in': in_}
    built = time.perf_counter()
    code_params = css.full_params(code, budget, product=p)
    measured = time.perf_counter()
    bounds = css.check_distance_bounds(p, code_params, budget)
    finished = time.perf_counter()
    timing = {'build': built - started, 'params': measured - built,
              'bounds': finished - measured}
    report = report_mod.build_report(
        code_params, report_mod.construction(kind, arguments), bounds, timing,
        deterministic)
    directory = CodeDirectory(out)
    directory.save_code(code, (p.left.incidence, p.right.incidence))
    directory.save_report(report)
    print_params(code_params)
    return EXIT_OK

def _build_classical(kind, out, m, n, r, col_weight, row_weight, seed,
                     budget):
    if kind == 'repetition':
        spec = constructions.Repetition(parse_int(n, 'n', 2))
    elif kind == 'hamming':
        spec = constructions.Hamming(parse_int(r, 'r', 2))
    elif kind == 'cycle':
        spec = constructions.CycleGraph(parse_int(m, 'm', 2))
    else:
        spec = constructions.RandomRegular(
            parse_int(n, 'n', 1), parse_int(col_weight, 'col-weight', 1),
            parse_int(row_weight, 'row-weight', 1), parse_int(seed, 'seed'))
    h = constructions.build_classical(constructions.ClassicalCodeSpec(spec))
    length, k, d = constructions.classical_params(h, budget)
    if out is not None:
        os.makedirs(out, exist_ok=True)
        alist.write_alist(os.path.join(out, 'H.alist'), h)
    line = '[%d, %d, %s]' % (length, k, d.short())
    if kind == 'regular':
        line += ' seed=%d' % spec.seed
    print(line)
    return EXIT_OK

@command(aliases=('parameters',), budget=True)
def params(config, code_dir, require_exact=False, full_enum_dim=None,
           max_weight=None, max_candidates=None, threads=None):
    """Compute [[N, K, D]] of a stored code

    Usage: hgp (params | parameters) <code-dir> [options]

    Print the summary line and a table of the code's parameters and
    weight histograms. When the directory holds the product factors the
    dimension is also computed from the closed formula.

    Options:
      --require-exact       Exit with status 4 unless D is exact.
    """
    budget = _budget(config, full_enum_dim, max_weight, max_candidates,
                     threads)
    directory = CodeDirectory(code_dir)
    code = directory.load_code()
    product = _matching_product(directory, code)
    result = css.full_params(code, budget, product=product)
    print_params(result)
    if require_exact and result.d.is_lower_bound:
        print('D is not exact: %s' % result.d, file=sys.stderr)
        return EXIT_NOT_EXACT
    return EXIT_OK

@command(aliases=('check',), budget=True)
def verify(config, code_dir, full_enum_dim=None, max_weight=None,
           max_candidates=None, threads=None):
    """Run every applicable check on a stored code

    Usage: hgp (verify | check) <code-dir> [options]

    Checks orthogonality, ranks, distance witnesses and the stored report.
    When h1.alist and h2.alist are present it also checks the product
    structure: transposes, edge count, Poincare duality, chamber
    redundancy, chamber and cocycle code dimensions, the dimension
    formula, the zero-dimension case, the weight law and the distance
    bounds. Exits with status 3 when any check fails.

    Options:
    """
    budget = _budget(config, full_enum_dim, max_weight, max_candidates,
                     threads)
    directory = CodeDirectory(code_dir)
    h_x, h_z = directory.load_matrices()
    product = directory.load_product()
    results = checks.run_checks(h_x, h_z, product, budget,
                                directory.load_report())
    table = [['Check', 'Result', 'Detail']]
    table += [[c.name, c.status, c.detail] for c in results]
    cmdutil.pprint_table(table)
    failed = sum(1 for c in results if c.passed is False)
    skipped = sum(1 for c in results if c.passed is None)
    print('%d passed, %d failed, %d skipped' %
          (len(results) - failed - skipped, failed, skipped))
    return EXIT_VERIFY if failed else EXIT_OK

@command()
def export(config, code_dir, format='alist', out=None):
    """Write the matrices of a stored code as alist or JSON

    Usage: hgp export <code-dir> [options]

    Writes h_x, h_z and, when present, the factors h1 and h2, one file per
    matrix, to the output directory.

    Options:
      -f (alist|json), --format=(alist|json)
                              Output format [default: alist].
      -o <dir>, --out <dir>   Output directory; defaults to <code-dir>.
    """
    if format not in ('alist', 'json'):
        raise UsageError('invalid format: %s' % format)
    for path in CodeDirectory(code_dir).export(format, out):
        print(path)
    return EXIT_OK

@command(budget=True)
def survey(config, toric_max='6', n='8', col_weight='3', row_weight='4',
           samples='3', seed='0', full_enum_dim=None, max_weight=None,
           max_candidates=None, threads=None):
    """Tabulate D/sqrt(N) for toric codes and random regular products

    Usage: hgp survey [options]

    Toric codes grow as D = sqrt(N/2). The random rows square a
    (col-weight, row-weight)-regular check matrix of length n with its
    transpose; rank-deficient samples use the general product.

    Options:
      --toric-max <m>       Largest toric code [default: 6].
      --n <n>               Length of the random codes [default: 8].
      --col-weight <t>      Column weight [default: 3].
      --row-weight <w>      Row weight [default: 4].
      --samples <s>         Number of random codes [default: 3].
      --seed <seed>         First random seed [default: 0].
    """
    budget = _budget(config, full_enum_dim, max_weight, max_candidates,
                     threads)
    table = [['Code', 'N', 'K', 'D', 'D/sqrt(N)']]
    for m in range(2, parse_int(toric_max, 'toric-max', 2) + 1):
        c = constructions.cycle_graph(m)
        p, code = constructions.hgp(c, c)
        table.append(_survey_row('toric m=%d' % m, code, p, budget))
    first = parse_int(seed, 'seed')
    for s in range(first, first + parse_int(samples, 'samples', 0)):
        spec = constructions.RandomRegular(
            parse_int(n, 'n', 1), parse_int(col_weight, 'col-weight', 1),
            parse_int(row_weight, 'row-weight', 1), s)
        h = constructions.build_classical(spec)
        try:
            p, code = constructions.hgp_from_single(h)
        except constructions.RankDeficientError:
            log.info('seed %d is rank deficient; using the general product',
                     s)
            p, code = constructions.hgp(h, gf2.transpose(h))
        table.append(_survey_row('regular seed=%d' % s, code, p, budget))
    cmdutil.pprint_table(table)
    return EXIT_OK

def _survey_row(label, code, p, budget):
    code_params = css.full_params(code, budget, product=p)
    d = code_params.d
    if d.is_infinite:
        ratio = '-'
    else:
        ratio = '%s%.3f' % ('>=' if d.is_lower_bound else '',
                            d.weight / math.sqrt(code_params.n))
    return [label, str(code_params.n), str(code_params.k), d.short(), ratio]
