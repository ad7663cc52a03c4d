#!/usr/bin/env python3

import sys
import click
import logging
import better_exceptions

from collections import OrderedDict
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import __appname__, __version__
from .console import ConsolePrinter, OutputFormat
from .census import CensusReport
from .census.verifications import (figure_one_table, verify_basis_span, verify_corollary, verify_mixed_rank,
                                   verify_non_group, verify_proof_counts, verify_rank_remark, verify_shape_statistics,
                                   verify_theorem)
from .perm_core.permutation import identity, is_involution
from .perm_core.enumeration import enumerate_group
from .perm_core.notation import Notation, format_permutation, parse_permutation
from .rs_correspondence.insertion import rs_map
from .tableaux.standard import format_tableau
from .tensor_invariants import TensorSpaceConfig
from .tensor_invariants.dense import invariance_deviation
from .tensor_invariants.gram import exact_rank, permutation_gram
from .mixed_diagrams import MixedShape
from .mixed_diagrams.diagram import compose, enumerate_mixed, format_diagram, has_inverse, is_hermitian, parse_diagram
from .utils import CapacityError, control_threshold, internal_conf, invariance_tolerance, log_level

better_exceptions.hook()

log = logging.getLogger(__name__)

CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

FORMATS = [f.value for f in OutputFormat]


def output_options(f: Callable) -> Callable:
    """--format and --cap, accepted by the group as well as by every command (the command's value wins)"""
    f = click.option('--cap', type=click.IntRange(min=0), default=None,
                     help='Override the configured size limit of the command.')(f)
    f = click.option('--format', 'output', type=click.Choice(FORMATS), default=None,
                     help='Output format, table if not given.')(f)
    return f


def _configure_logging(verbose: bool) -> None:
    logger = logging.getLogger('suncount')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else log_level())
    logger.propagate = False


def _settings(ctx: click.Context, output: Optional[str], cap: Optional[int]) -> Tuple[OutputFormat, Optional[int]]:
    output = output or ctx.obj.get('output') or OutputFormat.Table.value
    return OutputFormat(output), cap if cap is not None else ctx.obj.get('cap')


def _printer(ctx: click.Context) -> ConsolePrinter:
    return ctx.obj['printer']


def _emit_report(ctx: click.Context, report: CensusReport, output: OutputFormat) -> int:
    _printer(ctx).print_report(report, output)
    return 0 if report.passed else 1


def _emit_record(ctx: click.Context, record: Dict[str, Any], output: OutputFormat) -> None:
    printer = _printer(ctx)
    if output is OutputFormat.Json:
        printer.print_json(record)
    elif output is OutputFormat.Csv:
        printer.print_rows([list(record), list(record.values())], output)
    else:
        printer.print_rows([[key, value] for key, value in record.items()], output)


def _emit_records(ctx: click.Context, records: List[Dict[str, Any]], output: OutputFormat) -> None:
    printer = _printer(ctx)
    if output is OutputFormat.Json:
        printer.print_json(records)
    elif records:
        printer.print_rows([list(records[0])] + [list(r.values()) for r in records], output)


def _yes_no(flag: bool) -> str:
    return 'yes' if flag else 'no'


@click.group(context_settings=CONTEXT_SETTINGS)
@click.version_option(version=__version__, prog_name=__appname__)
@output_options
@click.option('--verbose', '-v', is_flag=True, default=False, help='Log debug output to stderr.')
@click.pass_context
def cli(ctx, output, cap, verbose):
    ctx.ensure_object(dict)
    _configure_logging(verbose)
    ctx.obj['internal_conf'] = internal_conf()
    ctx.obj['printer'] = ConsolePrinter(ctx.obj['internal_conf'])
    ctx.obj['output'] = output
    ctx.obj['cap'] = cap


@cli.command(name='theorem', help='Count the irreducible representations on V^⊗k (N ≥ k) in four independent ways.')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Tensor power.')
@output_options
@click.pass_context
def theorem(ctx, k, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_theorem(k, cap=cap), output)


@cli.command(name='proof-counts', help='Check the sizes of the Hermitian, anti-Hermitian and projector bases.')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Tensor power.')
@output_options
@click.pass_context
def proof_counts(ctx, k, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_proof_counts(k, cap=cap), output)


@cli.command(name='corollary', help='Count the Hermitian primitive invariants on V^⊗m ⊗ (V*)^⊗n.')
@click.option('--m', type=click.IntRange(min=0), required=True, help='Number of V factors.')
@click.option('--n', type=click.IntRange(min=0), required=True, help='Number of V* factors.')
@output_options
@click.pass_context
def corollary(ctx, m, n, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_corollary(m, n, cap=cap), output)


@cli.command(name='rank', help='Compare exact Gram ranks with tableau counts restricted to N rows.')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Tensor power.')
@click.option('--big-n', type=click.IntRange(min=1), required=True, help='N = dim(V).')
@click.option('--involutions-only', is_flag=True, default=False, help='Only rank the Gram matrix of the involutions.')
@output_options
@click.pass_context
def rank(ctx, k, big_n, involutions_only, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_rank_remark(k, big_n, involutions_only=involutions_only, cap=cap), output)


@cli.command(name='shapes', help='Compare the Robinson-Schensted shape counts with squared hook length counts.')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Degree.')
@output_options
@click.pass_context
def shapes(ctx, k, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_shape_statistics(k, cap=cap), output)


@cli.command(name='basis-span', help='Check that the Hermitian and anti-Hermitian elements span the invariants.')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Tensor power.')
@click.option('--big-n', type=click.IntRange(min=1), required=True, help='N = dim(V).')
@output_options
@click.pass_context
def basis_span(ctx, k, big_n, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_basis_span(k, big_n, cap=cap), output)


@cli.command(name='figure1', help='Tabulate every permutation of S_k with its tableau pair.')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Degree.')
@output_options
@click.pass_context
def figure1(ctx, k, output, cap):
    output, cap = _settings(ctx, output, cap)
    rows = figure_one_table(k, cap=cap)
    records = [
        OrderedDict([('perm', format_permutation(a)), ('cycles', format_permutation(a, Notation.Cycles)),
                     ('P', format_tableau(pair.p)), ('Q', format_tableau(pair.q)), ('diagonal', _yes_no(diagonal)),
                     ('involution', _yes_no(is_involution(a)))]) for a, pair, diagonal in rows
    ]
    diagonal_count = sum(1 for _, _, diagonal in rows if diagonal)
    if output is OutputFormat.Json:
        _printer(ctx).print_json(OrderedDict([('k', k), ('rows', records), ('diagonal', diagonal_count)]))
    else:
        _emit_records(ctx, records, output)
        if output is OutputFormat.Table:
            _printer(ctx).print('diagonal: {} of {}\n'.format(diagonal_count, len(rows)))
    return 0 if all(diagonal == is_involution(a) for a, _, diagonal in rows) else 1


@cli.command(name='rs', help='Robinson-Schensted tableau pair of a permutation.')
@click.option('--perm', required=True, help='One-line ("2 3 1") or cycle ("(123)") notation.')
@click.option('--degree', type=click.IntRange(min=0), default=None, help='Degree, for trailing fixed points.')
@output_options
@click.pass_context
def rs(ctx, perm, degree, output, cap):
    output, _ = _settings(ctx, output, cap)
    a = parse_permutation(perm, degree)
    pair = rs_map(a)
    _emit_record(ctx,
                 OrderedDict([('perm', format_permutation(a)), ('P', format_tableau(pair.p)),
                              ('Q', format_tableau(pair.q)), ('shape', str(pair.shape)),
                              ('diagonal', _yes_no(pair.is_diagonal))]), output)
    return 0


@cli.command(name='gram', help='Exact Gram matrix tr(σ†τ) of S_k at N.')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Tensor power.')
@click.option('--big-n', type=click.IntRange(min=1), required=True, help='N = dim(V).')
@output_options
@click.pass_context
def gram(ctx, k, big_n, output, cap):
    output, cap = _settings(ctx, output, cap)
    g = permutation_gram(k, big_n, cap=cap)
    printer = _printer(ctx)
    if output is OutputFormat.Json:
        data = g.to_dict()
        data['rank'] = str(exact_rank(g))
        printer.print_json(data)
    elif output is OutputFormat.Csv:
        printer.print(g.to_csv())
    else:
        printer.print_heading('Gram matrix of S_{} at N={}'.format(k, big_n))
        header = ['basis'] + list(g.labels)
        printer.print_rows([header] + [[label] + list(row) for label, row in zip(g.labels, g.entries)], output)
        printer.print('rank: {}\n'.format(exact_rank(g)))
    return 0


@cli.command(name='invariance', help='Check numerically that permutations commute with U^⊗k for a seeded U in SU(N).')
@click.option('--k', type=click.IntRange(min=0), required=True, help='Tensor power.')
@click.option('--big-n', type=click.IntRange(min=1), required=True, help='N = dim(V).')
@click.option('--seed', type=int, required=True, help='Seed of the random unitary.')
@click.option('--tol', type=float, default=None, help='Largest admissible deviation.')
@output_options
@click.pass_context
def invariance(ctx, k, big_n, seed, tol, output, cap):
    output, cap = _settings(ctx, output, cap)
    tol = invariance_tolerance(tol)
    if tol <= 0:
        raise click.BadParameter('must be positive, got {}'.format(tol), param_hint='--tol')
    cfg = TensorSpaceConfig(big_n, k)
    cfg.check_dense(cap)
    threshold = control_threshold()
    records = []
    passed = True
    for a in enumerate_group(k):
        deviation = invariance_deviation(a, cfg, seed, budget=cap)
        record = OrderedDict([('perm', format_permutation(a)), ('deviation', deviation),
                              ('invariant', _yes_no(deviation < tol))])
        passed = passed and deviation < tol
        # a generic unitary commutes with every permutation only for N = 1 or the identity
        if big_n >= 2 and a != identity(k):
            control = invariance_deviation(a, cfg, seed, product=False, budget=cap)
            record['control'] = control
            record['control_fails'] = _yes_no(control > threshold)
            passed = passed and control > threshold
        else:
            record['control'] = None
            record['control_fails'] = '-'
        records.append(record)
    if output is OutputFormat.Json:
        _printer(ctx).print_json(OrderedDict([('k', k), ('N', big_n), ('seed', seed), ('rows', records),
                                              ('passed', passed)]))
    else:
        for record in records:
            record['deviation'] = '{:.1e}'.format(record['deviation'])
            record['control'] = '-' if record['control'] is None else '{:.1e}'.format(record['control'])
        _emit_records(ctx, records, output)
        if output is OutputFormat.Table:
            _printer(ctx).print('result: {}\n'.format('PASS' if passed else 'FAIL'))
    return 0 if passed else 1


@cli.group(name='mixed', help='Primitive invariants on V^⊗m ⊗ (V*)^⊗n.')
def mixed():
    pass


@mixed.command(name='list', help='List the diagrams of S_{m,n} with their Hermitian and invertibility flags.')
@click.option('--m', type=click.IntRange(min=0), required=True, help='Number of V factors.')
@click.option('--n', type=click.IntRange(min=0), required=True, help='Number of V* factors.')
@output_options
@click.pass_context
def mixed_list(ctx, m, n, output, cap):
    output, cap = _settings(ctx, output, cap)
    diagrams = enumerate_mixed(MixedShape(m, n), cap=cap)
    if output is OutputFormat.Json:
        _printer(ctx).print_json([
            OrderedDict([('diagram', format_diagram(d)), ('hermitian', is_hermitian(d)),
                         ('invertible', has_inverse(d))]) for d in diagrams
        ])
    else:
        _emit_records(ctx, [
            OrderedDict([('diagram', format_diagram(d)), ('hermitian', _yes_no(is_hermitian(d))),
                         ('invertible', _yes_no(has_inverse(d)))]) for d in diagrams
        ], output)
    return 0


@mixed.command(name='compose', help='Compose two diagrams; prints the number of closed loops and the result.')
@click.option('--a', 'a_text', required=True, help='Left factor, e.g. "R1-R2,L1-L2".')
@click.option('--b', 'b_text', required=True, help='Right factor.')
@click.option('--m', type=click.IntRange(min=0), required=True, help='Number of V factors.')
@click.option('--n', type=click.IntRange(min=0), required=True, help='Number of V* factors.')
@output_options
@click.pass_context
def mixed_compose(ctx, a_text, b_text, m, n, output, cap):
    output, _ = _settings(ctx, output, cap)
    shape = MixedShape(m, n)
    loops, result = compose(parse_diagram(a_text, shape), parse_diagram(b_text, shape))
    _emit_record(ctx, OrderedDict([('loops', loops), ('result', format_diagram(result))]), output)
    return 0


@mixed.command(name='rank', help='Exact rank of the Gram matrix of S_{m,n} at N.')
@click.option('--m', type=click.IntRange(min=0), required=True, help='Number of V factors.')
@click.option('--n', type=click.IntRange(min=0), required=True, help='Number of V* factors.')
@click.option('--big-n', type=click.IntRange(min=1), required=True, help='N = dim(V).')
@output_options
@click.pass_context
def mixed_rank(ctx, m, n, big_n, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_mixed_rank(m, n, big_n, cap=cap), output)


@mixed.command(name='inverses', help='Count the invertible diagrams of S_{m,n}.')
@click.option('--m', type=click.IntRange(min=0), required=True, help='Number of V factors.')
@click.option('--n', type=click.IntRange(min=0), required=True, help='Number of V* factors.')
@click.option('--no-search', is_flag=True, default=False, help='Skip the exhaustive search for inverses.')
@output_options
@click.pass_context
def mixed_inverses(ctx, m, n, no_search, output, cap):
    output, cap = _settings(ctx, output, cap)
    return _emit_report(ctx, verify_non_group(m, n, exhaustive=not no_search, cap=cap), output)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and map the outcome to an exit code

    Returns:
        0 on success, 1 if a verification failed, 2 for usage and parse errors, 3 if a size limit was exceeded
    """
    args = list(argv) if argv is not None else sys.argv[1:]
    printer = ConsolePrinter(internal_conf())
    try:
        rv = cli.main(args=args, prog_name='suncount', standalone_mode=False, obj={})
    except click.ClickException as e:
        printer.print_error(e.format_message())
        return 2
    except click.Abort:
        printer.print_error('Aborted.')
        return 2
    except CapacityError as e:
        printer.print_error(str(e))
        return 3
    except ValueError as e:
        printer.print_error(str(e))
        return 2
    return rv if isinstance(rv, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
