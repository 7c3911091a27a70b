#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    The command-line interface ``hertzsprung``.

    Every subcommand builds a JSON-compatible payload and a list of text lines; ``--json`` selects which one is
    printed. The exit code is 0 on success, 1 if a verification fails and 2 on a usage error.
"""

from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import TextIO
from typing import Tuple

import json
import logging
import sys

from argparse import ArgumentParser
from argparse import ArgumentTypeError
from argparse import Namespace

from .algebra import TruncatedSeries
from .algebra import render_poly
from .clusters import build_end_in_digraph
from .clusters import build_transfer_digraph
from .clusters import check_antichain
from .clusters import correlation_poly
from .clusters import overlap_set
from .config import Limits
from .config import check_ceiling
from .conjectures import check_bona
from .conjectures import check_conjecture_one
from .conjectures import mesh_p_series_check
from .conjectures import wilf_autocorrelation_classes
from .distribution import avoider_series
from .distribution import brute_force_distribution
from .distribution import end_pattern_series
from .distribution import joint_distribution_series
from .enums import Verdict
from .errors import HertzsprungError
from .errors import ParseError
from .errors import UsageError
from .oeis import oeis_compare
from .parsing import parse_bfile
from .parsing import parse_permutation
from .parsing import parse_rules
from .permutation import Permutation
from .permutation import avoids
from .permutation import enumerate_permutations
from .rewriting import BUILTIN_NAMES
from .rewriting import ConfluenceReport
from .rewriting import RewriteSystem
from .rewriting import TerminationReport
from .rewriting import builtin_system
from .rewriting import check_local_confluence
from .rewriting import check_termination
from .rewriting import class_count_series
from .rewriting import equivalence_classes_bruteforce
from .rewriting import normal_form

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

TABLE_SYSTEMS = ('EQ2', 'EQ3', 'EQ4', 'EQ5', 'EQ6', 'EQ7')
"""
    The systems whose class counts are tabulated by ``table2``.
"""

Outcome = Tuple[Dict[str, Any], List[str], bool]
"""
    The result of a subcommand: the JSON payload, the text lines, and whether all verifications passed.
"""

# region Argument Parsing


class _ArgumentParser(ArgumentParser):
    """
        An argument parser raising :class:`.UsageError` instead of exiting.
    """

    def error(self, message: str) -> None:  # type: ignore
        raise UsageError(f'{self.prog}: {message}')


def _permutation(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except ParseError as error:
        raise ArgumentTypeError(str(error)) from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError(f'expected a non-negative integer, got {text!r}') from None

    if value < 0:
        raise ArgumentTypeError(f'expected a non-negative integer, got {text!r}')

    return value


def _read(path: str) -> str:
    try:
        with open(path, encoding='utf-8') as file:
            return file.read()
    except OSError as error:
        raise UsageError(f'Cannot read {path}: {error.strerror}') from None


def _build_parser() -> ArgumentParser:
    parser = _ArgumentParser(prog='hertzsprung',
                             description='Distributions of Hertzsprung patterns and pattern-rewriting systems.')
    parser.add_argument('--json', action='store_true', help='print one JSON document instead of text')
    parser.add_argument('--verbose', action='store_true', help='log progress to standard error')
    parser.add_argument('--max-brute', type=_natural, metavar='N',
                        help=f'ceiling of brute-force oracles (default {Limits.max_brute})')
    parser.add_argument('--max-classes', type=_natural, metavar='N',
                        help=f'ceiling of class counting over S_n (default {Limits.max_classes})')
    parser.add_argument('--max-wilf', type=_natural, metavar='K',
                        help=f'ceiling of the Wilf class scan (default {Limits.max_wilf})')

    order = _ArgumentParser(add_help=False)
    order.add_argument('-N', dest='order', type=_natural, metavar='N', help='truncation order of series')

    patterns = _ArgumentParser(add_help=False)
    patterns.add_argument('-p', dest='patterns', type=_permutation, action='append', required=True, metavar='PATTERN',
                          help='a pattern of the antichain (repeat for several)')

    check = _ArgumentParser(add_help=False)
    check.add_argument('--check', type=_natural, metavar='M', help='verify against brute force up to length M')

    system = _ArgumentParser(add_help=False)
    source = system.add_mutually_exclusive_group(required=True)
    source.add_argument('--rules', metavar='FILE', help='a rule file, one rule "LHS -> RHS" per line')
    source.add_argument('--eq', metavar='NAME', help=f'a builtin system: {", ".join(BUILTIN_NAMES)}')

    commands = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_ArgumentParser)
    commands.required = True

    omega = commands.add_parser('omega', help='correlation polynomial of two patterns')
    omega.add_argument('sigma', type=_permutation)
    omega.add_argument('tau', type=_permutation)
    omega.set_defaults(handler=_omega)

    olap = commands.add_parser('olap', help='overlap set of two patterns')
    olap.add_argument('sigma', type=_permutation)
    olap.add_argument('tau', type=_permutation)
    olap.set_defaults(handler=_olap)

    cluster = commands.add_parser('cluster-gf', parents=[patterns], help='cluster generating function')
    cluster.add_argument('--digraph', action='store_true', help='also print the weighted transfer digraph')
    cluster.add_argument('--alpha', type=_permutation, help='only clusters ending in this pattern')
    cluster.add_argument('--specialize', type=int, metavar='VALUE', help='set every marker to VALUE first')
    cluster.set_defaults(handler=_cluster_gf)

    dist = commands.add_parser('dist', parents=[patterns, order, check], help='joint distribution of an antichain')
    dist.set_defaults(handler=_dist)

    avoid = commands.add_parser('avoid', parents=[patterns, order, check], help='number of avoiders per length')
    avoid.set_defaults(handler=_avoid)

    end_in = commands.add_parser('end-in', parents=[patterns, order],
                                 help='avoiders except for one occurrence at the end')
    end_in.add_argument('--alpha', type=_permutation, required=True, help='the pattern occurring at the end')
    end_in.set_defaults(handler=_end_in)

    rewrite = commands.add_parser('rewrite', help='pattern-rewriting systems')
    actions = rewrite.add_subparsers(dest='action', metavar='ACTION', parser_class=_ArgumentParser)
    actions.required = True

    nf = actions.add_parser('nf', parents=[system], help='normal forms of permutations')
    nf.add_argument('permutations', type=_permutation, nargs='+', metavar='PERMUTATION')
    nf.set_defaults(handler=_rewrite_nf)

    confluence = actions.add_parser('check', parents=[system], help='termination and confluence')
    confluence.add_argument('--nmax', type=_natural, help='length up to which termination is verified')
    confluence.add_argument('--expect-confluent', action='store_true', help='fail unless the system is confluent')
    confluence.set_defaults(handler=_rewrite_check)

    classes = actions.add_parser('classes', parents=[system, order, check], help='number of equivalence classes')
    classes.set_defaults(handler=_rewrite_classes)

    table = commands.add_parser('table2', parents=[order], help='class counts of the builtin systems EQ2 to EQ7')
    table.set_defaults(handler=_table2)

    conjecture = commands.add_parser('conj', help='bounded checks of open questions')
    checks = conjecture.add_subparsers(dest='conjecture', metavar='CHECK', parser_class=_ArgumentParser)
    checks.required = True

    wilf = checks.add_parser('wilf', help='distinct autocorrelation polynomials')
    wilf.add_argument('--kmax', type=_natural, default=7)
    wilf.set_defaults(handler=_conj_wilf)

    palindrome = checks.add_parser('palindrome', help='Wilf classes against prefix-palindrome sets')
    palindrome.add_argument('--kmax', type=_natural, default=7)
    palindrome.set_defaults(handler=_conj_palindrome)

    bona = checks.add_parser('bona', parents=[order], help='avoiders of every pattern against the identity')
    bona.add_argument('-k', dest='k', type=_natural, default=3, help='the pattern length')
    bona.set_defaults(handler=_conj_bona)

    mesh = checks.add_parser('mesh-p', parents=[order], help='avoiders of the mesh pattern p against the series')
    mesh.set_defaults(handler=_conj_mesh)

    compare = commands.add_parser('oeis-compare', parents=[order], help='compare a series with a b-file')
    compare.add_argument('--bfile', required=True, metavar='FILE')
    series_source = compare.add_mutually_exclusive_group(required=True)
    series_source.add_argument('-p', dest='patterns', type=_permutation, action='append', metavar='PATTERN',
                               help='compare the avoiders of these patterns')
    series_source.add_argument('--eq', metavar='NAME', help='compare the class counts of a builtin system')
    compare.set_defaults(handler=_oeis_compare)

    return parser

# endregion

# region Output Helpers


def _series_payload(series: TruncatedSeries) -> Dict[str, Any]:
    return {'variable': 'x', 'order': series.order, 'coefficients': series.rendered()}


def _order(arguments: Namespace, default: Optional[int] = None) -> int:
    if arguments.order is not None:
        return arguments.order

    return Limits.order() if default is None else default


def _system(arguments: Namespace) -> RewriteSystem:
    if arguments.eq is not None:
        return builtin_system(arguments.eq)

    return parse_rules(_read(arguments.rules), arguments.rules)


def _termination_payload(report: TerminationReport) -> Dict[str, Any]:
    return {
        'method': report.method.value,
        'verified_up_to': report.verified_up_to,
        'statistic': report.statistic,
        'certified': report.certified,
        'cycle': None if report.cycle is None else [str(permutation) for permutation in report.cycle],
        'violation': None if report.violation is None else [str(permutation) for permutation in report.violation],
    }


def _confluence_payload(report: ConfluenceReport) -> Dict[str, Any]:
    traces = [{
        'overlap': str(trace.permutation),
        'left': str(trace.left),
        'right': str(trace.right),
        'common': None if trace.common is None else str(trace.common),
        'joinable': trace.joinable,
        'cycle': None if trace.cycle is None else [str(permutation) for permutation in trace.cycle],
    } for trace in report.traces]

    counterexample = report.counterexample
    return {
        'verdict': report.verdict.value,
        'overlaps': [str(permutation) for permutation in report.overlaps],
        'traces': traces,
        'counterexample': None if counterexample is None else {
            'permutation': str(counterexample.permutation),
            'successors': [str(counterexample.left), str(counterexample.right)],
        },
    }

# endregion

# region Subcommands


def _omega(arguments: Namespace) -> Outcome:
    omega = render_poly(correlation_poly(arguments.sigma, arguments.tau))
    return {'sigma': str(arguments.sigma), 'tau': str(arguments.tau), 'omega': omega}, [omega], True


def _olap(arguments: Namespace) -> Outcome:
    overlaps = [str(permutation) for permutation in sorted(overlap_set(arguments.sigma, arguments.tau))]
    return {'sigma': str(arguments.sigma), 'tau': str(arguments.tau), 'overlaps': overlaps}, overlaps, True


def _cluster_gf(arguments: Namespace) -> Outcome:
    patterns = check_antichain(arguments.patterns)
    if arguments.alpha is None:
        digraph = build_transfer_digraph(patterns)
    else:
        digraph = build_end_in_digraph(patterns, arguments.alpha)

    if arguments.specialize is not None:
        digraph = digraph.specialize(arguments.specialize)

    function = str(digraph.cluster_gf())
    payload: Dict[str, Any] = {'patterns': [str(pattern) for pattern in patterns], 'cluster_gf': function}
    lines = [function]
    if arguments.digraph:
        edges = digraph.render()
        payload['digraph'] = edges
        lines = edges + lines

    return payload, lines, True


def _brute_force_avoiders(patterns: Sequence[Permutation], n: int) -> int:
    return sum(1 for permutation in enumerate_permutations(n, Limits.max_brute) if avoids(permutation, patterns))


def _dist(arguments: Namespace) -> Outcome:
    patterns = check_antichain(arguments.patterns)
    series = joint_distribution_series(patterns, _order(arguments))
    lines = [f'{n}: {coefficient}' for n, coefficient in enumerate(series.rendered())]
    payload: Dict[str, Any] = {'patterns': [str(pattern) for pattern in patterns], 'series': _series_payload(series)}

    passed = True
    if arguments.check is not None:
        check_ceiling('--check', arguments.check, Limits.max_brute)
        mismatches = [n for n in range(min(arguments.check, series.order) + 1)
                      if brute_force_distribution(patterns, n) != series[n]]
        passed = not mismatches
        payload['check'] = {'up_to': arguments.check, 'mismatches': mismatches}
        lines.append(f'brute force up to {arguments.check}: ' + ('match' if passed else f'mismatch at {mismatches}'))

    return payload, lines, passed


def _avoid(arguments: Namespace) -> Outcome:
    patterns = check_antichain(arguments.patterns)
    series = avoider_series(patterns, _order(arguments))
    payload: Dict[str, Any] = {'patterns': [str(pattern) for pattern in patterns], 'series': _series_payload(series)}
    lines = [str(series)]

    passed = True
    if arguments.check is not None:
        check_ceiling('--check', arguments.check, Limits.max_brute)
        values = series.integers()
        mismatches = [n for n in range(min(arguments.check, series.order) + 1)
                      if _brute_force_avoiders(patterns.patterns, n) != values[n]]
        passed = not mismatches
        payload['check'] = {'up_to': arguments.check, 'mismatches': mismatches}
        lines.append(f'brute force up to {arguments.check}: ' + ('match' if passed else f'mismatch at {mismatches}'))

    return payload, lines, passed


def _end_in(arguments: Namespace) -> Outcome:
    patterns = check_antichain(arguments.patterns)
    series = end_pattern_series(patterns, arguments.alpha, _order(arguments))
    payload = {'patterns': [str(pattern) for pattern in patterns], 'alpha': str(arguments.alpha),
               'series': _series_payload(series)}
    return payload, [str(series)], True


def _rewrite_nf(arguments: Namespace) -> Outcome:
    system = _system(arguments)
    results = []
    lines = []
    for permutation in arguments.permutations:
        result = normal_form(permutation, system)
        results.append({'permutation': str(permutation), 'normal_form': str(result.permutation),
                        'unique': result.unique, 'steps': result.steps})
        suffix = '' if result.unique else ' (strategy-dependent)'
        lines.append(f'{permutation} -> {result.permutation}{suffix}')

    return {'system': str(system), 'normal_forms': results}, lines, True


def _rewrite_check(arguments: Namespace) -> Outcome:
    system = _system(arguments)
    nmax = Limits.max_brute if arguments.nmax is None else arguments.nmax
    termination = check_termination(system, nmax, system.statistic)
    payload: Dict[str, Any] = {'system': str(system), 'termination': _termination_payload(termination)}

    if not termination.certified:
        witness = termination.cycle if termination.cycle is not None else list(termination.violation or ())
        lines = [f'termination: not verified beyond {termination.verified_up_to}, witness '
                 + ' -> '.join(str(permutation) for permutation in witness)]
        return payload, lines, False

    label = termination.statistic or termination.method.value
    lines = [f'terminating-up-to-{termination.verified_up_to} ({label}; a bounded certificate, not a proof)']

    confluence = check_local_confluence(system, termination)
    payload['confluence'] = _confluence_payload(confluence)
    lines.append(confluence.verdict.value)
    for trace in confluence.traces:
        joined = f'join at {trace.common}' if trace.joinable else 'not joinable'
        lines.append(f'  {trace.left} <- {trace.permutation} -> {trace.right}: {joined}')

    counterexample = confluence.counterexample
    if counterexample is not None:
        lines.append(f'counterexample: {counterexample.permutation} with successors {counterexample.left} and '
                     f'{counterexample.right}')

    passed = not arguments.expect_confluent or confluence.verdict is Verdict.CONFLUENT
    return payload, lines, passed


def _rewrite_classes(arguments: Namespace) -> Outcome:
    system = _system(arguments)
    series = class_count_series(system, _order(arguments))
    payload: Dict[str, Any] = {'system': str(system), 'series': _series_payload(series)}
    lines = [str(series)]

    passed = True
    if arguments.check is not None:
        check_ceiling('--check', arguments.check, min(Limits.max_brute, Limits.max_classes))
        values = series.integers()
        rows = []
        for n in range(1, min(arguments.check, series.order) + 1):
            classes = equivalence_classes_bruteforce(system, n).count
            forms = len({normal_form(permutation, system).permutation
                         for permutation in enumerate_permutations(n, Limits.max_brute)})
            rows.append({'n': n, 'classes': classes, 'normal_forms': forms, 'series': values[n]})
            passed = passed and classes == forms == values[n]
            lines.append(f'n = {n}: classes {classes}, normal forms {forms}, series {values[n]}')

        payload['check'] = rows

    return payload, lines, passed


def _table2(arguments: Namespace) -> Outcome:
    order = _order(arguments, 20)
    columns = {name: class_count_series(builtin_system(name), order).integers()[1:] for name in TABLE_SYSTEMS}

    lines = ['n ' + ' '.join(TABLE_SYSTEMS)]
    for n in range(1, order + 1):
        lines.append(f'{n} ' + ' '.join(str(columns[name][n - 1]) for name in TABLE_SYSTEMS))

    return {'order': order, 'offset': 1, 'columns': columns}, lines, True


def _conj_wilf(arguments: Namespace) -> Outcome:
    check_ceiling('--kmax', arguments.kmax, Limits.max_wilf)
    rows = []
    lines = []
    for k in range(1, arguments.kmax + 1):
        classes = wilf_autocorrelation_classes(k)
        polynomials = [render_poly(polynomial) for polynomial in classes.polynomials]
        rows.append({'k': k, 'count': classes.count, 'polynomials': polynomials})
        lines.append(f'{k} {classes.count}: {{' + ', '.join(polynomials) + '}')

    return {'classes': rows}, lines, True


def _conj_palindrome(arguments: Namespace) -> Outcome:
    rows = check_conjecture_one(arguments.kmax)
    payload = {'rows': [{'k': row.k, 'a_k': row.wilf_classes, 'b_k+1': row.palindrome_sets, 'holds': row.holds}
                        for row in rows]}
    lines = [f'k = {row.k}: a_k = {row.wilf_classes}, b_(k+1) = {row.palindrome_sets}'
             + ('' if row.holds else ' DIFFERENT') for row in rows]
    return payload, lines, all(row.holds for row in rows)


def _conj_bona(arguments: Namespace) -> Outcome:
    report = check_bona(arguments.k, _order(arguments, 12))
    violations = [{'pattern': str(violation.pattern), 'n': violation.n, 'avoiders': violation.avoiders,
                   'identity_avoiders': violation.identity_avoiders} for violation in report.violations]
    payload = {'k': report.k, 'nmax': report.nmax, 'holds': report.holds, 'violations': violations}
    lines = [f'{tau}: ' + ' '.join(str(value) for value in values) for tau, values in sorted(report.counts.items())]
    lines.append('holds' if report.holds else f'{len(violations)} violations, first {report.violations[0]!r}')
    return payload, lines, report.holds


def _conj_mesh(arguments: Namespace) -> Outcome:
    rows = mesh_p_series_check(_order(arguments, 8))
    payload = {'rows': [{'n': row.n, 'count': row.count, 'coefficient': row.coefficient, 'holds': row.holds}
                        for row in rows]}
    lines = [f'{row.n} {row.count} {row.coefficient}' + ('' if row.holds else ' DIFFERENT') for row in rows]
    return payload, lines, all(row.holds for row in rows)


def _oeis_compare(arguments: Namespace) -> Outcome:
    bfile = parse_bfile(_read(arguments.bfile))
    order = _order(arguments)
    if arguments.eq is not None:
        series = class_count_series(builtin_system(arguments.eq), order)
    else:
        series = avoider_series(check_antichain(arguments.patterns), order)

    report = oeis_compare(series, bfile)
    first, last = report.indices
    mismatch = report.first_mismatch
    payload = {
        'matches': report.matches,
        'first_index': first,
        'last_index': last,
        'terms': len(report.comparisons),
        'mismatch': None if mismatch is None else {'index': mismatch.index, 'expected': mismatch.expected,
                                                   'actual': mismatch.actual},
    }
    if mismatch is None:
        lines = [f'match on indices {first} to {last}']
    else:
        lines = [f'mismatch at index {mismatch.index}: expected {mismatch.expected}, got {mismatch.actual}']

    return payload, lines, report.matches

# endregion

# region Entry Points


def _apply_limits(arguments: Namespace) -> Dict[str, int]:
    """
        Set the limits given on the command line.

        :return: The previous values of the changed limits.
    """

    previous = {}
    for name in ('max_brute', 'max_classes', 'max_wilf'):
        value = getattr(arguments, name)
        if value is None:
            continue

        previous[name] = getattr(Limits, name)
        if value > previous[name]:
            logger.warning('Raising %s from %d to %d; computations may take very long', name, previous[name], value)

        setattr(Limits, name, value)

    return previous


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
        Execute one invocation.

        :param argv: The arguments, without the program name.
        :param stdout: The stream for the output. Defaults to the standard output.
        :param stderr: The stream for error messages. Defaults to the standard error.
        :return: The exit code.
    """

    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    try:
        arguments = _build_parser().parse_args(list(argv))
    except UsageError as error:
        print(f'error: {error}', file=stderr)
        return EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if arguments.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')

    previous = _apply_limits(arguments)
    handler: Callable[[Namespace], Outcome] = arguments.handler
    try:
        payload, lines, passed = handler(arguments)
    except HertzsprungError as error:
        print(f'error: {error}', file=stderr)
        return EXIT_USAGE
    finally:
        for name, value in previous.items():
            setattr(Limits, name, value)

    if arguments.json:
        print(json.dumps(payload, sort_keys=True), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)

    return EXIT_SUCCESS if passed else EXIT_MISMATCH


def main() -> None:
    """
        The console entry point.
    """
    sys.exit(run(sys.argv[1:]))

# endregion
