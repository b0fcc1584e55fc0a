"""Command-line surface: class, multiply, puzzles, lattice and verify."""
import argparse
import json
import logging
import sys
from typing import Dict, List, Optional

from segre_puzzles import classes, config, gkm, lattice, puzzles, tasks
from segre_puzzles.symcore import SegreError, VerificationError, format_rational, kpicture, parse_rational, rf_equals
from segre_puzzles.weyl import ThetaShape, all_strings, check_string, parse_shape

METHOD_SOLVE = 'solve'
METHOD_PUZZLES = 'puzzles'
METHOD_BOTH = 'both'


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='segre_puzzles', description='Deformed motivic Segre classes and puzzles.')
    parser.add_argument('--format', choices=('text', 'json'), default='text')
    parser.add_argument('--workers', type=int, default=None, help='suite fan-out width (SEGRE_WORKERS)')
    verbs = parser.add_subparsers(dest='verb', required=True)

    cls = verbs.add_parser('class', help='fixed-point restrictions of one class')
    cls.add_argument('--shape', required=True)
    cls.add_argument('--lambda', dest='lam', required=True)
    cls.add_argument('--picture', choices=(config.PICTURE_K, config.PICTURE_CONNECTIVE), default=config.PICTURE_K)
    cls.add_argument('--chern', action='store_true', help='St classes instead of S classes')
    cls.add_argument('--beta', default=None, help='value substituted for b')
    cls.add_argument('--q', default=None, help='value substituted for q (xq in the connective picture)')

    multiply = verbs.add_parser('multiply', help='structure constants of a product')
    multiply.add_argument('--shape', required=True)
    multiply.add_argument('--lambda', dest='lam', required=True)
    multiply.add_argument('--mu', required=True)
    multiply.add_argument('--method', choices=(METHOD_SOLVE, METHOD_PUZZLES, METHOD_BOTH), default=METHOD_SOLVE)
    multiply.add_argument('--unhomogenized', action='store_true', help='print c instead of c-bar')

    puzzle = verbs.add_parser('puzzles', help='puzzle fillings and their fugacities')
    puzzle.add_argument('--lambda', dest='lam', required=True)
    puzzle.add_argument('--mu', required=True)
    puzzle.add_argument('--nu', default=None)
    puzzle.add_argument('--picture', choices=(config.PICTURE_K, config.PICTURE_CONNECTIVE), default=config.PICTURE_K)
    puzzle.add_argument('--render', action='store_true')

    grid = verbs.add_parser('lattice', help='partition function and restrictions')
    grid.add_argument('--lambda', dest='lam', required=True)
    grid.add_argument('--point', default=None, help='only the restriction at this fixed point')

    verify = verbs.add_parser('verify', help='run a verification suite')
    verify.add_argument('--suite', choices=config.SUITES + (config.SUITE_ALL,), default=config.SUITE_ALL)
    verify.add_argument('--n', type=int, default=config.SUITE_MAX_N)
    verify.add_argument('--shape', action='append', dest='shapes', default=None, help='gkm shape, repeatable')
    return parser


def _bindings(args, table) -> Dict:
    bindings = {}
    if args.beta is not None:
        bindings[config.SYMBOL_BETA] = parse_rational(args.beta, table)
    if args.q is not None:
        symbol = config.SYMBOL_Q if config.SYMBOL_Q in table else config.SYMBOL_XQ
        bindings[symbol] = parse_rational(args.q, table)
    return bindings


def command_class(args) -> dict:
    shape = parse_shape(args.shape)
    check_string(args.lam, shape)
    if args.picture == config.PICTURE_K:
        family = classes.chern_basis(shape) if args.chern else classes.unhomogenized(classes.build_basis(shape))
    else:
        family = gkm.connective_chern(shape) if args.chern else gkm.connective_basis(shape)
    cls = family[args.lam]
    bindings = _bindings(args, cls.table)
    if bindings:
        cls = classes.specialize_class(cls, bindings)
    return {'shape': str(shape), 'lambda': args.lam, 'restrictions': cls.as_dict()}


def command_multiply(args) -> dict:
    shape = parse_shape(args.shape)
    check_string(args.lam, shape)
    check_string(args.mu, shape)
    table = kpicture(shape.n)
    solved = None
    counted = None
    if args.method in {METHOD_SOLVE, METHOD_BOTH}:
        solved = classes.structure_constants(args.lam, args.mu, classes.build_basis(shape))
    if args.method in {METHOD_PUZZLES, METHOD_BOTH}:
        counted = puzzles.puzzle_constants(shape, args.lam, args.mu)
    if solved is not None and counted is not None:
        for nu in all_strings(shape):
            if not rf_equals(solved[nu], counted[nu]):
                raise VerificationError('{0}*{1}->{2}: {3} != {4}'.format(
                    args.lam, args.mu, nu, format_rational(solved[nu], table), format_rational(counted[nu], table),
                ))
    constants = solved if solved is not None else counted
    if args.unhomogenized:
        constants = {
            nu: classes.unhomogenize(value, args.lam, args.mu, nu, table) for nu, value in constants.items()
        }
    return {
        'shape': str(shape),
        'lambda': args.lam,
        'mu': args.mu,
        'method': args.method,
        'constants': {nu: format_rational(value, table) for nu, value in constants.items()},
    }


def command_puzzles(args) -> dict:
    shape = _grassmannian_of(args.lam)
    check_string(args.mu, shape)
    targets = [check_string(args.nu, shape)] if args.nu else list(all_strings(shape))
    table = puzzles.catalog(args.picture, len(args.lam)).table
    payload = {}
    for nu in targets:
        fillings = puzzles.enumerate_puzzles(args.lam, args.mu, nu)
        entries = []
        for filling in fillings:
            entry = {'fugacity': format_rational(puzzles.fugacity(filling, args.picture), table)}
            if args.render:
                entry['diagram'] = puzzles.render(filling)
            entries.append(entry)
        payload[nu] = {
            'count': len(fillings),
            'constant': format_rational(puzzles.puzzle_constant(args.lam, args.mu, nu, args.picture), table),
            'puzzles': entries,
        }
    return payload


def _grassmannian_of(string: str) -> ThetaShape:
    shape = parse_shape('{0},{1}'.format(string.count('1'), len(string)))
    check_string(string, shape)
    return shape


def command_lattice(args) -> dict:
    shape = _grassmannian_of(args.lam)
    table = kpicture(shape.n)
    if args.point:
        check_string(args.point, shape)
        points = [args.point]
        payload = {'shape': str(shape), 'lambda': args.lam}
    else:
        points = list(all_strings(shape))
        payload = {
            'shape': str(shape),
            'lambda': args.lam,
            'partition_function': format_rational(lattice.partition_function(args.lam, shape), table),
        }
    payload['restrictions'] = {
        point: format_rational(lattice.restrict(args.lam, point), table) for point in points
    }
    return payload


def _text(payload, indent: int = 0) -> List[str]:
    lines = []
    prefix = '  ' * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append('{0}{1}:'.format(prefix, key))
            lines.extend(_text(value, indent + 1))
        elif isinstance(value, list):
            lines.append('{0}{1}:'.format(prefix, key))
            for entry in value:
                if isinstance(entry, dict):
                    lines.extend(_text(entry, indent + 1))
                else:
                    lines.append('{0}  {1}'.format(prefix, entry))
        else:
            lines.append('{0}{1}: {2}'.format(prefix, key, value))
    return lines


def _report_text(report) -> List[str]:
    lines = []
    for result in report.results:
        if not result.asserted:
            status = 'NOTE'
        else:
            status = config.MESSAGE_PASS.upper() if result.passed else config.MESSAGE_FAIL
        line = '{0} {1}'.format(status, result.name)
        if result.detail:
            line = '{0} [{1}]'.format(line, result.detail)
        lines.append(line)
    asserted = [result for result in report.results if result.asserted]
    lines.append(config.MESSAGE_SUITE.format(
        name=report.name, passed=len(asserted) - len(report.failures), total=len(asserted),
    ))
    return lines


def _emit(payload, output_format: str, text_lines: Optional[List[str]] = None) -> None:
    if output_format == 'json':
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + '\n')
        return
    sys.stdout.write('\n'.join(text_lines if text_lines is not None else _text(payload)) + '\n')


COMMANDS = {
    'class': command_class,
    'multiply': command_multiply,
    'puzzles': command_puzzles,
    'lattice': command_lattice,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, dispatch the verb and print its output.

    Args:
        argv (list): arguments without the program name, defaults to sys.argv[1:].

    Returns:
        int: 0 on success, 1 on a failed verification, 2 on a usage error.
    """
    config.configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return config.EXIT_OK if not exc.code else config.EXIT_USAGE
    try:
        if args.verb == 'verify':
            shapes = args.shapes or config.DEFAULT_GKM_SHAPES
            report = tasks.run_suite(args.suite, args.workers, args.n, shapes)
            _emit(report.as_dict(), args.format, _report_text(report))
            return config.EXIT_OK if report.passed else config.EXIT_FAILED
        _emit(COMMANDS[args.verb](args), args.format)
    except VerificationError as exc:
        logging.warning(str(exc))
        sys.stderr.write('{0}\n'.format(exc))
        return config.EXIT_FAILED
    except SegreError as exc:
        logging.warning(str(exc))
        sys.stderr.write('{0}\n'.format(exc))
        return config.EXIT_USAGE
    return config.EXIT_OK
