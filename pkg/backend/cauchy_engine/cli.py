"""
Command line surface.

Subcommands: gamma, trig, identity, period, verify, representer, bridge
and errata. Tables go to stdout as CSV (reports as 'key: value' text),
diagnostics to stderr. Exit codes: 0 success or pass, 1 failed
verification or computation, 2 usage or parse error.
"""

import argparse
import logging
import math
import sys
from typing import Dict, List, Optional, Sequence, TextIO, Tuple

from . import api
from .config import GridSpec, configure_logging, sum_exclusion, verbosity_to_level, resolve
from .errors import CauchyEngineError, ConfigError, ExprSyntaxError, UsageError
from .expr import eval_expr, free_names, parse, parse_param, to_function, to_function2
from .families import CauchyFamily, EquationKind
from .gamma import Generator
from .representers import RepresenterKind
from .verify import Period
from .writer import write_csv, write_text, write_text_table

logger = logging.getLogger(__name__)

Outcome = Tuple[object, Optional[bool]]


class _ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of printed."""

    def error(self, message):
        raise UsageError(message)


def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise UsageError(f"expected comma separated numbers, got {text!r}") from None


def _params(args) -> Dict[str, float]:
    return dict(parse_param(p) for p in args.param or [])


def _grid(args, default: GridSpec) -> GridSpec:
    return GridSpec.parse(args.grid) if args.grid else default


def _points(args, default: GridSpec) -> List[float]:
    if getattr(args, 'points', None):
        return _float_list(args.points)
    return [float(v) for v in _grid(args, default).points()]


def _function(source: str, params: Dict[str, float], variable: str = 'x'):
    expr = parse(source)
    unknown = free_names(expr) - {variable} - set(params)
    if unknown:
        raise UsageError(f"unknown name(s) in {source!r}: {', '.join(sorted(unknown))}")
    return to_function(expr, variable, params)


def _period(source: str, params: Dict[str, float]) -> Period:
    """A period expression; constant unless it mentions x or y."""
    expr = parse(source)
    names = free_names(expr) - set(params)
    unknown = names - {'x', 'y'}
    if unknown:
        raise UsageError(f"unknown name(s) in period {source!r}: {', '.join(sorted(unknown))}")
    if names:
        return Period.of(to_function2(expr, params), source)
    return Period.const(eval_expr(expr, 0.0, bindings=params))


def _equation(name: str) -> EquationKind:
    return EquationKind.SINE_ADDITION if name == 'S' else EquationKind.COSINE_ADDITION


# Subcommand handlers; each returns (rows or report, pass flag or None)

def _cmd_gamma(args, params) -> Outcome:
    kind = args.generator
    if kind == 'neglog':
        gen = Generator.neg_log()
    elif kind == 'exp':
        gen = Generator.exponential(params.get('a', math.e))
    elif kind == 'add':
        gen = Generator.additive(params.get('c', 2.0))
    elif kind == 'log':
        gen = Generator.logarithmic(params.get('c', -1.0))
    elif kind == 'pow':
        gen = Generator.multiplicative(params.get('p', 1.0))
    else:
        if not args.expr:
            raise UsageError("--generator custom needs --expr")
        _function(args.expr, params, 't')
        gen = Generator.custom(args.expr, params)
    return api.gamma_table(gen, api.frange(args.start, args.stop, args.step), args.tolerances), None


def _cmd_trig(args, params) -> Outcome:
    return api.trig_table(_points(args, GridSpec(0.05, 3.1, 50)), args.tolerances), None


def _cmd_identity(args, params) -> Outcome:
    rows = api.identity_table(args.check, _points(args, GridSpec(0.05, 3.1, 50)))
    return rows, api.all_within(rows, 'residual', args.tol)


def _cmd_period(args, params) -> Outcome:
    if args.at:
        point = _float_list(args.at)
        if len(point) not in (1, 2):
            raise UsageError(f"--at needs x or x,y, got {args.at!r}")
        params = {**params, **dict(zip(('x', 'y'), point))}
    return api.period_table(args.kind, params, args.form, args.tolerances), None


def _cmd_verify(args, params) -> Outcome:
    f = _function(args.f, params)
    g = _function(args.g, params) if args.g else None
    period = _period(args.period, params) if args.period else None
    if (g is None) == (period is None):
        raise UsageError("give exactly one of --g and --period")
    grid = _grid(args, GridSpec.default())
    if period is not None and not period.is_constant:
        grid = grid.with_exclusion(sum_exclusion(args.tolerances.singular_margin), "|x+y| >= margin")
    report = api.verify_and_classify(f, g, period, _equation(args.equation), grid, args.tol,
                                     args.base, not args.no_classify, args.tolerances)
    return api.verification_summary(report), report.passed


def _cmd_representer(args, params) -> Outcome:
    makers = {
        'additive': (CauchyFamily.additive, 'c', 1.0),
        'exponential': (CauchyFamily.exponential, 'a', 2.0),
        'logarithmic': (CauchyFamily.logarithmic, 'c', 1.0),
        'multiplicative': (CauchyFamily.multiplicative, 'p', 2.0),
    }
    make, name, default = makers[args.family]
    fam = make(params.get(name, default))
    kind = RepresenterKind.sine() if args.kind == 'sine' else RepresenterKind.cosine(args.sign)
    default_grid = GridSpec.default() if fam.domain.contains(-1.0) else GridSpec(1.5, 5.0, 25)
    return api.representer_table(fam, kind, _points(args, default_grid), args.tolerances), None


def _cmd_bridge(args, params) -> Outcome:
    f = _function(args.f, params)
    period = _period(args.period, params)
    report = api.bridge_summary(f, period, _equation(args.equation), _grid(args, GridSpec(0.5, 4.0, 10)),
                                args.base, args.tol, args.tolerances)
    return report, report['agree']


def _cmd_errata(args, params) -> Outcome:
    return api.errata_rows(args.tolerances), None


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument('--tol', type=float, default=1e-9,
                        help='Pass threshold for residuals (default: 1e-9)')
    common.add_argument('--grid', help='Sample grid lo:hi:n')
    common.add_argument('--param', action='append', metavar='NAME=VALUE',
                        help='Bind a parameter (repeatable)')
    common.add_argument('--format', choices=['csv', 'text'],
                        help='Output format (default: csv for tables, text for reports)')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG logging on stderr')

    parser = _ArgumentParser(
        prog='cauchy_engine',
        description="Generalized Gamma functions, Gamma-form trigonometry and "
                    "period functions of sine/cosine addition laws",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m cauchy_engine gamma --generator neglog --from 1 --to 5 --step 0.5
  python -m cauchy_engine verify --f "2^x" --period -1 --equation S --grid -3:3:25
  python -m cauchy_engine identity --check pythagoras --points 0.3,1.0,2.2
  python -m cauchy_engine period --kind additive-C --param c=4 --at 1,1
  python -m cauchy_engine errata
        """
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('gamma', parents=[common], help='Gamma_phi by quadrature vs closed form')
    p.add_argument('--generator', default='neglog',
                   choices=['neglog', 'exp', 'add', 'log', 'pow', 'custom'])
    p.add_argument('--expr', help='Generator phi(t) for --generator custom')
    p.add_argument('--from', dest='start', type=float, default=1.0)
    p.add_argument('--to', dest='stop', type=float, default=5.0)
    p.add_argument('--step', type=float, default=0.5)
    p.set_defaults(handler=_cmd_gamma)

    p = sub.add_parser('trig', parents=[common], help='Gamma-form sin, cos and tan')
    p.add_argument('--points', help='Comma separated points (overrides --grid)')
    p.set_defaults(handler=_cmd_trig)

    p = sub.add_parser('identity', parents=[common], help='Euler/Pythagorean/product residuals')
    p.add_argument('--check', required=True, choices=list(api.IDENTITY_CHECKS))
    p.add_argument('--points', help='Comma separated points (overrides --grid)')
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser('period', parents=[common], help='Period and scaleability functions')
    p.add_argument('--kind', required=True, choices=list(api.PERIOD_KINDS))
    p.add_argument('--form', default='fg', choices=['fg', 'gf'],
                   help='Exponential (C) pair form (default: fg)')
    p.add_argument('--at', metavar='X[,Y]', help='Evaluation point x or x,y')
    p.set_defaults(handler=_cmd_period)

    p = sub.add_parser('verify', parents=[common], help='Verify an (S) or (C) pair on a grid')
    p.add_argument('--f', required=True, help='f(x)')
    p.add_argument('--g', help='Partner g(x)')
    p.add_argument('--period', help='Period T, constant or in x and y')
    p.add_argument('--equation', default='S', choices=['S', 'C'])
    p.add_argument('--base', default='f', choices=['f', 'g'],
                   help='Which member --f is when a period is given (default: f)')
    p.add_argument('--no-classify', action='store_true', help='Skip pair classification')
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser('representer', parents=[common], help='Representers and their periods')
    p.add_argument('--family', required=True,
                   choices=['additive', 'exponential', 'logarithmic', 'multiplicative'])
    p.add_argument('--kind', default='sine', choices=['sine', 'cosine'])
    p.add_argument('--sign', type=int, default=1, choices=[1, -1])
    p.add_argument('--points', help='Comma separated points (overrides --grid)')
    p.set_defaults(handler=_cmd_representer)

    p = sub.add_parser('bridge', parents=[common], help='Scaling <-> translation bridge')
    p.add_argument('--f', required=True, help='f(x)')
    p.add_argument('--period', required=True, help='Period T, constant or in x and y')
    p.add_argument('--equation', default='S', choices=['S', 'C'])
    p.add_argument('--base', default='f', choices=['f', 'g'])
    p.set_defaults(handler=_cmd_bridge)

    p = sub.add_parser('errata', parents=[common], help='Published formulas vs re-derivations')
    p.set_defaults(handler=_cmd_errata)
    return parser


def _emit(result, fmt: Optional[str], out: TextIO) -> None:
    if isinstance(result, dict):
        if fmt == 'csv':
            write_csv([result], out)
        else:
            write_text(result, out)
    elif fmt == 'text':
        write_text_table(result, out)
    else:
        write_csv(result, out)


_VALUE_OPTIONS = frozenset({'--grid', '--period', '--at', '--points', '--f', '--g', '--expr',
                            '--param', '--tol', '--from', '--to', '--step'})


def _attach_values(argv: Sequence[str]) -> List[str]:
    """
    Glue a value that starts with '-' to its option as --opt=value.

    argparse reads "--grid -3:3:25" or "--period -1" as two options.
    """
    tokens = list(argv)
    joined: List[str] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if (token in _VALUE_OPTIONS and i + 1 < len(tokens)
                and tokens[i + 1].startswith('-') and not tokens[i + 1].startswith('--')
                and tokens[i + 1].rstrip('v') != '-'):
            joined.append(f"{token}={tokens[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def cli_main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    """Run the CLI and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _attach_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(verbosity_to_level(args.verbose))
    try:
        if not args.tol > 0:
            raise ConfigError(f"--tol must be positive, got {args.tol}")
        args.tolerances = resolve(None).replace(residual_pass=args.tol)
        params = _params(args)
        result, passed = args.handler(args, params)
    except (UsageError, ExprSyntaxError, ConfigError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except CauchyEngineError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ArithmeticError as exc:
        err.write(f"error: {exc}\n")
        return 1

    _emit(result, args.format, out)
    if passed is False:
        err.write("error: verification failed\n")
        return 1
    return 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == '__main__':
    main()
