"""
Command-line front end.

    qhecke.py expand fabc --a 3 --b 2 --c 3 --x q^2 --y q^2 --order 20
    qhecke.py expand appell --x q^1 --z=-q^0 --base 3
    qhecke.py verify main:1,1,2 --order 30
    qhecke.py verify --prefix theta- --order 100 --workers 4
    qhecke.py verify --all --format json

Exit codes: 0 when every mandatory identity is EQUAL, 1 when one is not,
2 on usage errors and on builder errors during expand. Negative monomials
are passed with "=" (--y=-q^1) so they are not read as options.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, Optional, Sequence

from cli.serialization import report_to_text, reports_to_json, series_to_json, series_to_text
from habiro.habiro_series import HabiroSpec, habiro_hecke_side, habiro_series
from harness.identity_catalog import run_identity
from harness.suite_runner import SuiteRunner, summarize
from hecke.hecke_sums import HeckeParams, hecke_f_monomial, main_rhs_monomial
from qfunctions.monomial import XYMonomial
from qfunctions.special_functions import appell_m, false_theta_sum, phi_sixth, theta_jtp
from series.errors import QSeriesError
from series.exact_series import QSeries

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_ORDER = 50


class UsageError(Exception):
    """A target was requested without the parameters it needs"""


def _monomial_arg(text: str) -> XYMonomial:
    try:
        return XYMonomial.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f'--{name}' for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"target {args.target!r} needs {', '.join(missing)}")


def _hecke_params(args: argparse.Namespace) -> HeckeParams:
    _require(args, 'a', 'b', 'c')
    return HeckeParams(args.a, args.b, args.c)


def _expand_fabc(args: argparse.Namespace) -> QSeries:
    params = _hecke_params(args)
    _require(args, 'x', 'y')
    return hecke_f_monomial(params, args.x, args.y, args.order)


def _expand_main_rhs(args: argparse.Namespace) -> QSeries:
    params = _hecke_params(args)
    _require(args, 'x', 'y')
    return main_rhs_monomial(params, args.x, args.y, args.order)


def _expand_theta(args: argparse.Namespace) -> QSeries:
    _require(args, 'x')
    return theta_jtp(args.x, args.base, args.order)


def _expand_false_theta(args: argparse.Namespace) -> QSeries:
    _require(args, 'x')
    return false_theta_sum(args.x, args.base, args.order)


def _expand_appell(args: argparse.Namespace) -> QSeries:
    _require(args, 'x', 'z')
    return appell_m(args.x, args.z, args.base, args.order)


def _expand_phi(args: argparse.Namespace) -> QSeries:
    return phi_sixth(args.order)


def _habiro_spec(args: argparse.Namespace) -> HabiroSpec:
    _require(args, 'family', 'p')
    return HabiroSpec(args.family, args.p)


def _expand_habiro(args: argparse.Namespace) -> QSeries:
    return habiro_series(_habiro_spec(args), args.order)


def _expand_habiro_hecke(args: argparse.Namespace) -> QSeries:
    return habiro_hecke_side(_habiro_spec(args), args.order)


EXPAND_TARGETS: Dict[str, Callable[[argparse.Namespace], QSeries]] = {
    'fabc': _expand_fabc,
    'theta': _expand_theta,
    'false-theta': _expand_false_theta,
    'appell': _expand_appell,
    'phi': _expand_phi,
    'habiro': _expand_habiro,
    'habiro-hecke': _expand_habiro_hecke,
    'main-rhs': _expand_main_rhs,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qhecke',
        description='Expand Hecke-type double sums, theta and Appell functions, '
                    'and verify the identities between them')
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--order', type=int, default=DEFAULT_ORDER,
                        help=f'Check or expand through q^ORDER (default: {DEFAULT_ORDER})')
    common.add_argument('--format', choices=['text', 'json'], default='text',
                        help='Output format (default: text)')
    common.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Logging level for stderr (default: WARNING)')

    expand = subparsers.add_parser('expand', parents=[common], help='Expand one q-series')
    expand.add_argument('target', choices=sorted(EXPAND_TARGETS))
    for name in ('a', 'b', 'c', 'family', 'p'):
        expand.add_argument(f'--{name}', type=int)
    for name in ('x', 'y', 'z'):
        expand.add_argument(f'--{name}', type=_monomial_arg, help='monomial literal such as q^2 or -q^-1')
    expand.add_argument('--base', type=_positive_int, default=1, help='p in q^p for theta, false-theta and appell')

    verify = subparsers.add_parser('verify', parents=[common], help='Verify catalog identities')
    verify.add_argument('identity', nargs='?', help='identity id, e.g. main:1,1,2')
    selection = verify.add_mutually_exclusive_group()
    selection.add_argument('--all', action='store_true', help='Run the whole catalog over its default grids')
    selection.add_argument('--prefix', help='Run the default-grid identities whose id starts with PREFIX')
    verify.add_argument('--workers', type=_positive_int, default=1, help='Worker processes for suites (default: 1)')
    return parser


def cmd_expand(args: argparse.Namespace) -> int:
    series = EXPAND_TARGETS[args.target](args)
    print(series_to_json(series) if args.format == 'json' else series_to_text(series))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.identity and (args.all or args.prefix):
        raise UsageError("give either an identity id or --all/--prefix, not both")
    if args.identity:
        reports = [run_identity(args.identity, args.order)]
    elif args.all or args.prefix:
        runner = SuiteRunner({'order': args.order, 'max_workers': args.workers})
        reports = runner.run_suite(args.prefix)
    else:
        raise UsageError("verify needs an identity id, --all or --prefix")

    if args.format == 'json':
        print(reports_to_json(reports))
    else:
        for report in reports:
            print(report_to_text(report))
        if len(reports) > 1:
            print()
            print(summarize(reports).to_string(index=False))
    return EXIT_FAILED if any(r.counts_as_failure for r in reports) else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(stream=sys.stderr, level=getattr(logging, args.log_level),
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    if args.order < 0:
        print(f"error: --order must be nonnegative, got {args.order}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == 'expand':
            return cmd_expand(args)
        return cmd_verify(args)
    except (UsageError, QSeriesError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
