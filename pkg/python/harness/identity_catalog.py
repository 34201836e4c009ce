"""
Named identities and the parameter grids they are checked over.

An identity id is the entry name, optionally followed by ':' and its
parameters separated by ',' or ':', e.g. "main:1,1,2", "jtp:-q^3,2" or
"mabc:1,2,1:q^2,-q^3". Each entry builds its two sides to the requested
order; run_identity compares them and always returns a report.
"""

import logging
import re
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from habiro.habiro_series import HabiroSpec, habiro_hecke_side, habiro_series
from hecke.hecke_sums import (HeckeParams, f121_appell_part, f121_rhs_monomial, hecke_f_bivariate,
                              hecke_f_monomial, hecke_half_sum_bivariate, mabc_monomial,
                              main_rhs_bivariate, main_rhs_half_bivariate, main_rhs_monomial)
from harness.comparator import IdentityReport, compare_q, compare_xy
from qfunctions.monomial import XYMonomial, q_pow
from qfunctions.special_functions import (appell_m, false_theta_sum, phi_sixth, poch_inf, theta_jtp,
                                          theta_product, times_monomial)
from series.bivariate import BivariateQSeries
from series.errors import ParameterError, QSeriesError, UnknownIdentity
from series.exact_series import QSeries, ensure_order
from series.windows import binom2

logger = logging.getLogger(__name__)

Sides = Tuple[Any, Any]

F121 = HeckeParams(1, 2, 1)
MINUS_ONE = XYMonomial(-1, 0)

MONOMIAL_GRID = [XYMonomial(sign, m) for m in range(-4, 5) for sign in (1, -1)]
F121_PAIRS = [('q^1', 'q^1'), ('q^1', '-q^1'), ('q^2', 'q^1'), ('q^1', 'q^2'), ('-q^1', 'q^2'), ('q^2', '-q^3')]
HELPING_X = ['-q^1', 'q^2', '-q^-1']
MAIN_MONOMIAL_TRIPLES = [(1, 1, 2), (2, 1, 1), (3, 2, 3), (5, 2, 3)]
MAIN_MONOMIAL_XY = ['q^0', '-q^1', 'q^2', '-q^3']


def _negative_discriminant_triples() -> List[Tuple[int, int, int]]:
    return [(a, b, c) for a, b, c in product(range(1, 6), repeat=3) if b * b < a * c]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    parse: Callable[[Sequence[str]], tuple]
    build: Callable[..., Sides]
    grid: Callable[[], List[str]]
    experiment: bool = False


_CONVERTERS = {'int': int, 'monomial': XYMonomial.parse}


def _params(*kinds: str, defaults: tuple = ()) -> Callable[[Sequence[str]], tuple]:
    """Parser for positional parameters; the last len(defaults) are optional"""
    required = len(kinds) - len(defaults)

    def parse(args: Sequence[str]) -> tuple:
        if not required <= len(args) <= len(kinds):
            raise ValueError(f"expected {required}..{len(kinds)} parameters, got {len(args)}")
        values = [_CONVERTERS[kind](arg.strip()) for kind, arg in zip(kinds, args)]
        values.extend(defaults[len(values) - required:])
        return tuple(values)

    return parse


def _ids(name: str, rows) -> List[str]:
    return [f"{name}:{','.join(str(v) for v in row)}" for row in rows]


# -- builders ------------------------------------------------------------------
# each returns (lhs, rhs) exact through q^order

def _main(order: int, a: int, b: int, c: int) -> Sides:
    params = HeckeParams(a, b, c)
    return hecke_f_bivariate(params, order), main_rhs_bivariate(params, order)


def _mirror(order: int, a: int, b: int, c: int) -> Sides:
    params = HeckeParams(a, b, c)
    return hecke_f_bivariate(params, order).swap_xy(), hecke_f_bivariate(params.mirrored(), order)


def _main_monomial(order: int, a: int, b: int, c: int, x: XYMonomial, y: XYMonomial) -> Sides:
    params = HeckeParams(a, b, c)
    return hecke_f_monomial(params, x, y, order), main_rhs_monomial(params, x, y, order)


def _main_half(order: int, a: int, b: int, c: int) -> Sides:
    params = HeckeParams(a, b, c)
    return main_rhs_half_bivariate(params, order), hecke_half_sum_bivariate(params, order)


def _f121_qq(order: int) -> Sides:
    return hecke_f_monomial(F121, q_pow(1), q_pow(1), order), poch_inf(q_pow(1), order) ** 2


def _f121_q_minus_q(order: int) -> Sides:
    lhs = hecke_f_monomial(F121, q_pow(1), q_pow(1, -1), order)
    return lhs, theta_jtp(q_pow(1, -1), 4, order) * phi_sixth(order)


def _f121_general(order: int, x: XYMonomial, y: XYMonomial) -> Sides:
    return hecke_f_monomial(F121, x, y, order), f121_rhs_monomial(x, y, order)


def _mabc(order: int, a: int, b: int, c: int, x: XYMonomial, y: XYMonomial) -> Sides:
    params = HeckeParams(a, b, c)
    if params.D > 0 and params != F121:
        raise ParameterError(f"only (1,2,1) has an Appell-only expansion to compare against, got ({params})")
    return mabc_monomial(params, x, y, MINUS_ONE, MINUS_ONE, order), f121_appell_part(x, y, order)


def _phi_appell(order: int) -> Sides:
    return phi_sixth(order), appell_m(q_pow(1), MINUS_ONE, 3, order).scale(2)


def _jtp(order: int, x: XYMonomial, p: int) -> Sides:
    return theta_jtp(x, p, order), theta_product(x, p, order)


def _theta_inv(order: int, x: XYMonomial, p: int) -> Sides:
    return theta_jtp(XYMonomial(x.sign, p - x.qexp), p, order), theta_jtp(x, p, order)


def _theta_ell(order: int, x: XYMonomial, n: int, p: int) -> Sides:
    # Theta(q^(pn) x; q^p) = (-1)^n x^-n q^(-p*binom(n,2)) Theta(x; q^p)
    factor = MINUS_ONE ** n * x ** (-n)
    rhs = ensure_order(lambda w: times_monomial(factor, theta_jtp(x, p, w), -p * binom2(n)), order)
    return theta_jtp(x.shift(p * n), p, order), rhs


def _theta_zero(order: int, n: int, p: int) -> Sides:
    return theta_jtp(q_pow(p * n), p, order), QSeries.zero(order)


def _theta_euler(order: int, k: int) -> Sides:
    if k not in (1, 2):
        raise ParameterError(f"Theta(q^k; q^3) = (q)_inf holds for k = 1, 2, got k={k}")
    return theta_jtp(q_pow(k), 3, order), poch_inf(q_pow(1), order)


def _helping(order: int, a: int, b: int, t: int, r: int, x: XYMonomial) -> Sides:
    # Theta(q^(b(ar+t)) x; q^a) = (-x)^(-br) q^(-t b^2 r) q^(-a*binom(br,2)) Theta(q^(bt) x; q^a)
    if a < 1 or b < 1:
        raise ParameterError(f"helping identity needs positive a, b, got a={a}, b={b}")
    factor = (-x) ** (-b * r)
    extra = -t * b * b * r - a * binom2(b * r)
    rhs = ensure_order(lambda w: times_monomial(factor, theta_jtp(x.shift(b * t), a, w), extra), order)
    return theta_jtp(x.shift(b * (a * r + t)), a, order), rhs


def _h12_example(order: int) -> Sides:
    rhs = false_theta_sum(q_pow(-7, -1), 15, order) + false_theta_sum(q_pow(-2, -1), 15, order).shift(1)
    return habiro_hecke_side(HabiroSpec(2, 1), order), rhs.truncate(order)


# (prefactor exponent, prefactor sign, theta argument, theta base, false-theta argument, false-theta base)
_H22_TERMS = [
    (0, 1, 3, 5, -26, 55),
    (5, -1, 2, 5, -4, 55),
    (11, 1, 4, 5, 7, 55),
    (19, 1, 1, 5, 18, 55),
    (0, 1, 2, 3, -16, 33),
    (2, 1, 1, 3, -5, 33),
]


def _h22_example(order: int) -> Sides:
    def build(working: int) -> QSeries:
        total = QSeries.zero(working)
        for shift, sign, theta_arg, theta_base, false_arg, false_base in _H22_TERMS:
            term = theta_jtp(q_pow(theta_arg), theta_base, working) * \
                false_theta_sum(q_pow(false_arg, -1), false_base, working)
            total = total + times_monomial(q_pow(shift, sign), term)
        return (total * poch_inf(q_pow(1), working).invert()).scale(Fraction(1, 2))

    return habiro_hecke_side(HabiroSpec(2, 2), order), ensure_order(build, order)


def _habiro(order: int, family: int, p: int) -> Sides:
    spec = HabiroSpec(family, p)
    return habiro_series(spec, order), habiro_hecke_side(spec, order)


def _monomial_ids(name: str, extra: Sequence[Sequence[Any]]) -> List[str]:
    rows = [(x, *rest) for x in MONOMIAL_GRID for rest in product(*extra)]
    return _ids(name, rows)


CATALOG: Dict[str, CatalogEntry] = {entry.name: entry for entry in [
    CatalogEntry('main', 'f_{a,b,c} against its theta/false-theta decomposition (formal x, y)',
                 _params('int', 'int', 'int'), _main,
                 lambda: _ids('main', _negative_discriminant_triples())),
    CatalogEntry('mirror', 'f_{a,b,c} with x and y exchanged against f_{c,b,a} (formal x, y)',
                 _params('int', 'int', 'int'), _mirror,
                 lambda: _ids('mirror', product(range(1, 4), repeat=3))),
    CatalogEntry('main-monomial', 'f_{a,b,c}(x, y) against the decomposition with x, y specialized to monomials',
                 _params('int', 'int', 'int', 'monomial', 'monomial'), _main_monomial,
                 lambda: [f"main-monomial:{a},{b},{c}:{x},{y}" for a, b, c in MAIN_MONOMIAL_TRIPLES
                          for x, y in product(MAIN_MONOMIAL_XY, repeat=2)]),
    CatalogEntry('main-half', 'first t-sum of the decomposition against its collapsed theta sum',
                 _params('int', 'int', 'int'), _main_half,
                 lambda: _ids('main-half', _negative_discriminant_triples())),
    CatalogEntry('f121:qq', 'f_{1,2,1}(q, q) = (q)_inf^2',
                 _params(), _f121_qq, lambda: ['f121:qq']),
    CatalogEntry('f121:q-q', 'f_{1,2,1}(q, -q) = Theta(-q; q^4) phi(q)',
                 _params(), _f121_q_minus_q, lambda: ['f121:q-q']),
    CatalogEntry('f121:general', 'f_{1,2,1}(x, y) against its Appell-function expansion',
                 _params('monomial', 'monomial'), _f121_general,
                 lambda: _ids('f121:general', F121_PAIRS)),
    CatalogEntry('mabc', 'm_{a,b,c}(x, y, -1, -1) against the Appell part of the f_{1,2,1} expansion',
                 _params('int', 'int', 'int', 'monomial', 'monomial'), _mabc,
                 lambda: [f"mabc:1,2,1:{x},{y}" for x, y in F121_PAIRS]),
    CatalogEntry('phi-appell', 'phi(q) = 2 m(q, -1; q^3)',
                 _params(), _phi_appell, lambda: ['phi-appell']),
    CatalogEntry('jtp', 'Jacobi triple product: bilateral sum = infinite product',
                 _params('monomial', 'int', defaults=(1,)), _jtp,
                 lambda: _monomial_ids('jtp', [range(1, 6)])),
    CatalogEntry('theta-inv', 'Theta(q^p/x; q^p) = Theta(x; q^p)',
                 _params('monomial', 'int', defaults=(1,)), _theta_inv,
                 lambda: _monomial_ids('theta-inv', [range(1, 6)])),
    CatalogEntry('theta-ell', 'elliptic transformation of Theta(x; q^p) under x -> q^(pn) x',
                 _params('monomial', 'int', 'int', defaults=(1,)), _theta_ell,
                 lambda: _monomial_ids('theta-ell', [range(-4, 5), range(1, 6)])),
    CatalogEntry('theta-zero', 'Theta(q^(pn); q^p) = 0',
                 _params('int', 'int', defaults=(1,)), _theta_zero,
                 lambda: _ids('theta-zero', product(range(-4, 5), range(1, 6)))),
    CatalogEntry('theta-euler', 'Theta(q^k; q^3) = (q)_inf for k = 1, 2',
                 _params('int'), _theta_euler, lambda: ['theta-euler:1', 'theta-euler:2']),
    CatalogEntry('helping', 'elliptic shift of Theta(q^(b(ar+t)) x; q^a) used by the decomposition',
                 _params('int', 'int', 'int', 'int', 'monomial', defaults=(XYMonomial(-1, 1),)), _helping,
                 lambda: [f"helping:{a},{b},{t},{r},{x}"
                          for a, b in product(range(1, 4), repeat=2)
                          for t in range(a) for r in range(-2, 3) for x in HELPING_X]),
    CatalogEntry('h12-example', 'H_1^(2) Hecke side against its two false-theta terms',
                 _params(), _h12_example, lambda: ['h12-example']),
    CatalogEntry('h22-example', 'H_2^(2) Hecke side against its six theta/false-theta terms',
                 _params(), _h22_example, lambda: ['h22-example']),
    CatalogEntry('habiro', 'Habiro multi-sum H_p^(i) against 1/(q)_inf f_{2p+1,2,3}',
                 _params('int', 'int'), _habiro,
                 lambda: _ids('habiro', product(range(1, 6), range(1, 3))),
                 experiment=True),
]}


def resolve(identity_id: str) -> Tuple[CatalogEntry, tuple]:
    """Entry and parsed parameters for an id; UnknownIdentity otherwise"""
    for name in sorted(CATALOG, key=len, reverse=True):
        if identity_id == name:
            rest = None
        elif identity_id.startswith(name + ':'):
            rest = identity_id[len(name) + 1:]
        else:
            continue
        entry = CATALOG[name]
        args = re.split(r'[,:]', rest) if rest else []
        try:
            return entry, entry.parse(args)
        except ValueError as e:
            raise UnknownIdentity(f"{identity_id!r}: bad parameters for {name}: {e}") from e
    raise UnknownIdentity(f"{identity_id!r} does not name a catalog identity")


def run_identity(identity_id: str, order: int) -> IdentityReport:
    """Build both sides of one identity and compare them through q^order"""
    entry, args = resolve(identity_id)
    start_time = time.time()
    try:
        lhs, rhs = entry.build(order, *args)
        if isinstance(lhs, BivariateQSeries):
            report = compare_xy(lhs, rhs, order, identity_id)
        else:
            report = compare_q(lhs, rhs, order, identity_id)
    except QSeriesError as e:
        report = IdentityReport.error(identity_id, order, f'{type(e).__name__}: {e}')
    except Exception as e:
        logger.exception("identity %s failed unexpectedly", identity_id)
        report = IdentityReport.error(identity_id, order, f'{type(e).__name__}: {e}')
    report.experiment = entry.experiment
    report.elapsed_ms = (time.time() - start_time) * 1000
    return report


def catalog_ids(prefix: Optional[str] = None) -> List[str]:
    """Every default-grid id, in catalog order, whose text starts with prefix"""
    ids = [identity_id for entry in CATALOG.values() for identity_id in entry.grid()]
    if prefix:
        ids = [identity_id for identity_id in ids if identity_id.startswith(prefix)]
    return ids
