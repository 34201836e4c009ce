"""
Named q-functions as QSeries builders.

Arguments are XYMonomial values sign * q^m. Thetas, Pochhammer symbols and
Gaussian binomials carry integer coefficients and are assembled on plain
int lists before they become a QSeries.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from qfunctions.monomial import XYMonomial
from series.errors import AppellPole, ParameterError, ThetaVanishes
from series.exact_series import QSeries, ensure_order
from series.windows import bilateral_indices, binom2, sg

logger = logging.getLogger(__name__)

# a factor (1 + c q^e) with c = +-1
Factor = Tuple[int, int]


def _binomial_product(factors: Iterable[Factor], order: int) -> QSeries:
    """
    Exact product of factors (1 + c q^e), reported through q^order.

    Factors with e < 0 are multiplied in first so nothing above the
    truncation is ever discarded before a downward shift.
    """
    factors = list(factors)
    negative = [(c, e) for c, e in factors if e < 0]
    constant = 1
    for c, e in factors:
        if e == 0:
            constant *= 1 + c
    if constant == 0:
        return QSeries.zero(order)

    low = sum(e for _, e in negative)
    if order < low:
        return QSeries.zero(order)
    top = max(order, 0)
    size = top - low + 1
    coeffs = [0] * size
    coeffs[-low] = constant

    for c, e in negative:
        for idx in range(size + e):
            coeffs[idx] += c * coeffs[idx - e]

    for c, e in factors:
        if e <= 0 or e >= size:
            continue
        for idx in range(size - 1, e - 1, -1):
            coeffs[idx] += c * coeffs[idx - e]

    return QSeries(coeffs, low, order)


def _require_positive_base(p: int, name: str = "p") -> None:
    if p < 1:
        raise ParameterError(f"base exponent {name} must be at least 1, got {p}")


def _progression(start: int, step: int, upto: int) -> List[int]:
    """start, start + step, ... while <= upto"""
    return list(range(start, upto + 1, step)) if start <= upto else []


def _infinite_factors(x: XYMonomial, base: int, order: int, companions: Iterable[XYMonomial] = ()) -> List[Factor]:
    """
    Factors of (x; q^base)_inf and any companion products needed through q^order.

    The negative exponents of all products lower the reachable valuation,
    so the positive range is extended by their total.
    """
    args = [x, *companions]
    low = sum(sum(_progression(a.qexp, base, -1)) for a in args)
    factors: List[Factor] = []
    for a in args:
        for e in _progression(a.qexp, base, order - low):
            factors.append((-a.sign, e))
    return factors


def poch_finite(x: XYMonomial, n: int, order: int, base: int = 1) -> QSeries:
    """(x; q^base)_n = prod_{i<n} (1 - x q^(base*i))"""
    factors = [(-x.sign, x.qexp + base * i) for i in range(n)]
    return _binomial_product(factors, order)


def poch_inf(x: XYMonomial, order: int, base: int = 1) -> QSeries:
    """(x; q^base)_inf through q^order"""
    _require_positive_base(base, "base")
    return _binomial_product(_infinite_factors(x, base, order), order)


def gauss_binom_table(n_max: int, k_max: int, order: int) -> Dict[Tuple[int, int], List[int]]:
    """
    Gaussian binomials [n, k] for n <= n_max, k <= k_max as int lists
    truncated after q^order, via [n,k] = [n-1,k-1] + q^k [n-1,k].
    """
    width = max(order, 0) + 1
    table: Dict[Tuple[int, int], List[int]] = {(0, 0): [1] + [0] * (width - 1)}
    for n in range(1, n_max + 1):
        for k in range(0, min(n, k_max) + 1):
            row = [0] * width
            left = table.get((n - 1, k - 1))
            if left:
                row = list(left)
            upper = table.get((n - 1, k))
            if upper and k < width:
                for i in range(width - k):
                    row[i + k] += upper[i]
            table[(n, k)] = row
    return table


def gauss_binom(n: int, k: int, order: int) -> QSeries:
    if k < 0 or k > n or n < 0:
        return QSeries.zero(order)
    if order < 0:
        return QSeries.zero(order)
    table = gauss_binom_table(n, k, order)
    return QSeries(table[(n, k)], 0, order)


def theta_jtp(x: XYMonomial, p: int, order: int) -> QSeries:
    """Theta(x; q^p) as the bilateral sum of (-1)^n q^(p*binom(n,2)) x^n"""
    _require_positive_base(p)
    terms: Dict[int, int] = {}

    def exponent(n: int) -> int:
        return p * binom2(n) + x.qexp * n

    for n in bilateral_indices(exponent, order):
        e = exponent(n)
        if e <= order:
            sign = -1 if n % 2 else 1
            if x.sign < 0 and n % 2:
                sign = -sign
            terms[e] = terms.get(e, 0) + sign
    return QSeries.from_terms(terms, order)


def theta_product(x: XYMonomial, p: int, order: int) -> QSeries:
    """Theta(x; q^p) = (x; q^p)_inf (q^p/x; q^p)_inf (q^p; q^p)_inf"""
    _require_positive_base(p)
    companions = [XYMonomial(x.sign, p - x.qexp), XYMonomial(1, p)]
    return _binomial_product(_infinite_factors(x, p, order, companions), order)


def false_theta_sum(X: XYMonomial, P: int, order: int) -> QSeries:
    """
    sum_r sg(r) X^r q^(P*binom(r+1,2)).

    The q^(P*binom(r,2)) variant is reached with X -> X q^-P.
    """
    _require_positive_base(P, "P")
    terms: Dict[int, int] = {}

    def exponent(r: int) -> int:
        return P * binom2(r + 1) + X.qexp * r

    for r in bilateral_indices(exponent, order):
        e = exponent(r)
        if e <= order:
            sign = sg(r)
            if X.sign < 0 and r % 2:
                sign = -sign
            terms[e] = terms.get(e, 0) + sign
    return QSeries.from_terms(terms, order)


def theta_vanishes(z: XYMonomial, p: int) -> bool:
    """Theta(z; q^p) is identically zero exactly at z = +q^(p*n)"""
    return z.sign == 1 and z.qexp % p == 0


def appell_pole_index(x: XYMonomial, z: XYMonomial, p: int) -> Optional[int]:
    """The r with q^(p(r-1)) x z = +1, if any"""
    offset = x.qexp + z.qexp
    if x.sign * z.sign == 1 and offset % p == 0:
        return 1 - offset // p
    return None


def _appell_numerator_sum(x: XYMonomial, z: XYMonomial, p: int, order: int) -> QSeries:
    sigma = x.sign * z.sign
    terms: Dict[int, Fraction] = {}

    def denominator_exp(r: int) -> int:
        return p * (r - 1) + x.qexp + z.qexp

    def lower_bound(r: int) -> int:
        return p * binom2(r) + z.qexp * r + max(0, -denominator_exp(r))

    def add(e: int, c) -> None:
        terms[e] = terms.get(e, 0) + c

    for r in bilateral_indices(lower_bound, order):
        head = p * binom2(r) + z.qexp * r
        head_sign = (-1 if r % 2 else 1) * (z.sign if r % 2 else 1)
        e_r = denominator_exp(r)
        if e_r == 0:
            if sigma == 1:
                raise AppellPole(f"denominator 1 - q^0 at r={r} for x={x}, z={z}, base q^{p}")
            if head <= order:
                add(head, Fraction(head_sign, 2))
        elif e_r > 0:
            k = 0
            while head + k * e_r <= order:
                add(head + k * e_r, head_sign * (sigma if k % 2 else 1))
                k += 1
        else:
            step = -e_r
            k = 1
            while head + k * step <= order:
                add(head + k * step, -head_sign * (sigma if k % 2 else 1))
                k += 1
    return QSeries.from_terms(terms, order)


def appell_m(x: XYMonomial, z: XYMonomial, p: int, order: int) -> QSeries:
    """
    m(x, z; q^p) = 1/Theta(z; q^p) * sum_r (-1)^r q^(p*binom(r,2)) z^r / (1 - q^(p(r-1)) x z).

    Each denominator is expanded as a geometric series in whichever of
    x z q^(p(r-1)) or its inverse has positive q-order; the unit case
    1/(1 + 1) contributes 1/2 and 1/(1 - 1) is a pole.
    """
    _require_positive_base(p)
    pole = appell_pole_index(x, z, p)
    if pole is not None:
        raise AppellPole(f"denominator 1 - q^0 at r={pole} for x={x}, z={z}, base q^{p}")
    if theta_vanishes(z, p):
        raise ThetaVanishes(f"Theta({z}; q^{p}) is identically zero")

    def build(working: int) -> QSeries:
        numerator = _appell_numerator_sum(x, z, p, working)
        return numerator * theta_jtp(z, p, working).invert()

    return ensure_order(build, order)


def phi_sixth(order: int) -> QSeries:
    """The sixth-order mock theta function sum_n (-1)^n q^(n^2) (q;q^2)_n / (-q)_{2n}"""
    total = QSeries.zero(order)
    n = 0
    while n * n <= order:
        numerator = poch_finite(XYMonomial(1, 1), n, order, base=2).shift(n * n)
        denominator = poch_finite(XYMonomial(-1, 1), 2 * n, order)
        term = numerator * denominator.invert()
        total = total + (term if n % 2 == 0 else -term)
        n += 1
    return total.truncate(order)


def times_monomial(m: XYMonomial, series: QSeries, extra_exp: int = 0) -> QSeries:
    """sign * q^(qexp + extra_exp) * series, exact; the truncation moves with the shift"""
    shifted = series.shift(m.qexp + extra_exp)
    return -shifted if m.sign < 0 else shifted
