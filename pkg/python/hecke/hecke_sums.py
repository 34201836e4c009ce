"""
Hecke-type double sums f_{a,b,c}(x, y; q) and the two sides of their decompositions.

Every builder is a term generator plus a collector. A generator yields
(q_exp, x_exp, y_exp, coeff) for the formal expansion and bounds its index
windows by the specialized exponent q_exp + mx*x_exp + my*y_exp, where
(mx, my) are the q-exponents of the monomials x and y (both 0 in formal
mode). Collectors either keep x and y symbolic (BivariateQSeries) or fold
the monomials in (QSeries).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Tuple

from qfunctions.monomial import XYMonomial
from qfunctions.special_functions import appell_m, poch_inf, theta_jtp, theta_vanishes, times_monomial
from series.bivariate import BivariateQSeries
from series.errors import ParameterError, ThetaVanishes
from series.exact_series import QSeries, ensure_order
from series.windows import bilateral_indices, binom2, convex_minimum, escape_indices, sg

logger = logging.getLogger(__name__)

Term = Tuple[int, int, int, int]


@dataclass(frozen=True)
class HeckeParams:
    """Positive integers a, b, c of f_{a,b,c} with discriminant D = b^2 - ac"""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ParameterError(f"a, b, c must be positive integers, got ({self.a}, {self.b}, {self.c})")

    @property
    def D(self) -> int:
        return self.b * self.b - self.a * self.c

    def mirrored(self) -> 'HeckeParams':
        return HeckeParams(self.c, self.b, self.a)

    def __str__(self) -> str:
        return f'{self.a},{self.b},{self.c}'


def _require_negative_discriminant(params: HeckeParams) -> None:
    if params.D >= 0:
        raise ParameterError(f"D = b^2 - ac must be negative, got D={params.D} for ({params})")


def _bilateral_min(values: Callable[[int], int]) -> int:
    return min(convex_minimum(values, 0, 1), convex_minimum(values, -1, -1))


def _parity(n: int) -> int:
    return -1 if n % 2 else 1


def _collect_monomial(terms: Iterable[Term], x: XYMonomial, y: XYMonomial, order: int) -> Dict[int, int]:
    folded: Dict[int, int] = {}
    for k, i, j, coeff in terms:
        e = k + x.qexp * i + y.qexp * j
        if e > order:
            continue
        if x.sign < 0 and i % 2:
            coeff = -coeff
        if y.sign < 0 and j % 2:
            coeff = -coeff
        folded[e] = folded.get(e, 0) + coeff
    return folded


# -- f_{a,b,c} ----------------------------------------------------------------

def hecke_terms(params: HeckeParams, mx: int, my: int, order: int) -> Iterator[Term]:
    """
    Terms of (sum_{r,s>=0} - sum_{r,s<0}) (-1)^(r+s) x^r y^s q^(a*binom(r,2) + brs + c*binom(s,2)).

    Any positive (a, b, c) is accepted: brs >= 0 in both quadrants, so the
    exponent grows quadratically there whatever the sign of D.
    """
    a, b, c = params.a, params.b, params.c

    def exponent(r: int, s: int) -> int:
        return a * binom2(r) + b * r * s + c * binom2(s)

    for start, step, quadrant_sign in ((0, 1, 1), (-1, -1, -1)):
        s_floor = convex_minimum(lambda s: c * binom2(s) + my * s, start, step)

        def r_bound(r: int) -> int:
            return a * binom2(r) + mx * r + s_floor

        for r in escape_indices(r_bound, start, step, order):
            def s_bound(s: int, r: int = r) -> int:
                return exponent(r, s) + mx * r + my * s

            for s in escape_indices(s_bound, start, step, order):
                if s_bound(s) <= order:
                    yield exponent(r, s), r, s, quadrant_sign * _parity(r + s)


def hecke_f_bivariate(params: HeckeParams, order: int) -> BivariateQSeries:
    return BivariateQSeries.from_terms(hecke_terms(params, 0, 0, order), order)


def hecke_f_monomial(params: HeckeParams, x: XYMonomial, y: XYMonomial, order: int) -> QSeries:
    terms = hecke_terms(params, x.qexp, y.qexp, order)
    return QSeries.from_terms(_collect_monomial(terms, x, y, order), order)


# -- theta / false-theta decomposition for D < 0 --------------------------------

def _half_terms(a: int, b: int, c: int, mu: int, nu: int, order: int) -> Iterator[Term]:
    """
    Terms of sum_{t<a} (-y)^t q^(c*binom(t,2)) Theta(q^(bt) x; q^a)
    * sum_r sg(r) (q^(L_t) (-y)^a / (-x)^b)^r q^(-aD*binom(r+1,2)),
    with L_t = a*binom(b+1,2) - c*binom(a+1,2) - tD and mu, nu the
    specialized exponents of x and y.

    The specialized exponent splits into a t-part, a theta part in n and a
    false-theta part in r, so each index gets its own window.
    """
    D = b * b - a * c
    for t in range(a):
        lead = c * binom2(t) + nu * t
        shift = a * binom2(b + 1) - c * binom2(a + 1) - t * D

        def theta_part(n: int, t: int = t) -> int:
            return a * binom2(n) + (b * t + mu) * n

        def false_part(r: int, shift: int = shift) -> int:
            return (shift - b * mu + a * nu) * r - a * D * binom2(r + 1)

        theta_floor = _bilateral_min(theta_part)
        false_floor = _bilateral_min(false_part)
        if lead + theta_floor + false_floor > order:
            continue

        thetas = [n for n in bilateral_indices(lambda n: lead + theta_part(n) + false_floor, order)
                  if lead + theta_part(n) + false_floor <= order]
        falses = [r for r in bilateral_indices(lambda r: lead + theta_floor + false_part(r), order)
                  if lead + theta_floor + false_part(r) <= order]
        logger.debug("t=%d: %d theta indices, %d false-theta indices", t, len(thetas), len(falses))

        for n in thetas:
            for r in falses:
                if lead + theta_part(n) + false_part(r) > order:
                    continue
                k = c * binom2(t) + a * binom2(n) + b * t * n + shift * r - a * D * binom2(r + 1)
                coeff = sg(r) * _parity(t + n + (a + b) * r)
                yield k, n - b * r, t + a * r, coeff


def main_rhs_half_terms(params: HeckeParams, mx: int, my: int, order: int) -> Tuple[Iterator[Term], Iterator[Term]]:
    """The two t-sums of the decomposition, before the overall factor 1/2"""
    _require_negative_discriminant(params)
    a, b, c = params.a, params.b, params.c
    first = _half_terms(a, b, c, mx, my, order)
    mirror = ((k, i, j, coeff) for k, j, i, coeff in _half_terms(c, b, a, my, mx, order))
    return first, mirror


def main_rhs_bivariate(params: HeckeParams, order: int) -> BivariateQSeries:
    """Right side of the D < 0 decomposition with x and y kept formal"""
    first, mirror = main_rhs_half_terms(params, 0, 0, order)
    total = BivariateQSeries.from_terms(first, order) + BivariateQSeries.from_terms(mirror, order)
    return total.scale(Fraction(1, 2))


def main_rhs_half_bivariate(params: HeckeParams, order: int) -> BivariateQSeries:
    """The first t-sum alone (no factor 1/2)"""
    first, _ = main_rhs_half_terms(params, 0, 0, order)
    return BivariateQSeries.from_terms(first, order)


def main_rhs_halves_monomial(params: HeckeParams, x: XYMonomial, y: XYMonomial,
                             order: int) -> Tuple[QSeries, QSeries]:
    first, mirror = main_rhs_half_terms(params, x.qexp, y.qexp, order)
    return (QSeries.from_terms(_collect_monomial(first, x, y, order), order),
            QSeries.from_terms(_collect_monomial(mirror, x, y, order), order))


def main_rhs_monomial(params: HeckeParams, x: XYMonomial, y: XYMonomial, order: int) -> QSeries:
    first, mirror = main_rhs_halves_monomial(params, x, y, order)
    return (first + mirror).scale(Fraction(1, 2))


def hecke_half_sum_bivariate(params: HeckeParams, order: int) -> BivariateQSeries:
    """
    sum_n sg(n) q^(c*binom(n,2)) (-y)^n Theta(q^(bn) x; q^a), formal in x and y.

    This is what the first t-sum collapses to once n = ar + t is substituted.
    The outer window uses the real minimum over m of the theta exponent,
    a convex quadratic in n because D < 0.
    """
    _require_negative_discriminant(params)
    a, b, c = params.a, params.b, params.c

    def exponent(n: int, m: int) -> int:
        return a * binom2(m) + b * m * n + c * binom2(n)

    def n_bound(n: int) -> Fraction:
        centre = Fraction(2 * b * n - a, 2)
        return c * binom2(n) - centre * centre / (2 * a)

    def terms() -> Iterator[Term]:
        for n in bilateral_indices(n_bound, order):
            for m in bilateral_indices(lambda m, n=n: exponent(n, m), order):
                k = exponent(n, m)
                if k <= order:
                    yield k, m, n, sg(n) * _parity(n + m)

    return BivariateQSeries.from_terms(terms(), order)


# -- Appell side for D > 0 ------------------------------------------------------

def mabc_monomial(params: HeckeParams, x: XYMonomial, y: XYMonomial,
                  z1: XYMonomial, z0: XYMonomial, order: int) -> QSeries:
    """
    m_{a,b,c}(x, y, z1, z0; q): the Appell-function combination for D > 0.

    sum_{t<a} (-y)^t q^(c*binom(t,2)) Theta(q^(bt) x; q^a)
        m(-q^(a*binom(b+1,2) - c*binom(a+1,2) - tD) (-y)^a/(-x)^b, z0; q^(aD))
    plus the same with (a, x, z0) and (c, y, z1) exchanged.
    """
    D = params.D
    if D <= 0:
        raise ParameterError(f"m_(a,b,c) needs D = b^2 - ac > 0, got D={D} for ({params})")

    def one_side(a: int, b: int, c: int, u: XYMonomial, v: XYMonomial, z: XYMonomial,
                 working: int) -> QSeries:
        neg_u, neg_v = -u, -v
        total = QSeries.zero(working)
        for t in range(a):
            theta = theta_jtp(u.shift(b * t), a, working)
            argument = XYMonomial(-1, a * binom2(b + 1) - c * binom2(a + 1) - t * D) * neg_v ** a / neg_u ** b
            appell = appell_m(argument, z, a * D, working)
            total = total + times_monomial(neg_v ** t, theta * appell, c * binom2(t))
        return total

    def build(working: int) -> QSeries:
        a, b, c = params.a, params.b, params.c
        return one_side(a, b, c, x, y, z0, working) + one_side(c, b, a, y, x, z1, working)

    return ensure_order(build, order)


def f121_appell_part(x: XYMonomial, y: XYMonomial, order: int) -> QSeries:
    """Theta(y;q) m(q^2 x/y^2, -1; q^3) + Theta(x;q) m(q^2 y/x^2, -1; q^3)"""
    minus_one = XYMonomial(-1, 0)

    def build(working: int) -> QSeries:
        first = theta_jtp(y, 1, working) * appell_m(x.shift(2) / y ** 2, minus_one, 3, working)
        second = theta_jtp(x, 1, working) * appell_m(y.shift(2) / x ** 2, minus_one, 3, working)
        return first + second

    return ensure_order(build, order)


def f121_rhs_monomial(x: XYMonomial, y: XYMonomial, order: int) -> QSeries:
    """
    The f_{1,2,1} expansion at monomial x, y:
    Appell part - y (q^3;q^3)^3 Theta(-x/y;q) Theta(q^2xy;q^3)
                  / (Theta(-1;q^3) Theta(-q y^2/x;q^3) Theta(-q x^2/y;q^3)).
    """
    denominators = [XYMonomial(-1, 0), XYMonomial(-1, 1) * y ** 2 / x, XYMonomial(-1, 1) * x ** 2 / y]
    for z in denominators:
        if theta_vanishes(z, 3):
            raise ThetaVanishes(f"Theta({z}; q^3) is identically zero")

    def correction(working: int) -> QSeries:
        cube = poch_inf(XYMonomial(1, 3), working, base=3) ** 3
        numerator = cube * theta_jtp(-(x / y), 1, working) * theta_jtp(x * y.shift(2), 3, working)
        denominator = QSeries.const(1, working)
        for z in denominators:
            denominator = denominator * theta_jtp(z, 3, working)
        return times_monomial(y, numerator * denominator.invert())

    def build(working: int) -> QSeries:
        return f121_appell_part(x, y, working) - correction(working)

    return ensure_order(build, order)
