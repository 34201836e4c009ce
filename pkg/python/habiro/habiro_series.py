"""
Habiro-type multi-sums H_p^(i)(q) and their Hecke-type expansions.

    H_p^(i)(q) = sum_{s_p >= ... >= s_1 >= 0} q^(k s_p) (q^(s_p + d); q)_(s_p + e)
                 * prod_{i<p} q^(w(s_i)) [s_(i+1); s_i]_q

with (k, d, e, w) fixed by the family. The Hecke side is
1/(q)_inf * f_{2p+1,2,3}(x, y; q) at family-dependent monomials x and y.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, NamedTuple

from hecke.hecke_sums import HeckeParams, hecke_f_monomial
from qfunctions.monomial import XYMonomial
from qfunctions.special_functions import gauss_binom_table, poch_finite, poch_inf
from series.errors import ParameterError
from series.exact_series import QSeries

logger = logging.getLogger(__name__)


def _triangular(s: int) -> int:
    return s * (s + 1)


def _square(s: int) -> int:
    return s * s


class _FamilyShape(NamedTuple):
    outer: int                          # q^(outer * s_p)
    poch_start: int                     # (q^(s_p + poch_start); q)_...
    poch_extra: int                     # ..._(s_p + poch_extra)
    weight: Callable[[int], int]        # q^(weight(s_i)) on inner indices
    x_exp: Callable[[int], int]         # Hecke-side x = q^(x_exp(p))
    y_exp: int                          # Hecke-side y = q^y_exp


FAMILIES: Dict[int, _FamilyShape] = {
    1: _FamilyShape(1, 1, 1, _triangular, lambda p: 2 * p + 1, 4),
    2: _FamilyShape(1, 0, 1, _square, lambda p: p + 1, 2),
    3: _FamilyShape(2, 1, 1, _triangular, lambda p: 2 * p + 2, 3),
    4: _FamilyShape(1, 1, 0, _triangular, lambda p: 2 * p + 1, 2),
    5: _FamilyShape(1, 1, 1, _square, lambda p: p + 1, 3),
}


@dataclass(frozen=True)
class HabiroSpec:
    family: int
    p: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"Habiro family must be 1..5, got {self.family}")
        if self.p < 1:
            raise ParameterError(f"Habiro depth p must be positive, got {self.p}")

    @property
    def shape(self) -> _FamilyShape:
        return FAMILIES[self.family]

    @property
    def hecke_params(self) -> HeckeParams:
        return HeckeParams(2 * self.p + 1, 2, 3)

    @property
    def hecke_x(self) -> XYMonomial:
        return XYMonomial(1, self.shape.x_exp(self.p))

    @property
    def hecke_y(self) -> XYMonomial:
        return XYMonomial(1, self.shape.y_exp)


def habiro_series(spec: HabiroSpec, order: int) -> QSeries:
    """
    The multi-sum through q^order.

    Every factor has nonnegative q-order and the outer factor alone has
    order >= s_p, so s_p <= order covers every contributing term. Inner
    indices with weight above order are skipped.
    """
    shape = spec.shape
    if order < 0:
        return QSeries.zero(order)
    deepest = 0
    while shape.weight(deepest + 1) <= order:
        deepest += 1
    binomials = gauss_binom_table(order, deepest, order)

    @lru_cache(maxsize=None)
    def inner(m: int, depth: int) -> QSeries:
        # sum over m >= s_depth >= ... >= s_1 >= 0 of the weighted binomial chain
        if depth == 0:
            return QSeries.const(1, order)
        total = QSeries.zero(order)
        for s in range(m + 1):
            w = shape.weight(s)
            if w > order:
                break
            link = QSeries(binomials[(m, s)], 0, order).shift(w)
            total = total + (link * inner(s, depth - 1)).truncate(order)
        return total

    total = QSeries.zero(order)
    for s_p in range(order + 1):
        lead = shape.outer * s_p
        if lead > order:
            break
        pochhammer = poch_finite(XYMonomial(1, s_p + shape.poch_start), s_p + shape.poch_extra, order)
        if pochhammer.is_zero:
            continue
        term = (pochhammer.shift(lead) * inner(s_p, spec.p - 1)).truncate(order)
        total = total + term
    logger.debug("H_%d^(%d) through q^%d: %d inner chains cached",
                 spec.p, spec.family, order, inner.cache_info().currsize)
    return total.truncate(order)


def habiro_hecke_side(spec: HabiroSpec, order: int) -> QSeries:
    """1/(q)_inf * f_{2p+1,2,3}(x, y; q) at the family's monomials"""
    double_sum = hecke_f_monomial(spec.hecke_params, spec.hecke_x, spec.hecke_y, order)
    euler = poch_inf(XYMonomial(1, 1), order)
    return (double_sum * euler.invert()).truncate(order)
