"""
Truncated Laurent series in q with exact rational coefficients.

A QSeries stores a dense run of coefficients for the exponents
min_exp..trunc_order and stands for its value modulo q^(trunc_order + 1).
Every operation tracks how far its result is known exactly and never reports
a coefficient past that point.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from series.errors import OrderExceeded, ZeroLeadingCoefficient

logger = logging.getLogger(__name__)

Rat = Fraction
Number = Union[int, Fraction]

_ZERO = Fraction(0)


def _as_rat(value: Number) -> Fraction:
    return value if type(value) is Fraction else Fraction(value)


def _integral(values: Sequence[Fraction]) -> bool:
    return all(v.denominator == 1 for v in values)


class QSeries:
    """Immutable truncated Laurent series over the rationals"""

    __slots__ = ('_min_exp', '_trunc_order', '_coeffs')

    def __init__(self, coeffs: Sequence[Number], min_exp: int, trunc_order: int):
        # coeffs[i] belongs to q^(min_exp + i); anything past trunc_order is dropped
        # and a short sequence is padded with exact zeros
        keep = max(0, trunc_order - min_exp + 1)
        values = [_as_rat(c) for c in coeffs[:keep]]

        start = 0
        while start < len(values) and values[start] == 0:
            start += 1

        if start == len(values):
            self._min_exp = 0
            self._coeffs: Tuple[Fraction, ...] = ()
        else:
            self._min_exp = min_exp + start
            values = values[start:]
            values.extend([_ZERO] * (trunc_order - self._min_exp + 1 - len(values)))
            self._coeffs = tuple(values)
        self._trunc_order = trunc_order

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, trunc_order: int) -> 'QSeries':
        return cls((), 0, trunc_order)

    @classmethod
    def const(cls, c: Number, trunc_order: int) -> 'QSeries':
        """The constant series c + O(q^(N+1))"""
        return cls((c,), 0, trunc_order)

    @classmethod
    def monomial(cls, c: Number, k: int, trunc_order: int) -> 'QSeries':
        return cls((c,), k, trunc_order)

    @classmethod
    def from_terms(cls, terms: Dict[int, Number], trunc_order: int) -> 'QSeries':
        """Build a series from a sparse {exponent: coefficient} map"""
        live = [k for k, c in terms.items() if c != 0 and k <= trunc_order]
        if not live:
            return cls.zero(trunc_order)
        lo = min(live)
        dense: List[Number] = [0] * (trunc_order - lo + 1)
        for k in live:
            dense[k - lo] = terms[k]
        return cls(dense, lo, trunc_order)

    # -- inspection -----------------------------------------------------------

    @property
    def min_exp(self) -> int:
        return self._min_exp

    @property
    def trunc_order(self) -> int:
        return self._trunc_order

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def valuation(self) -> int:
        """Lowest exponent that can be nonzero; N + 1 for the zero representative"""
        return self._trunc_order + 1 if self.is_zero else self._min_exp

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent"""
        for i, c in enumerate(self._coeffs):
            if c:
                yield self._min_exp + i, c

    def coeff_at(self, k: int) -> Fraction:
        if k > self._trunc_order:
            raise OrderExceeded(f"q^{k} requested from a series exact through q^{self._trunc_order}")
        if self.is_zero or k < self._min_exp:
            return _ZERO
        return self._coeffs[k - self._min_exp]

    def first_difference(self, other: 'QSeries', order: int) -> Optional[int]:
        """Smallest exponent <= order where the two series differ, or None"""
        if order > min(self._trunc_order, other._trunc_order):
            raise OrderExceeded(
                f"comparison through q^{order} exceeds truncations "
                f"{self._trunc_order} and {other._trunc_order}")
        starts = [s._min_exp for s in (self, other) if not s.is_zero]
        if not starts:
            return None
        for k in range(min(starts), order + 1):
            if self.coeff_at(k) != other.coeff_at(k):
                return k
        return None

    def eq_to_order(self, other: 'QSeries', order: int) -> bool:
        return self.first_difference(other, order) is None

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: 'QSeries') -> 'QSeries':
        if isinstance(other, (int, Fraction)):
            other = QSeries.const(other, self._trunc_order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self._trunc_order, other._trunc_order)
        lo = min(self._min_exp, other._min_exp)
        size = order - lo + 1
        if size <= 0:
            return QSeries.zero(order)
        acc: List[Fraction] = [_ZERO] * size
        for series in (self, other):
            for i, c in enumerate(series._coeffs):
                pos = series._min_exp - lo + i
                if pos >= size:
                    break
                acc[pos] += c
        return QSeries(acc, lo, order)

    __radd__ = __add__

    def __neg__(self) -> 'QSeries':
        return QSeries([-c for c in self._coeffs], self._min_exp, self._trunc_order)

    def negate(self) -> 'QSeries':
        return -self

    def __sub__(self, other: 'QSeries') -> 'QSeries':
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> 'QSeries':
        return (-self) + other

    def scale(self, c: Number) -> 'QSeries':
        c = _as_rat(c)
        if c == 0:
            return QSeries.zero(self._trunc_order)
        return QSeries([c * v for v in self._coeffs], self._min_exp, self._trunc_order)

    def shift(self, k: int) -> 'QSeries':
        """Multiply by q^k; the truncation moves with the series"""
        if self.is_zero:
            return QSeries.zero(self._trunc_order + k)
        return QSeries(self._coeffs, self._min_exp + k, self._trunc_order + k)

    def __mul__(self, other: Union['QSeries', Number]) -> 'QSeries':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self._trunc_order + other.valuation, other._trunc_order + self.valuation)
        if self.is_zero or other.is_zero:
            return QSeries.zero(order)
        lo = self._min_exp + other._min_exp
        size = order - lo + 1
        if size <= 0:
            return QSeries.zero(order)

        left = self._coeffs[:size]
        right = other._coeffs[:size]
        if _integral(left) and _integral(right):
            # plain ints convolve an order of magnitude faster than Fractions
            left = [c.numerator for c in left]
            right = [c.numerator for c in right]
            acc: List[Number] = [0] * size
        else:
            acc = [_ZERO] * size

        for i, a in enumerate(left):
            if not a:
                continue
            for j, b in enumerate(right[:size - i]):
                if b:
                    acc[i + j] += a * b
        return QSeries(acc, lo, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'QSeries':
        if n < 0:
            return self.invert() ** (-n)
        if n == 0:
            return QSeries.const(1, self._trunc_order)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def invert(self) -> 'QSeries':
        """Multiplicative inverse, exact through N - 2*v for valuation v"""
        if self.is_zero:
            raise ZeroLeadingCoefficient(
                f"series is zero through q^{self._trunc_order} and cannot be inverted")
        v = self._min_exp
        a = self._coeffs
        size = len(a)

        if _integral(a) and abs(a[0]) == 1:
            a_int = [c.numerator for c in a]
            lead = a_int[0]
            out: List[Number] = [lead]
            for k in range(1, size):
                s = 0
                for i in range(1, k + 1):
                    if a_int[i]:
                        s += a_int[i] * out[k - i]
                out.append(-s * lead)
        else:
            lead_inv = 1 / a[0]
            out = [lead_inv]
            for k in range(1, size):
                s = _ZERO
                for i in range(1, k + 1):
                    if a[i]:
                        s += a[i] * out[k - i]
                out.append(-s * lead_inv)
        return QSeries(out, -v, self._trunc_order - 2 * v)

    def subst_qpow(self, k: int) -> 'QSeries':
        """Substitute q -> q^k; exact through k*N + (k - 1)"""
        if k < 1:
            raise ValueError(f"substitution power must be positive, got {k}")
        new_order = k * self._trunc_order + (k - 1)
        if self.is_zero:
            return QSeries.zero(new_order)
        spread: List[Fraction] = [_ZERO] * ((len(self._coeffs) - 1) * k + 1)
        for i, c in enumerate(self._coeffs):
            spread[i * k] = c
        return QSeries(spread, self._min_exp * k, new_order)

    def truncate(self, order: int) -> 'QSeries':
        if order > self._trunc_order:
            raise OrderExceeded(f"cannot extend a series exact through q^{self._trunc_order} to q^{order}")
        return QSeries(self._coeffs, self._min_exp, order)

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self._min_exp, self._trunc_order, self._coeffs) == \
            (other._min_exp, other._trunc_order, other._coeffs)

    def __hash__(self) -> int:
        return hash((self._min_exp, self._trunc_order, self._coeffs))

    def __repr__(self) -> str:
        terms = ', '.join(f'{k}: {c}' for k, c in self.items())
        return f'QSeries({{{terms}}}, trunc_order={self._trunc_order})'


def ensure_order(build: Callable[[int], QSeries], order: int, max_rounds: int = 8) -> QSeries:
    """
    Run build(working_order) until the result is exact through q^order.

    Products with negative valuations and inversions lose a fixed amount of
    precision, so raising the working order by the observed shortfall
    converges after one or two rounds.
    """
    working = order
    for _ in range(max_rounds):
        series = build(working)
        if series.trunc_order >= order:
            return series.truncate(order)
        shortfall = order - series.trunc_order
        logger.debug("precision shortfall %d at working order %d, retrying", shortfall, working)
        working += shortfall
    raise OrderExceeded(f"could not reach q^{order} after {max_rounds} rounds")
