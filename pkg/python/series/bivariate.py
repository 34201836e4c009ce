"""
q-series whose coefficients are Laurent polynomials in the generic parameters x and y.

Values are immutable. There is no operation that substitutes
monomials for x and y into a truncated BivariateQSeries: a term x^i q^k with
k > N and i < 0 could fall below the truncation after substitution. Monomial
evaluations are built directly by the hecke builders instead.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Iterator, NamedTuple, Optional, Tuple, Union

from series.errors import OrderExceeded

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
XYExp = Tuple[int, int]


class LaurentXY:
    """Finite Laurent polynomial sum c_ij x^i y^j with rational coefficients"""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Dict[XYExp, Number]] = None):
        self._terms: Dict[XYExp, Fraction] = {
            ij: Fraction(c) for ij, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def monomial(cls, i: int, j: int, c: Number = 1) -> 'LaurentXY':
        return cls({(i, j): c})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def items(self) -> Iterator[Tuple[XYExp, Fraction]]:
        return iter(sorted(self._terms.items()))

    def support(self):
        return self._terms.keys()

    def __add__(self, other: 'LaurentXY') -> 'LaurentXY':
        merged = dict(self._terms)
        for ij, c in other._terms.items():
            merged[ij] = merged.get(ij, 0) + c
        return LaurentXY(merged)

    def __neg__(self) -> 'LaurentXY':
        return LaurentXY({ij: -c for ij, c in self._terms.items()})

    def __sub__(self, other: 'LaurentXY') -> 'LaurentXY':
        return self + (-other)

    def __mul__(self, other: Union['LaurentXY', Number]) -> 'LaurentXY':
        if isinstance(other, (int, Fraction)):
            return LaurentXY({ij: c * other for ij, c in self._terms.items()})
        product: Dict[XYExp, Fraction] = defaultdict(Fraction)
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                product[(i1 + i2, j1 + j2)] += c1 * c2
        return LaurentXY(product)

    __rmul__ = __mul__

    def swap_xy(self) -> 'LaurentXY':
        return LaurentXY({(j, i): c for (i, j), c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentXY):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = ' + '.join(f'{c}*x^{i}*y^{j}' for (i, j), c in self.items()) or '0'
        return f'LaurentXY({body})'


class XYMismatch(NamedTuple):
    """Smallest q-exponent and (i, j) at which two bivariate series disagree"""
    q_exp: int
    xy: XYExp
    lhs: Fraction
    rhs: Fraction


class BivariateQSeries:
    """Sum_k P_k(x, y) q^k, exact through q^trunc_order"""

    __slots__ = ('_trunc_order', '_coeffs')

    def __init__(self, coeffs: Dict[int, LaurentXY], trunc_order: int):
        self._trunc_order = trunc_order
        self._coeffs: Dict[int, LaurentXY] = {
            k: p for k, p in coeffs.items() if k <= trunc_order and not p.is_zero
        }

    @classmethod
    def zero(cls, trunc_order: int) -> 'BivariateQSeries':
        return cls({}, trunc_order)

    @classmethod
    def term(cls, i: int, j: int, k: int, c: Number, trunc_order: int) -> 'BivariateQSeries':
        """The single term c x^i y^j q^k"""
        return cls({k: LaurentXY.monomial(i, j, c)}, trunc_order)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int, int, Number]],
                   trunc_order: int) -> 'BivariateQSeries':
        """Accumulate (q_exp, x_exp, y_exp, coefficient) tuples"""
        grouped: Dict[int, Dict[XYExp, Number]] = defaultdict(lambda: defaultdict(int))
        for k, i, j, c in terms:
            if k <= trunc_order:
                grouped[k][(i, j)] += c
        return cls({k: LaurentXY(p) for k, p in grouped.items()}, trunc_order)

    @property
    def trunc_order(self) -> int:
        return self._trunc_order

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def valuation(self) -> int:
        return min(self._coeffs) if self._coeffs else self._trunc_order + 1

    def exponents(self):
        return sorted(self._coeffs)

    def coeff_at(self, k: int) -> LaurentXY:
        if k > self._trunc_order:
            raise OrderExceeded(f"q^{k} requested from a series exact through q^{self._trunc_order}")
        return self._coeffs.get(k, LaurentXY())

    def __add__(self, other: 'BivariateQSeries') -> 'BivariateQSeries':
        order = min(self._trunc_order, other._trunc_order)
        merged = dict(self._coeffs)
        for k, p in other._coeffs.items():
            merged[k] = merged[k] + p if k in merged else p
        return BivariateQSeries(merged, order)

    def __neg__(self) -> 'BivariateQSeries':
        return BivariateQSeries({k: -p for k, p in self._coeffs.items()}, self._trunc_order)

    def __sub__(self, other: 'BivariateQSeries') -> 'BivariateQSeries':
        return self + (-other)

    def scale(self, c: Number) -> 'BivariateQSeries':
        return BivariateQSeries({k: p * c for k, p in self._coeffs.items()}, self._trunc_order)

    def __mul__(self, other: Union['BivariateQSeries', Number]) -> 'BivariateQSeries':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        order = min(self._trunc_order + other.valuation, other._trunc_order + self.valuation)
        product: Dict[int, LaurentXY] = {}
        for k1, p1 in self._coeffs.items():
            for k2, p2 in other._coeffs.items():
                k = k1 + k2
                if k > order:
                    continue
                term = p1 * p2
                product[k] = product[k] + term if k in product else term
        return BivariateQSeries(product, order)

    __rmul__ = __mul__

    def swap_xy(self) -> 'BivariateQSeries':
        """Exchange the roles of x and y in every coefficient"""
        return BivariateQSeries({k: p.swap_xy() for k, p in self._coeffs.items()}, self._trunc_order)

    def first_difference(self, other: 'BivariateQSeries', order: int) -> Optional[XYMismatch]:
        """Witness of the first disagreement through q^order, or None"""
        if order > min(self._trunc_order, other._trunc_order):
            raise OrderExceeded(
                f"comparison through q^{order} exceeds truncations "
                f"{self._trunc_order} and {other._trunc_order}")
        for k in sorted(set(self._coeffs) | set(other._coeffs)):
            if k > order:
                break
            left, right = self.coeff_at(k), other.coeff_at(k)
            if left == right:
                continue
            for ij in sorted(set(left.support()) | set(right.support())):
                if left.coeff(*ij) != right.coeff(*ij):
                    return XYMismatch(k, ij, left.coeff(*ij), right.coeff(*ij))
        return None

    def eq_to_order(self, other: 'BivariateQSeries', order: int) -> Tuple[bool, Optional[XYMismatch]]:
        """(equal, witness); the witness is None when the series agree"""
        witness = self.first_difference(other, order)
        return witness is None, witness

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateQSeries):
            return NotImplemented
        return self._trunc_order == other._trunc_order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._trunc_order, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f'BivariateQSeries({len(self._coeffs)} q-powers, trunc_order={self._trunc_order})'
