"""Coefficient-by-coefficient comparison of two series and the resulting report."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from series.bivariate import BivariateQSeries
from series.errors import OrderExceeded
from series.exact_series import QSeries

logger = logging.getLogger(__name__)


class Status(str, Enum):
    EQUAL = 'EQUAL'
    MISMATCH = 'MISMATCH'
    ERROR = 'ERROR'


@dataclass(frozen=True)
class Mismatch:
    """First disagreement; xy is the (x, y) exponent pair in formal mode"""

    q_exp: int
    xy: Optional[Tuple[int, int]]
    lhs: Fraction
    rhs: Fraction


@dataclass
class IdentityReport:
    identity_id: str
    order_checked: int
    status: Status
    first_mismatch: Optional[Mismatch] = None
    error_detail: Optional[str] = None
    experiment: bool = False
    elapsed_ms: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.status == Status.EQUAL and self.first_mismatch is not None:
            raise ValueError(f"{self.identity_id}: EQUAL report cannot carry a mismatch")
        if self.status == Status.MISMATCH:
            if self.first_mismatch is None or self.first_mismatch.lhs == self.first_mismatch.rhs:
                raise ValueError(f"{self.identity_id}: MISMATCH report needs a differing coefficient pair")

    @property
    def passed(self) -> bool:
        return self.status == Status.EQUAL

    @property
    def counts_as_failure(self) -> bool:
        """Whether this report should fail a verification run"""
        return not self.experiment and not self.passed

    @classmethod
    def error(cls, identity_id: str, order: int, detail: str, experiment: bool = False) -> 'IdentityReport':
        return cls(identity_id, order, Status.ERROR, error_detail=detail, experiment=experiment)


def compare_q(lhs: QSeries, rhs: QSeries, order: int, identity_id: str = '') -> IdentityReport:
    """EQUAL iff every coefficient through q^order agrees"""
    try:
        k = lhs.first_difference(rhs, order)
    except OrderExceeded as e:
        return IdentityReport.error(identity_id, order, str(e))
    if k is None:
        return IdentityReport(identity_id, order, Status.EQUAL)
    logger.debug("%s differs first at q^%d", identity_id, k)
    return IdentityReport(identity_id, order, Status.MISMATCH,
                          Mismatch(k, None, lhs.coeff_at(k), rhs.coeff_at(k)))


def compare_xy(lhs: BivariateQSeries, rhs: BivariateQSeries, order: int,
               identity_id: str = '') -> IdentityReport:
    """As compare_q, with the witness located down to the x^i y^j term"""
    try:
        witness = lhs.first_difference(rhs, order)
    except OrderExceeded as e:
        return IdentityReport.error(identity_id, order, str(e))
    if witness is None:
        return IdentityReport(identity_id, order, Status.EQUAL)
    logger.debug("%s differs first at q^%d x^%d y^%d", identity_id, witness.q_exp, *witness.xy)
    return IdentityReport(identity_id, order, Status.MISMATCH,
                          Mismatch(witness.q_exp, witness.xy, witness.lhs, witness.rhs))
