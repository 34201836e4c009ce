import re
from dataclasses import dataclass

_LITERAL = re.compile(r'^\s*([+-]?)\s*q\^\s*([+-]?\d+)\s*$')


@dataclass(frozen=True)
class XYMonomial:
    """The value sign * q^qexp, used to specialize x, y and z"""

    sign: int
    qexp: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"monomial sign must be +1 or -1, got {self.sign}")

    @classmethod
    def parse(cls, text: str) -> 'XYMonomial':
        """Parse literals such as 'q^2', '-q^7', '+q^-3'"""
        match = _LITERAL.match(text)
        if not match:
            raise ValueError(f"not a monomial literal: {text!r} (expected e.g. q^2 or -q^-1)")
        sign = -1 if match.group(1) == '-' else 1
        return cls(sign, int(match.group(2)))

    def __mul__(self, other: 'XYMonomial') -> 'XYMonomial':
        return XYMonomial(self.sign * other.sign, self.qexp + other.qexp)

    def __truediv__(self, other: 'XYMonomial') -> 'XYMonomial':
        return XYMonomial(self.sign * other.sign, self.qexp - other.qexp)

    def __pow__(self, n: int) -> 'XYMonomial':
        return XYMonomial(self.sign if n % 2 else 1, self.qexp * n)

    def __neg__(self) -> 'XYMonomial':
        return XYMonomial(-self.sign, self.qexp)

    def shift(self, k: int) -> 'XYMonomial':
        """q^k times this monomial"""
        return XYMonomial(self.sign, self.qexp + k)

    def __str__(self) -> str:
        return f"{'-' if self.sign < 0 else ''}q^{self.qexp}"


def q_pow(k: int, sign: int = 1) -> XYMonomial:
    return XYMonomial(sign, k)
