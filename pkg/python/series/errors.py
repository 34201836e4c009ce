"""Exception hierarchy shared by the series kernels, builders and harness."""


class QSeriesError(Exception):
    """Base class for every error raised by the q-series engine"""


class ZeroLeadingCoefficient(QSeriesError):
    """Raised when inverting a series that is zero to its truncation order"""


class OrderExceeded(QSeriesError):
    """Raised when a coefficient beyond the valid truncation is requested"""


class AppellPole(QSeriesError):
    """Raised when an Appell denominator is 1 - q^0 (a genuine pole)"""


class ThetaVanishes(QSeriesError):
    """Raised when a theta function that must be inverted is identically zero"""


class ParameterError(QSeriesError):
    """Raised when (a, b, c) or another parameter is outside a builder's domain"""


class UnknownIdentity(QSeriesError):
    """Raised when an identity id does not name a catalog entry"""
