"""
Exception hierarchy for q-series computations.

Every error also derives from the closest builtin exception, so callers can
catch either the specific class or the generic one.
"""


class QSeriesError(Exception):
    """Base class for all errors raised by qseries_j."""


class DivisionByZeroSeries(QSeriesError, ZeroDivisionError):
    """Divisor series vanishes identically below its truncation order."""


class NonIntegerQuotient(QSeriesError, ArithmeticError):
    """Long division produced a coefficient outside the integers."""


class NegativeValuation(QSeriesError, ValueError):
    """Quotient would need a negative exponent (dividend valuation too low)."""


class IncompatibleScale(QSeriesError, ValueError):
    """Exponents cannot be represented with the requested denominator."""


class NotPrime(QSeriesError, ValueError):
    """The modulus N is not a prime number."""


class UnsupportedPrime(QSeriesError, ValueError):
    """The modulus N is prime but not greater than 3."""


class InternalInconsistency(QSeriesError, RuntimeError):
    """A quantity that must hold by theory failed to hold."""


class NonRationalCoefficient(InternalInconsistency):
    """A cyclotomic coefficient expected to be a rational integer was not."""


class UnknownCheck(QSeriesError, LookupError):
    """No identity check is registered under the requested id."""


class ConfigError(QSeriesError, ValueError):
    """Command-line configuration failed validation."""
