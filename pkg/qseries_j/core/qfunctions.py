"""
Generators for the named q-series: Euler products, Ramanujan's theta
function in sum and product form, the quintuple product, Jacobi's cube
series and the partition generating function.

All bilateral sums run over the integer window where a quadratic exponent
stays below the truncation order. The window is found from the vertex of the
quadratic and scanned outward while the exponent is still in range, so no
term below the order is ever missed.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Tuple, Union

from .errors import IncompatibleScale
from .series import Comparison, ScaledSeries, compare, div, power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThetaArg:
    """Signed monomial argument ``sign * q**exponent`` with ``exponent > 0``."""

    sign: int
    exponent: Fraction

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        if self.exponent <= 0:
            raise ValueError(f"exponent must be positive, got {self.exponent}")

    @classmethod
    def neg_power(cls, exponent: Union[int, Fraction]) -> "ThetaArg":
        """``-q**exponent``, the shape of every argument in the J-function formulas."""
        return cls(-1, Fraction(exponent))

    def units(self, scale: int) -> int:
        """Exponent as an integer count of ``q**(1/scale)``."""
        value = self.exponent * scale
        if value.denominator != 1:
            raise IncompatibleScale(
                f"argument q^{self.exponent} is not representable at scale {scale}"
            )
        return value.numerator

    def __mul__(self, other: "ThetaArg") -> "ThetaArg":
        return ThetaArg(self.sign * other.sign, self.exponent + other.exponent)

    def __neg__(self) -> "ThetaArg":
        return ThetaArg(-self.sign, self.exponent)

    def __str__(self) -> str:
        sign = "-" if self.sign < 0 else ""
        exponent = self.exponent
        if exponent == 1:
            return f"{sign}q"
        if exponent.denominator == 1:
            return f"{sign}q^{exponent}"
        return f"{sign}q^({exponent})"


def _quadratic_window(a2: Fraction, a1: Fraction, a0: Fraction, bound: int) -> List[int]:
    """Integers n with ``a2*n**2 + a1*n + a0 < bound`` (requires ``a2 > 0``)."""
    if a2 <= 0:
        raise ValueError("exponent quadratic must open upward")

    def value(n: int) -> Fraction:
        return a2 * n * n + a1 * n + a0

    vertex = math.floor(-a1 / (2 * a2))
    window: List[int] = []
    n = vertex
    while value(n) < bound:
        window.append(n)
        n -= 1
    n = vertex + 1
    while value(n) < bound:
        window.append(n)
        n += 1
    return sorted(window)


def _bilateral(
    a2: Fraction,
    a1: Fraction,
    a0: Fraction,
    coeff: Callable[[int], int],
    trunc: int,
    scale: int,
) -> Dict[int, int]:
    terms: Dict[int, int] = {}
    for n in _quadratic_window(a2, a1, a0, trunc):
        exponent = a2 * n * n + a1 * n + a0
        if exponent.denominator != 1:
            raise IncompatibleScale(
                f"term {n} has exponent {exponent} not integral at scale {scale}"
            )
        e = exponent.numerator
        terms[e] = terms.get(e, 0) + coeff(n)
    return terms


# ----------------------------------------------------------------------
# Euler function and partitions
# ----------------------------------------------------------------------


@lru_cache(maxsize=256)
def euler_series(s: int, trunc: int, scale: int = 1) -> ScaledSeries:
    """``(q**s)_inf`` from the pentagonal number theorem.

    ``sum_m (-1)**m q**(s*m*(3m-1)/2)``, exponents counted in ``1/scale``.
    """
    if s < 1:
        raise ValueError(f"s must be a positive integer, got {s}")
    if trunc < 1:
        raise ValueError(f"trunc must be positive, got {trunc}")
    weight = Fraction(s * scale)
    terms = _bilateral(
        3 * weight / 2, -weight / 2, Fraction(0),
        lambda m: -1 if m & 1 else 1,
        trunc, scale,
    )
    return ScaledSeries(terms, scale=scale, trunc=trunc)


@lru_cache(maxsize=64)
def partition_series(trunc: int) -> ScaledSeries:
    """``1/(q)_inf``; the coefficient of ``q**n`` is ``p(n)``."""
    one = ScaledSeries.one(trunc=trunc)
    return div(one, euler_series(1, trunc))


def eta_quotient(N: int, trunc: int, num_power: int, den_power: int) -> ScaledSeries:
    """``(q)_inf**num_power / (q**N)_inf**den_power`` to order ``trunc``."""
    return div(
        power(euler_series(1, trunc), num_power),
        power(euler_series(N, trunc), den_power),
    )


def jacobi_cube(trunc: int) -> ScaledSeries:
    """``sum_{n>=0} (-1)**n (2n+1) q**(n(n+1)/2)``, which equals ``(q)_inf**3``."""
    if trunc < 1:
        raise ValueError(f"trunc must be positive, got {trunc}")
    terms: Dict[int, int] = {}
    n = 0
    while n * (n + 1) // 2 < trunc:
        terms[n * (n + 1) // 2] = (-1) ** n * (2 * n + 1)
        n += 1
    return ScaledSeries(terms, trunc=trunc)


# ----------------------------------------------------------------------
# Theta functions
# ----------------------------------------------------------------------


def theta_sum(a: ThetaArg, b: ThetaArg, trunc: int, scale: int = 1) -> ScaledSeries:
    """Ramanujan's ``f(a, b) = sum_n a**(n(n+1)/2) b**(n(n-1)/2)``."""
    alpha = Fraction(a.units(scale))
    beta = Fraction(b.units(scale))

    def sign(n: int) -> int:
        value = 1
        if a.sign < 0 and (n * (n + 1) // 2) & 1:
            value = -value
        if b.sign < 0 and (n * (n - 1) // 2) & 1:
            value = -value
        return value

    terms = _bilateral(
        (alpha + beta) / 2, (alpha - beta) / 2, Fraction(0), sign, trunc, scale
    )
    return ScaledSeries(terms, scale=scale, trunc=trunc)


def qpochhammer(x: ThetaArg, step: ThetaArg, trunc: int, scale: int = 1) -> ScaledSeries:
    """``(x; step)_inf = prod_{n>=0} (1 - x * step**n)`` for signed monomials."""
    base = x.units(scale)
    stride = step.units(scale)
    product = ScaledSeries.one(scale=scale, trunc=trunc)
    n = 0
    while base + n * stride < trunc:
        sign = x.sign * (step.sign if n & 1 else 1)
        factor = ScaledSeries(
            {0: 1, base + n * stride: -sign}, scale=scale, trunc=trunc
        )
        product = product * factor
        n += 1
    return product


def theta_product(a: ThetaArg, b: ThetaArg, trunc: int, scale: int = 1) -> ScaledSeries:
    """Triple-product form ``f(a, b) = (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf``."""
    ab = a * b
    return (
        qpochhammer(-a, ab, trunc, scale)
        * qpochhammer(-b, ab, trunc, scale)
        * qpochhammer(ab, ab, trunc, scale)
    )


# ----------------------------------------------------------------------
# Quintuple product
# ----------------------------------------------------------------------


def quintuple_sides(N: int, A: int, trunc: int) -> Tuple[ScaledSeries, ScaledSeries]:
    """Both sides of the quintuple product identity at ``q -> q**N, a -> -q**A``.

    Product side::

        prod_{n>=1} (1-q^(Nn)) (1+q^(N(n-1)+A)) (1+q^(Nn-A))
                    (1-q^(N(2n-1)+2A)) (1-q^(N(2n-1)-2A))

    Sum side::

        sum_k (-1)^k q^(Nk(3k-1)/2) [q^(3kA) + q^((1-3k)A)]
    """
    if not (0 < A and 2 * A < N):
        raise ValueError(f"need 0 < 2A < N, got N={N}, A={A}")

    step = ThetaArg(1, N)
    lhs = (
        qpochhammer(step, step, trunc)
        * qpochhammer(ThetaArg.neg_power(A), step, trunc)
        * qpochhammer(ThetaArg.neg_power(N - A), step, trunc)
        * qpochhammer(ThetaArg(1, N + 2 * A), ThetaArg(1, 2 * N), trunc)
        * qpochhammer(ThetaArg(1, N - 2 * A), ThetaArg(1, 2 * N), trunc)
    )

    def alternating(k: int) -> int:
        return -1 if k & 1 else 1

    half_n = Fraction(N, 2)
    rising = _bilateral(
        3 * half_n, -half_n + 3 * A, Fraction(0), alternating, trunc, 1
    )
    falling = _bilateral(
        3 * half_n, -half_n - 3 * A, Fraction(A), alternating, trunc, 1
    )
    for exponent, coeff in falling.items():
        rising[exponent] = rising.get(exponent, 0) + coeff
    rhs = ScaledSeries(rising, trunc=trunc)
    return lhs, rhs


def quintuple_check(N: int, A: int, trunc: int) -> Comparison:
    """Compare the product and sum sides of the quintuple product identity."""
    lhs, rhs = quintuple_sides(N, A, trunc)
    result = compare(lhs, rhs)
    logger.debug(f"quintuple N={N} A={A} trunc={trunc}: passed={result.passed}")
    return result
