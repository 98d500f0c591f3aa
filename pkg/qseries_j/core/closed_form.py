"""
Closed forms for the J functions and their product.

For ``0 <= A <= (N-1)/2`` the function with index
``p = ((N-6A)**2 - 1)/24 mod N`` is::

    J_p = (-1)**(A + |m|) q**X f(-q**(2A), -q**(N-2A)) / f(-q**A, -q**(N-A))

with ``X = floor(((N-6A)**2 - 1) / 24N)``; for ``A = 0`` the theta ratio is
absent. The product of all nonzero J's collapses to ``(-1)**(|m|(|m|-1)/2) q**Z``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InternalInconsistency
from .multisection import PrimeContext, class_indices, index_from_a, j_family
from .qfunctions import ThetaArg, theta_sum
from .series import Comparison, ScaledSeries, compare

logger = logging.getLogger(__name__)

ThetaPair = Tuple[int, int]


@dataclass(frozen=True)
class JClosedForm:
    """Symbolic descriptor of one nonzero J_p."""

    N: int
    p: int
    A: int
    sign: int
    X: int
    theta_num: Optional[ThetaPair]
    theta_den: Optional[ThetaPair]

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "p": self.p,
            "A": self.A,
            "sign": self.sign,
            "X": self.X,
            "theta_num": list(self.theta_num) if self.theta_num else None,
            "theta_den": list(self.theta_den) if self.theta_den else None,
        }

    def formula(self) -> str:
        sign = "-" if self.sign < 0 else ""
        power = "" if self.X == 0 else ("q" if self.X == 1 else f"q^{self.X}")
        if self.theta_num is None:
            return f"{sign}{power or '1'}"
        num = "f({}, {})".format(*(ThetaArg.neg_power(e) for e in self.theta_num))
        den = "f({}, {})".format(*(ThetaArg.neg_power(e) for e in self.theta_den))
        prefix = f"{sign}{power} " if power else sign
        return f"{prefix}{num}/{den}"


def j_closed_form(ctx: PrimeContext, A: int) -> JClosedForm:
    """Descriptor of the J function labelled by A."""
    N = ctx.N
    if not 0 <= A <= ctx.half:
        raise ValueError(f"A={A} outside 0..{ctx.half} for N={N}")
    numerator = (N - 6 * A) ** 2 - 1
    p = index_from_a(A, N)
    X = numerator // (24 * N)
    sign = -1 if (A + ctx.absm) & 1 else 1
    if A == 0:
        return JClosedForm(N, p, A, sign, X, None, None)
    return JClosedForm(N, p, A, sign, X, (2 * A, N - 2 * A), (A, N - A))


def closed_forms(ctx: PrimeContext) -> List[JClosedForm]:
    return [j_closed_form(ctx, A) for A in range(ctx.half + 1)]


def j_series_closed(ctx: PrimeContext, A: int, trunc: int) -> ScaledSeries:
    """Evaluate the closed form of J_p (p determined by A) to order ``trunc``."""
    form = j_closed_form(ctx, A)
    if form.theta_num is None:
        return ScaledSeries.monomial(form.sign, form.X, trunc=trunc)
    num = theta_sum(*(ThetaArg.neg_power(e) for e in form.theta_num), trunc)
    den = theta_sum(*(ThetaArg.neg_power(e) for e in form.theta_den), trunc)
    ratio = num / den
    return (ratio * form.sign).shift(form.X).truncate(trunc)


# ----------------------------------------------------------------------
# Product of all J functions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ProductPrediction:
    """``prod_p J_p = sign * q**Z``."""

    sign: int
    Z: int


def theorem2_prediction(ctx: PrimeContext) -> ProductPrediction:
    """Sign and exponent of the product of all nonzero J's.

    Z is computed from the index sum and again as the sum of the X values;
    the sign from ``|m|`` and again from the individual signs.

    Raises:
        InternalInconsistency: If Z is not a non-negative integer or the two
            computations disagree.
    """
    N = ctx.N
    Z = Fraction((N - 1) * (N + 1) ** 2, 48 * N) - Fraction(sum(class_indices(ctx)), N)
    if Z.denominator != 1 or Z < 0:
        raise InternalInconsistency(f"Z={Z} for N={N} is not a non-negative integer")
    sign = -1 if (ctx.absm * (ctx.absm - 1) // 2) & 1 else 1

    forms = closed_forms(ctx)
    floor_sum = sum(form.X for form in forms)
    sign_product = 1
    for form in forms:
        sign_product *= form.sign
    if floor_sum != Z or sign_product != sign:
        raise InternalInconsistency(
            f"N={N}: product predicted as {sign}q^{Z} but the factors give "
            f"{sign_product}q^{floor_sum}"
        )
    return ProductPrediction(sign=sign, Z=Z.numerator)


def j_product(ctx: PrimeContext, trunc: int) -> ScaledSeries:
    """Product of every nonzero oracle J_p of N."""
    product = ScaledSeries.one(trunc=trunc)
    for j in j_family(ctx, trunc).values():
        product = product * j
    return product


def theorem2_check(ctx: PrimeContext, trunc: int) -> Comparison:
    """Multiply the oracle J's and compare with ``sign * q**Z``."""
    prediction = theorem2_prediction(ctx)
    if trunc < prediction.Z + 2:
        raise ValueError(f"trunc must be at least Z+2={prediction.Z + 2}, got {trunc}")
    product = j_product(ctx, trunc)
    expected = ScaledSeries.monomial(prediction.sign, prediction.Z, trunc=trunc)
    result = compare(product, expected)
    logger.info(
        f"N={ctx.N}: product of J's vs {prediction.sign}q^{prediction.Z} "
        f"passed={result.passed}"
    )
    return result
