"""
Exact truncated formal power series with fractional exponents.

A ScaledSeries stores integer coefficients against integer exponents ``e``
that stand for ``q**(e/scale)``. Everything below ``trunc`` is known exactly;
nothing at or above it is claimed. Ring operations never extend that
precision: the result of combining two series is only known as far as both
operands are.
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .errors import (
    DivisionByZeroSeries,
    IncompatibleScale,
    NegativeValuation,
    NonIntegerQuotient,
)

logger = logging.getLogger(__name__)

Coefficients = Union[Mapping[int, int], Iterable[Tuple[int, int]]]


class ScaledSeries:
    """Truncated power series in ``q**(1/scale)`` with integer coefficients."""

    __slots__ = ("_scale", "_trunc", "_terms")

    def __init__(self, terms: Coefficients = (), *, scale: int = 1, trunc: int):
        if scale < 1:
            raise ValueError(f"scale must be a positive integer, got {scale}")
        if trunc < 0:
            raise ValueError(f"trunc must be non-negative, got {trunc}")

        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: Dict[int, int] = {}
        for exponent, coeff in items:
            if exponent < 0:
                raise NegativeValuation(f"negative exponent {exponent} in series")
            if exponent >= trunc or not coeff:
                continue
            canonical[exponent] = canonical.get(exponent, 0) + coeff
        self._scale = scale
        self._trunc = trunc
        self._terms = MappingProxyType(
            {e: canonical[e] for e in sorted(canonical) if canonical[e]}
        )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, *, scale: int = 1, trunc: int) -> "ScaledSeries":
        return cls((), scale=scale, trunc=trunc)

    @classmethod
    def one(cls, *, scale: int = 1, trunc: int) -> "ScaledSeries":
        return cls({0: 1}, scale=scale, trunc=trunc)

    @classmethod
    def monomial(
        cls, coeff: int, exponent: int, *, scale: int = 1, trunc: int
    ) -> "ScaledSeries":
        """``coeff * q**(exponent/scale)`` known below ``trunc``."""
        return cls({exponent: coeff}, scale=scale, trunc=trunc)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def scale(self) -> int:
        return self._scale

    @property
    def trunc(self) -> int:
        return self._trunc

    @property
    def terms(self) -> Mapping[int, int]:
        return self._terms

    def items(self) -> List[Tuple[int, int]]:
        """Nonzero terms sorted by ascending exponent."""
        return list(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        """Coefficient of ``q**(exponent/scale)``; only defined below trunc."""
        if exponent >= self._trunc:
            raise ValueError(
                f"coefficient at exponent {exponent} is beyond precision {self._trunc}"
            )
        return self._terms.get(exponent, 0)

    def coefficients(self) -> List[int]:
        """Dense coefficient list for exponents ``0 .. trunc-1``."""
        dense = [0] * self._trunc
        for exponent, coeff in self._terms.items():
            dense[exponent] = coeff
        return dense

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> Optional[int]:
        """Lowest exponent with a nonzero coefficient, None for the zero series."""
        for exponent in self._terms:
            return exponent
        return None

    def leading_term(self) -> Optional[Tuple[int, int]]:
        for item in self._terms.items():
            return item
        return None

    def q_exponent(self, exponent: int) -> Fraction:
        """Exponent in units of q for a stored exponent."""
        return Fraction(exponent, self._scale)

    # ------------------------------------------------------------------
    # Derived series
    # ------------------------------------------------------------------

    def truncate(self, trunc: int) -> "ScaledSeries":
        """Drop everything at or above ``trunc`` (never raises precision)."""
        if trunc >= self._trunc:
            return self
        return ScaledSeries(self._terms, scale=self._scale, trunc=trunc)

    def shift(self, exponent: int) -> "ScaledSeries":
        """Multiply by the exact monomial ``q**(exponent/scale)``."""
        if exponent == 0:
            return self
        valuation = self.valuation()
        if exponent < 0 and valuation is not None and valuation + exponent < 0:
            raise NegativeValuation(
                f"shift by {exponent} below valuation {valuation}"
            )
        return ScaledSeries(
            ((e + exponent, c) for e, c in self._terms.items()),
            scale=self._scale,
            trunc=max(0, self._trunc + exponent),
        )

    def map_coefficients(self, func: Callable[[int], int]) -> "ScaledSeries":
        return ScaledSeries(
            ((e, func(c)) for e, c in self._terms.items()),
            scale=self._scale,
            trunc=self._trunc,
        )

    # ------------------------------------------------------------------
    # Operators
    # ------------------------------------------------------------------

    def _promote(self, other) -> "ScaledSeries":
        if isinstance(other, ScaledSeries):
            return other
        if isinstance(other, int):
            return ScaledSeries({0: other}, scale=self._scale, trunc=self._trunc)
        return NotImplemented

    def __neg__(self) -> "ScaledSeries":
        return self.map_coefficients(lambda c: -c)

    def __pos__(self) -> "ScaledSeries":
        return self

    def __add__(self, other) -> "ScaledSeries":
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "ScaledSeries":
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other) -> "ScaledSeries":
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other) -> "ScaledSeries":
        if isinstance(other, int):
            return self.map_coefficients(lambda c: c * other)
        if not isinstance(other, ScaledSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledSeries":
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __rtruediv__(self, other) -> "ScaledSeries":
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    def __pow__(self, k: int) -> "ScaledSeries":
        return power(self, k)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._promote(other)
        if not isinstance(other, ScaledSeries):
            return NotImplemented
        left, right = align(self, other)
        trunc = min(left.trunc, right.trunc)
        return left.truncate(trunc).terms == right.truncate(trunc).terms

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"ScaledSeries({dict(self._terms)!r}, scale={self._scale}, "
            f"trunc={self._trunc})"
        )

    def __str__(self) -> str:
        return self.render()

    def render(self, max_terms: Optional[int] = None) -> str:
        """Human-readable form such as ``1 - q - q^2 + O(q^3)``."""
        pieces: List[str] = []
        items = self.items()
        shown = items if max_terms is None else items[:max_terms]
        for exponent, coeff in shown:
            power_str = _format_power(self.q_exponent(exponent))
            magnitude = abs(coeff)
            if not power_str:
                body = str(magnitude)
            elif magnitude == 1:
                body = power_str
            else:
                body = f"{magnitude}*{power_str}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        if max_terms is not None and len(items) > max_terms:
            pieces.append("+ ...")
        order = _format_power(self.q_exponent(self._trunc)) or "1"
        pieces.append(f"+ O({order})")
        if len(pieces) == 1:
            return pieces[0][2:]
        return " ".join(pieces)

    # ------------------------------------------------------------------
    # JSON
    # ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "scale": self._scale,
            "trunc": self._trunc,
            "terms": [[e, str(c)] for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, payload: Mapping) -> "ScaledSeries":
        return cls(
            ((int(e), int(c)) for e, c in payload["terms"]),
            scale=int(payload["scale"]),
            trunc=int(payload["trunc"]),
        )


def _format_power(exponent: Fraction) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return "q"
    if exponent.denominator == 1:
        return f"q^{exponent.numerator}"
    return f"q^({exponent})"


# ----------------------------------------------------------------------
# Scale bookkeeping
# ----------------------------------------------------------------------


def rescale(a: ScaledSeries, scale: int) -> ScaledSeries:
    """Re-express ``a`` with exponent denominator ``scale`` (same value).

    Raises:
        IncompatibleScale: If an exponent of ``a`` is not a multiple of
            ``1/scale``.
    """
    if scale < 1:
        raise IncompatibleScale(f"scale must be positive, got {scale}")
    if scale == a.scale:
        return a

    common = math.lcm(a.scale, scale)
    up = common // a.scale
    exponents = {e * up: c for e, c in a.terms.items()}
    trunc = a.trunc * up

    down = common // scale
    if down == 1:
        return ScaledSeries(exponents, scale=scale, trunc=trunc)
    for exponent in exponents:
        if exponent % down:
            raise IncompatibleScale(
                f"exponent {Fraction(exponent, common)} of q is not a multiple of 1/{scale}"
            )
    return ScaledSeries(
        ((e // down, c) for e, c in exponents.items()),
        scale=scale,
        trunc=-(-trunc // down),
    )


def align(a: ScaledSeries, b: ScaledSeries) -> Tuple[ScaledSeries, ScaledSeries]:
    """Bring two series onto their least common exponent denominator."""
    if a.scale == b.scale:
        return a, b
    common = math.lcm(a.scale, b.scale)
    return rescale(a, common), rescale(b, common)


def dilate(a: ScaledSeries, factor: Union[int, Fraction]) -> ScaledSeries:
    """Substitute ``q -> q**factor``.

    ``dilate(s, Fraction(1, N))`` turns a series in q into the same series in
    ``q**(1/N)``; ``dilate(s, N)`` gives the series in ``q**N``.
    """
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError(f"dilation factor must be positive, got {factor}")
    num, den = factor.numerator, factor.denominator
    return ScaledSeries(
        ((e * num, c) for e, c in a.terms.items()),
        scale=a.scale * den,
        trunc=a.trunc * num,
    )


# ----------------------------------------------------------------------
# Ring operations
# ----------------------------------------------------------------------


def add(a: ScaledSeries, b: ScaledSeries) -> ScaledSeries:
    a, b = align(a, b)
    trunc = min(a.trunc, b.trunc)
    total: Dict[int, int] = dict(a.truncate(trunc).terms)
    for exponent, coeff in b.terms.items():
        if exponent < trunc:
            total[exponent] = total.get(exponent, 0) + coeff
    return ScaledSeries(total, scale=a.scale, trunc=trunc)


def mul(a: ScaledSeries, b: ScaledSeries) -> ScaledSeries:
    """Cauchy product; products at or beyond the common precision are discarded."""
    a, b = align(a, b)
    trunc = min(a.trunc, b.trunc)
    if len(a.terms) > len(b.terms):
        a, b = b, a

    inner = b.items()
    product: Dict[int, int] = defaultdict(int)
    for ea, ca in a.terms.items():
        limit = trunc - ea
        if limit <= 0:
            break
        for eb, cb in inner:
            if eb >= limit:
                break
            product[ea + eb] += ca * cb
    return ScaledSeries(product, scale=a.scale, trunc=trunc)


def div(a: ScaledSeries, b: ScaledSeries) -> ScaledSeries:
    """Exact quotient ``a / b`` by long division over the integers.

    The lowest term of ``b`` (exponent ``v``) must divide every step exactly;
    the quotient is known below ``min(a.trunc, b.trunc) - v``.

    Raises:
        DivisionByZeroSeries: If ``b`` vanishes below its precision.
        NegativeValuation: If ``a`` has a term below ``v``.
        NonIntegerQuotient: If a quotient coefficient is not an integer.
    """
    a, b = align(a, b)
    lead = b.leading_term()
    if lead is None:
        raise DivisionByZeroSeries(
            f"divisor is zero up to q^({Fraction(b.trunc, b.scale)})"
        )
    v, lead_coeff = lead
    valuation = a.valuation()
    if valuation is not None and valuation < v:
        raise NegativeValuation(
            f"dividend valuation {valuation} is below divisor valuation {v}"
        )

    trunc = max(0, min(a.trunc, b.trunc) - v)
    tail = [(e - v, c) for e, c in b.items()[1:] if e - v < trunc]
    dividend = a.terms
    quotient = [0] * trunc
    for n in range(trunc):
        acc = dividend.get(n + v, 0)
        for offset, coeff in tail:
            if offset > n:
                break
            prior = quotient[n - offset]
            if prior:
                acc -= coeff * prior
        if acc:
            value, remainder = divmod(acc, lead_coeff)
            if remainder:
                raise NonIntegerQuotient(
                    f"coefficient {Fraction(acc, lead_coeff)} at exponent "
                    f"{Fraction(n, a.scale)} is not an integer"
                )
            quotient[n] = value
    logger.debug(
        f"div: {len(dividend)} / {len(b.terms)} terms -> {trunc} coefficients"
    )
    return ScaledSeries(enumerate(quotient), scale=a.scale, trunc=trunc)


def power(a: ScaledSeries, k: int) -> ScaledSeries:
    """``a**k`` by binary exponentiation; ``k = 0`` gives 1."""
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    result = ScaledSeries.one(scale=a.scale, trunc=a.trunc)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def multisect(a: ScaledSeries, N: int, r: int) -> ScaledSeries:
    """Residue-class component ``S_r`` with ``a = sum_r u**r * S_r(u**N)``.

    ``u = q**(1/a.scale)``. The component is returned as a series in
    ``u**N``, which is ``q**(N/a.scale)``, so its scale is ``a.scale // N``;
    ``rescale(S_r, a.scale)`` is then exactly ``S_r(u**N)``.

    Raises:
        IncompatibleScale: If ``N`` does not divide ``a.scale``.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if not 0 <= r < N:
        raise ValueError(f"residue {r} outside 0..{N - 1}")
    if a.scale % N:
        raise IncompatibleScale(
            f"cannot multisect a series at scale {a.scale} by {N}"
        )
    return ScaledSeries(
        [((e - r) // N, c) for e, c in a.terms.items() if e % N == r],
        scale=a.scale // N,
        trunc=max(0, -(-(a.trunc - r) // N)),
    )


def reassemble(components: Mapping[int, ScaledSeries], N: int, scale: int) -> ScaledSeries:
    """Inverse of multisection: ``sum_r u**r * S_r(u**N)`` at ``scale``."""
    if not components:
        raise ValueError("nothing to reassemble")
    total: Optional[ScaledSeries] = None
    for r, component in sorted(components.items()):
        if component.scale * N != scale:
            raise IncompatibleScale(
                f"component {r} at scale {component.scale} does not sit in u**{N}"
            )
        piece = rescale(component, scale).shift(r)
        total = piece if total is None else total + piece
    return total


# ----------------------------------------------------------------------
# Comparison
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing two series coefficient by coefficient."""

    passed: bool
    residual: ScaledSeries
    first_bad_exponent: Optional[Fraction]

    @property
    def trunc(self) -> Fraction:
        return Fraction(self.residual.trunc, self.residual.scale)


def compare(lhs: ScaledSeries, rhs: ScaledSeries) -> Comparison:
    """Exact comparison up to the smaller precision of the two sides."""
    residual = lhs - rhs
    first = residual.valuation()
    return Comparison(
        passed=first is None,
        residual=residual,
        first_bad_exponent=None if first is None else residual.q_exponent(first),
    )

