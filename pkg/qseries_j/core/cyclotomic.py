"""
Series with coefficients in Z[w], w a primitive N-th root of unity.

A CycCoeff is kept reduced modulo ``Phi_N(x) = 1 + x + ... + x**(N-1)``:
a vector of N-1 integers over the basis ``1, w, ..., w**(N-2)``. Products
are formed in the cyclic ring ``Z[x]/(x**N - 1)`` and then folded back with
``w**(N-1) = -(1 + w + ... + w**(N-2))``, which amounts to subtracting the
last cyclic coordinate from all the others. In that basis an element is a
rational integer exactly when every coordinate but the first is zero.

Used to multiply out ``prod_p (w**p q**(1/N))_inf`` and the eigenvalue
factorization of the circulant built from the J functions.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import isprime

from .errors import IncompatibleScale, InternalInconsistency, NonRationalCoefficient, NotPrime
from .multisection import PrimeContext, j_expansion, j_family, root_euler_series
from .qfunctions import eta_quotient
from .series import Comparison, ScaledSeries, compare, div, rescale

logger = logging.getLogger(__name__)

DEFAULT_CYCLOTOMIC_ORDER = 250


def _fold(cyclic: Sequence[int]) -> Tuple[int, ...]:
    """Reduce a length-N cyclic vector to the canonical length N-1 form."""
    last = cyclic[-1]
    if not last:
        return tuple(cyclic[:-1])
    return tuple(c - last for c in cyclic[:-1])


class CycCoeff:
    """Element of Z[w] in canonical form."""

    __slots__ = ("N", "vec")

    def __init__(self, N: int, vec: Iterable[int]):
        vec = tuple(vec)
        if len(vec) == N:
            vec = _fold(vec)
        elif len(vec) != N - 1:
            raise ValueError(f"expected {N - 1} or {N} coordinates, got {len(vec)}")
        self.N = N
        self.vec = vec

    @classmethod
    def zero(cls, N: int) -> "CycCoeff":
        return cls(N, (0,) * (N - 1))

    @classmethod
    def integer(cls, N: int, value: int) -> "CycCoeff":
        return cls(N, (value,) + (0,) * (N - 2))

    @classmethod
    def one(cls, N: int) -> "CycCoeff":
        return cls.integer(N, 1)

    @classmethod
    def root_power(cls, N: int, j: int, coeff: int = 1) -> "CycCoeff":
        """``coeff * w**j`` for any integer j."""
        cyclic = [0] * N
        cyclic[j % N] = coeff
        return cls(N, cyclic)

    def lift(self) -> List[int]:
        """Cyclic length-N representative."""
        return list(self.vec) + [0]

    def is_zero(self) -> bool:
        return not any(self.vec)

    def is_rational(self) -> bool:
        return not any(self.vec[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise NonRationalCoefficient(f"{self} is not a rational integer")
        return self.vec[0]

    def as_root_power(self) -> Optional[Tuple[int, int]]:
        """``(c, j)`` when the element is ``c * w**j``, else None.

        ``w**(N-1)`` reduces to the all-equal vector ``(-c, ..., -c)``.
        """
        support = [i for i, c in enumerate(self.vec) if c]
        if len(support) == 1:
            i = support[0]
            return self.vec[i], i
        if len(support) == self.N - 1 and len(set(self.vec)) == 1:
            return -self.vec[0], self.N - 1
        if not support:
            return 0, 0
        return None

    def rotate(self, j: int) -> "CycCoeff":
        """Multiply by ``w**j``."""
        j %= self.N
        if not j:
            return self
        cyclic = self.lift()
        return CycCoeff(self.N, cyclic[-j:] + cyclic[:-j])

    def _check(self, other: "CycCoeff") -> None:
        if self.N != other.N:
            raise ValueError(f"cannot combine Z[w] elements of orders {self.N} and {other.N}")

    def __add__(self, other: "CycCoeff") -> "CycCoeff":
        self._check(other)
        return CycCoeff(self.N, (a + b for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other: "CycCoeff") -> "CycCoeff":
        self._check(other)
        return CycCoeff(self.N, (a - b for a, b in zip(self.vec, other.vec)))

    def __neg__(self) -> "CycCoeff":
        return CycCoeff(self.N, (-a for a in self.vec))

    def __mul__(self, other) -> "CycCoeff":
        if isinstance(other, int):
            return CycCoeff(self.N, (a * other for a in self.vec))
        self._check(other)
        N = self.N
        cyclic = [0] * N
        left = self.lift()
        right = other.lift()
        for i, a in enumerate(left):
            if not a:
                continue
            for j, b in enumerate(right):
                if b:
                    cyclic[(i + j) % N] += a * b
        return CycCoeff(N, cyclic)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational() and self.vec[0] == other
        if not isinstance(other, CycCoeff):
            return NotImplemented
        return self.N == other.N and self.vec == other.vec

    __hash__ = None

    def __repr__(self) -> str:
        return f"CycCoeff({self.N}, {list(self.vec)})"

    def __str__(self) -> str:
        pieces = []
        for i, c in enumerate(self.vec):
            if not c:
                continue
            base = "1" if i == 0 else ("w" if i == 1 else f"w^{i}")
            pieces.append(f"{c}*{base}" if i else str(c))
        return " + ".join(pieces) or "0"


def cyc_reduce(poly: Sequence[int], N: int) -> CycCoeff:
    """Reduce ``sum_i poly[i] * w**i`` (any degree) to canonical form."""
    cyclic = [0] * N
    for i, c in enumerate(poly):
        cyclic[i % N] += c
    return CycCoeff(N, cyclic)


class CycSeries:
    """Truncated series in ``q**(1/scale)`` with Z[w] coefficients."""

    __slots__ = ("N", "scale", "trunc", "terms")

    def __init__(
        self,
        N: int,
        terms: Mapping[int, CycCoeff],
        *,
        scale: int,
        trunc: int,
    ):
        self.N = N
        self.scale = scale
        self.trunc = trunc
        self.terms: Dict[int, CycCoeff] = {
            e: terms[e] for e in sorted(terms) if e < trunc and not terms[e].is_zero()
        }

    @classmethod
    def from_series(cls, a: ScaledSeries, N: int) -> "CycSeries":
        return cls(
            N,
            {e: CycCoeff.integer(N, c) for e, c in a.terms.items()},
            scale=a.scale,
            trunc=a.trunc,
        )

    def __mul__(self, other: "CycSeries") -> "CycSeries":
        if self.N != other.N or self.scale != other.scale:
            raise IncompatibleScale(
                f"cannot multiply cyclotomic series ({self.N}, {self.scale}) "
                f"and ({other.N}, {other.scale})"
            )
        N = self.N
        trunc = min(self.trunc, other.trunc)
        left = [(e, c.lift()) for e, c in self.terms.items()]
        right = [(e, c.as_root_power(), c.lift()) for e, c in other.terms.items()]

        acc: Dict[int, List[int]] = defaultdict(lambda: [0] * N)
        for ea, va in left:
            for eb, monomial, vb in right:
                e = ea + eb
                if e >= trunc:
                    break
                target = acc[e]
                if monomial is not None:
                    c, j = monomial
                    for i, a in enumerate(va):
                        if a:
                            target[(i + j) % N] += c * a
                else:
                    for i, a in enumerate(va):
                        if not a:
                            continue
                        for k, b in enumerate(vb):
                            if b:
                                target[(i + k) % N] += a * b
        return CycSeries(
            N,
            {e: CycCoeff(N, cyclic) for e, cyclic in acc.items()},
            scale=self.scale,
            trunc=trunc,
        )

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def to_integer_series(self) -> ScaledSeries:
        """Integer-coefficient series, or NonRationalCoefficient."""
        terms = {}
        for e, c in self.terms.items():
            if not c.is_rational():
                raise NonRationalCoefficient(
                    f"coefficient {c} at exponent {e}/{self.scale} is not a rational integer"
                )
            terms[e] = c.vec[0]
        return ScaledSeries(terms, scale=self.scale, trunc=self.trunc)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "scale": self.scale,
            "trunc": self.trunc,
            "terms": [
                {"exponent": e, "coeff": [str(v) for v in c.vec]}
                for e, c in self.terms.items()
            ],
        }


def omega_twist(a: ScaledSeries, p: int, N: Optional[int] = None) -> CycSeries:
    """Replace ``q**(1/N)`` by ``w**p q**(1/N)``: ``c t**e -> (c w**(p e)) t**e``."""
    if N is None:
        N = a.scale
    if not isprime(N):
        raise NotPrime(f"N={N} is not prime")
    if not 0 <= p < N:
        raise ValueError(f"twist {p} outside 0..{N - 1}")
    if a.scale != N:
        a = rescale(a, N)
    return CycSeries(
        N,
        {e: CycCoeff.root_power(N, p * e, c) for e, c in a.terms.items()},
        scale=N,
        trunc=a.trunc,
    )


def twisted_product(a: ScaledSeries, twists: Iterable[int], N: int) -> ScaledSeries:
    """``prod_p a(w**p t)`` over the given twists, as an integer series."""
    product: Optional[CycSeries] = None
    for p in twists:
        factor = omega_twist(a, p, N)
        product = factor if product is None else product * factor
        logger.debug(f"N={N}: multiplied twist {p}, {len(product.terms)} terms")
    if product is None:
        return ScaledSeries.one(scale=N, trunc=a.trunc)
    return product.to_integer_series()


def _to_q(series: ScaledSeries, N: int) -> ScaledSeries:
    for e in series.terms:
        if e % N:
            raise InternalInconsistency(
                f"product has a term at t^{e}, which is not a power of q = t^{N}"
            )
    return rescale(series, 1)


def q_order(trunc_t: int, N: int) -> int:
    return -(-trunc_t // N)


# ----------------------------------------------------------------------
# Root-of-unity product of the Euler function
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ProductIdentityReport:
    """Root-of-unity product of ``(t)_inf`` and its determinant counterpart."""

    N: int
    trunc: int
    product: ScaledSeries
    comparison: Comparison
    determinant: Comparison

    @property
    def passed(self) -> bool:
        return self.comparison.passed

    @property
    def residual(self) -> ScaledSeries:
        return self.comparison.residual

    @property
    def determinant_passed(self) -> bool:
        return self.determinant.passed

    @property
    def determinant_residual(self) -> ScaledSeries:
        return self.determinant.residual


def euler_root_product(ctx: PrimeContext, trunc_t: int) -> ScaledSeries:
    """``prod_{p=0}^{N-1} (w**p t)_inf`` rewritten as a series in q."""
    N = ctx.N
    product = twisted_product(root_euler_series(ctx, trunc_t), range(N), N)
    return _to_q(product, N)


def eigenvalue_product(ctx: PrimeContext, trunc_t: int) -> ScaledSeries:
    """``prod_{p=0}^{N-1}`` of the twisted J expansion, as a series in q."""
    N = ctx.N
    expansion = _expansion(ctx, trunc_t)
    return _to_q(twisted_product(expansion, range(N), N), N)


def cofactor_product(ctx: PrimeContext, trunc_t: int) -> ScaledSeries:
    """``prod_{p=1}^{N-1}`` of the twisted J expansion, at scale N."""
    N = ctx.N
    return twisted_product(_expansion(ctx, trunc_t), range(1, N), N)


def _expansion(ctx: PrimeContext, trunc_t: int) -> ScaledSeries:
    family = j_family(ctx, q_order(trunc_t, ctx.N))
    return j_expansion(ctx, family).truncate(trunc_t)


def product_identity_sides(
    ctx: PrimeContext, trunc_t: int
) -> Tuple[Tuple[ScaledSeries, ScaledSeries], Tuple[ScaledSeries, ScaledSeries]]:
    """``(product, expected)`` and ``(eigenvalue product, expected)``, in q."""
    N = ctx.N
    if trunc_t < 1:
        raise ValueError(f"trunc must be positive, got {trunc_t}")
    trunc_q = q_order(trunc_t, N)
    return (
        (euler_root_product(ctx, trunc_t), eta_quotient(N, trunc_q, N + 1, 1)),
        (eigenvalue_product(ctx, trunc_t), eta_quotient(N, trunc_q, N + 1, N + 1)),
    )


def product_identity_check(ctx: PrimeContext, trunc_t: int) -> ProductIdentityReport:
    """Compare the root-of-unity product with ``(q)**(N+1) / (q**N)``.

    The eigenvalue form of the circulant determinant is compared with
    ``(q)**(N+1) / (q**N)**(N+1)`` alongside.

    Raises:
        NonRationalCoefficient: If a cyclotomic component survives the product.
    """
    N = ctx.N
    (product, expected), eigen_sides = product_identity_sides(ctx, trunc_t)
    comparison = compare(product, expected)
    determinant = compare(*eigen_sides)
    logger.info(
        f"N={N}: root-of-unity product passed={comparison.passed}, "
        f"determinant passed={determinant.passed}"
    )
    return ProductIdentityReport(N, trunc_t, product, comparison, determinant)


# ----------------------------------------------------------------------
# Circulant determinant
# ----------------------------------------------------------------------


def circulant_entries(ctx: PrimeContext, trunc_t: int) -> List[ScaledSeries]:
    """``x_k = t**k J_k(t**N)`` for k = 0..N-1, at scale N."""
    N = ctx.N
    family = j_family(ctx, q_order(trunc_t, N))
    entries = []
    for k in range(N):
        if k in family:
            entries.append(rescale(family[k], N).shift(k).truncate(trunc_t))
        else:
            entries.append(ScaledSeries.zero(scale=N, trunc=trunc_t))
    return entries


def circulant_determinant(entries: Sequence[ScaledSeries]) -> ScaledSeries:
    """Determinant of ``M[i][j] = entries[(i - j) mod n]`` by Bareiss elimination.

    Every division in the elimination is exact, so the integer series ring
    is never left.
    """
    n = len(entries)
    if not n:
        raise ValueError("empty circulant")
    matrix = [[entries[(i - j) % n] for j in range(n)] for i in range(n)]
    sign = 1
    previous: Optional[ScaledSeries] = None
    for k in range(n - 1):
        if matrix[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not matrix[i][k].is_zero()), None)
            if swap is None:
                logger.debug(f"circulant of size {n} is singular at column {k}")
                return ScaledSeries.zero(scale=entries[0].scale, trunc=entries[0].trunc)
            matrix[k], matrix[swap] = matrix[swap], matrix[k]
            sign = -sign
        pivot = matrix[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = pivot * matrix[i][j] - matrix[i][k] * matrix[k][j]
                matrix[i][j] = value if previous is None else div(value, previous)
        previous = pivot
    return matrix[n - 1][n - 1] * sign
