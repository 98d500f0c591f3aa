"""
Brute-force J functions by multisecting the pentagonal expansion.

For a prime N > 3 and ``t = q**(1/N)``::

    (t)_inf / (q**N)_inf = J_0(q) + t J_1(q) + ... + t**(N-1) J_{N-1}(q)

Each J_r is read off the residue-class-r part of the pentagonal series of
``(t)_inf`` and divided by ``(q**N)_inf``. The residues ``a`` of the
pentagonal index ``n = kN + a`` fall into equivalence classes by the value
of ``a(3a-1)/2 mod N``; each class yields exactly one nonzero J.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Mapping, Tuple

from sympy import isprime

from .errors import InternalInconsistency, NotPrime, UnsupportedPrime
from .qfunctions import euler_series
from .series import ScaledSeries, dilate, div, multisect, reassemble

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeContext:
    """A prime N > 3 written as ``N = |6m - 1|``."""

    N: int
    m: int

    @property
    def absm(self) -> int:
        return abs(self.m)

    @property
    def half(self) -> int:
        """Largest A value, ``(N-1)/2``."""
        return (self.N - 1) // 2

    @property
    def class_count(self) -> int:
        return (self.N + 1) // 2

    @property
    def singleton(self) -> int:
        """The residue whose equivalence class has a single element."""
        return self.m if self.m > 0 else self.N + self.m


def prime_context(N: int) -> PrimeContext:
    """Validate N and find m with ``|6m - 1| = N``.

    Raises:
        UnsupportedPrime: For N = 2 or 3.
        NotPrime: For any non-prime N.
    """
    if N in (2, 3):
        raise UnsupportedPrime(f"N={N} is prime but must be greater than 3")
    if N < 2 or not isprime(N):
        raise NotPrime(f"N={N} is not prime")

    if (N + 1) % 6 == 0:
        m = (N + 1) // 6
    else:
        m = (1 - N) // 6
    ctx = PrimeContext(N=N, m=m)
    if abs(6 * m - 1) != N or ctx.absm != (N + 1) // 6:
        raise InternalInconsistency(f"no m with |6m-1| = {N}")
    return ctx


class ClassGroup(str, Enum):
    """Parity group of a two-element class (even or odd element difference)."""

    EVEN = "I"
    ODD = "II"
    SINGLETON = "singleton"


@dataclass(frozen=True)
class EquivClass:
    """Residues a in [0, N-1] sharing ``a(3a-1)/2 mod N``."""

    elements: Tuple[int, ...]
    A: int
    p: int
    group: ClassGroup


def pentagonal_residue(a: int, N: int) -> int:
    return a * (3 * a - 1) // 2 % N


def index_from_a(A: int, N: int) -> int:
    """``p = ((N - 6A)**2 - 1)/24 mod N``, dividing by 24 before reducing."""
    numerator = (N - 6 * A) ** 2 - 1
    if numerator % 24:
        raise InternalInconsistency(f"24 does not divide (N-6A)^2-1 for N={N}, A={A}")
    return numerator // 24 % N


@lru_cache(maxsize=None)
def equivalence_classes(ctx: PrimeContext) -> Tuple[EquivClass, ...]:
    """Partition of ``0..N-1`` into ``(N+1)/2`` classes, sorted by A."""
    N = ctx.N
    buckets: Dict[int, List[int]] = defaultdict(list)
    for a in range(N):
        buckets[pentagonal_residue(a, N)].append(a)

    classes: List[EquivClass] = []
    for p, elements in buckets.items():
        if len(elements) == 1:
            A, group = 0, ClassGroup.SINGLETON
        elif len(elements) == 2:
            a1, a2 = elements
            if (a2 - a1) % 2 == 0:
                A, group = (a2 - a1) // 2, ClassGroup.EVEN
            else:
                A, group = (N - a2 + a1) // 2, ClassGroup.ODD
        else:
            raise InternalInconsistency(
                f"class {elements} for N={N} has more than two elements"
            )
        if index_from_a(A, N) != p:
            raise InternalInconsistency(
                f"class {elements} of N={N}: index {p} disagrees with A={A}"
            )
        classes.append(EquivClass(tuple(elements), A, p, group))

    classes.sort(key=lambda c: c.A)
    if [c.A for c in classes] != list(range(ctx.class_count)):
        raise InternalInconsistency(f"A values of N={N} are not 0..{ctx.half}")
    logger.debug(f"N={N}: {len(classes)} equivalence classes")
    return tuple(classes)


def class_indices(ctx: PrimeContext) -> FrozenSet[int]:
    return frozenset(c.p for c in equivalence_classes(ctx))


# ----------------------------------------------------------------------
# The oracle
# ----------------------------------------------------------------------


def root_euler_series(ctx: PrimeContext, trunc: int) -> ScaledSeries:
    """Pentagonal series of ``(q**(1/N))_inf`` at scale N, known below ``trunc`` t-units."""
    return dilate(euler_series(1, trunc), Fraction(1, ctx.N))


@lru_cache(maxsize=1024)
def j_oracle(ctx: PrimeContext, r: int, trunc: int) -> ScaledSeries:
    """J_r(q) to order ``trunc`` from multisection and division by ``(q**N)_inf``."""
    if not 0 <= r < ctx.N:
        raise ValueError(f"residue {r} outside 0..{ctx.N - 1}")
    if trunc < 1:
        raise ValueError(f"trunc must be positive, got {trunc}")
    component = multisect(root_euler_series(ctx, trunc * ctx.N), ctx.N, r)
    j = div(component.truncate(trunc), euler_series(ctx.N, trunc))
    logger.debug(f"J_{r} for N={ctx.N}: {len(j.terms)} nonzero terms below q^{trunc}")
    return j


@lru_cache(maxsize=256)
def j_family(ctx: PrimeContext, trunc: int) -> Mapping[int, ScaledSeries]:
    """Every nonzero J_p of N, keyed by p."""
    family = {p: j_oracle(ctx, p, trunc) for p in sorted(class_indices(ctx))}
    logger.info(f"computed {len(family)} J functions for N={ctx.N} to q^{trunc}")
    return MappingProxyType(family)


def nonzero_support(ctx: PrimeContext, trunc: int) -> FrozenSet[int]:
    """Residues r whose oracle J_r has a nonzero coefficient below ``trunc``.

    Every nonzero J has its lowest term below q**N, so ``trunc`` must be at
    least N for the support to be complete.
    """
    if trunc < ctx.N:
        raise ValueError(f"trunc must be at least N={ctx.N} to find the support, got {trunc}")
    return frozenset(
        r for r in range(ctx.N) if not j_oracle(ctx, r, trunc).is_zero()
    )


def j_expansion(ctx: PrimeContext, family: Mapping[int, ScaledSeries]) -> ScaledSeries:
    """``sum_p t**p J_p(t**N)`` at scale N."""
    return reassemble(family, ctx.N, ctx.N)
