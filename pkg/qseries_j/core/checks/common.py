"""Helpers shared by the fixed-prime checks."""

from typing import Iterator, Mapping, Sequence

from ..identities import BaseIdentityCheck, CheckCase
from ..multisection import j_expansion, j_family, prime_context, root_euler_series
from ..qfunctions import euler_series
from ..series import ScaledSeries, div, rescale


def family(N: int, trunc: int) -> Mapping[int, ScaledSeries]:
    """Oracle J's of the prime N to order ``trunc``, keyed by index."""
    return j_family(prime_context(N), trunc)


def constant(value: int, trunc: int) -> ScaledSeries:
    return ScaledSeries.monomial(value, 0, trunc=trunc)


def q_power(coeff: int, exponent: int, trunc: int) -> ScaledSeries:
    return ScaledSeries.monomial(coeff, exponent, trunc=trunc)


class ExpansionCheck(BaseIdentityCheck):
    """``(q**(1/N))_inf / (q**N)_inf`` against ``sum_p q**(p/N) J_p``."""

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            ctx = prime_context(N)
            quotient = div(
                root_euler_series(ctx, trunc * N),
                rescale(euler_series(N, trunc), N),
            )
            yield CheckCase(f"N={N}", quotient, j_expansion(ctx, j_family(ctx, trunc)))
