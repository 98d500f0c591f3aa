"""
Identities among the N=5 J functions.

Ramanujan writes the expansion as ``J_1 - q**(1/5) + q**(2/5) J_2``; indexed
by the power of ``q**(1/5)`` these are J_0, J_1 = -1 and J_2 here.
"""

from fractions import Fraction
from typing import Iterator, Sequence

from ..identities import BaseIdentityCheck, CheckCase
from ..multisection import j_expansion, prime_context
from ..qfunctions import eta_quotient, euler_series, partition_series
from ..series import ScaledSeries, dilate, div, multisect, power, rescale
from .common import ExpansionCheck, constant, family, q_power

N = 5


class N5ExpansionCheck(ExpansionCheck):
    check_id = "n5.expansion"
    description = "(q^(1/5))_inf/(q^5)_inf = J_0 + q^(1/5) J_1 + q^(2/5) J_2 with J_1 = -1"
    required_n = N


class ReciprocalCheck(BaseIdentityCheck):
    """Rationalized reciprocal of the expansion, compared at scale 5."""

    check_id = "n5.reciprocal"
    description = (
        "1/(J_0 - q^(1/5) + q^(2/5) J_2) as the quintic-denominator ratio "
        "(Ramanujan's J_1, J_2 are J_0, J_2 here)"
    )
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        ctx = prime_context(N)
        js = family(N, trunc)
        j0, j2 = js[0], js[2]
        trunc_t = N * trunc

        expansion = j_expansion(ctx, js).truncate(trunc_t)
        lhs = div(ScaledSeries.one(scale=N, trunc=trunc_t), expansion)

        parts = [
            j0**4 + (3 * j2).shift(1),
            j0**3 + (2 * j2**2).shift(1),
            2 * j0**2 + (j2**3).shift(1),
            3 * j0 + (j2**4).shift(1),
            constant(5, trunc),
        ]
        numerator = None
        for k, part in enumerate(parts):
            piece = rescale(part, N).shift(k)
            numerator = piece if numerator is None else numerator + piece
        denominator = j0**5 - q_power(11, 1, trunc) + (j2**5).shift(2)
        rhs = div(numerator.truncate(trunc_t), rescale(denominator.truncate(trunc), N))
        yield CheckCase("N=5", lhs, rhs)


class JJProductCheck(BaseIdentityCheck):
    check_id = "n5.jj"
    description = "J_0 J_2 = -1 (Ramanujan's J_1 J_2 = -1)"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = family(N, trunc)
        yield CheckCase("J_0 J_2", js[0] * js[2], constant(-1, trunc))


class QuinticCheck(BaseIdentityCheck):
    check_id = "n5.quintic"
    description = "J_0^5 - 11q + q^2 J_2^5 = (q)^6/(q^5)^6"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = family(N, trunc)
        j0, j2 = js[0], js[2]
        lhs = j0**5 - q_power(11, 1, trunc) + (j2**5).shift(2)
        yield CheckCase("N=5", lhs, eta_quotient(N, trunc, 6, 6))


class PartitionCheck(BaseIdentityCheck):
    """``sum p(5n+4) q**n = 5 (q**5)**5 / (q)**6``, and hence 5 | p(5n+4)."""

    check_id = "n5.partition"
    description = "sum p(5n+4) q^n = 5 (q^5)^5/(q)^6; every p(5n+4) is divisible by 5"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        # Reading q as q**(1/5) puts p(5n+4) in residue class 4
        generating = dilate(partition_series(N * trunc), Fraction(1, N))
        lhs = multisect(generating, N, 4)
        rhs = 5 * div(power(euler_series(N, trunc), 5), power(euler_series(1, trunc), 6))
        yield CheckCase("generating function", lhs, rhs)

        remainders = lhs.map_coefficients(lambda c: c % 5)
        yield CheckCase("p(5n+4) mod 5", remainders, ScaledSeries.zero(trunc=lhs.trunc))


class N5DeterminantCheck(BaseIdentityCheck):
    check_id = "n5.det"
    description = "J_0^5 + q(5 J_0 J_2 - 1 - 5 J_0^2 J_2^2) + q^2 J_2^5 = (q)^6/(q^5)^6"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = family(N, trunc)
        j0, j2 = js[0], js[2]
        middle = 5 * j0 * j2 - 1 - 5 * j0**2 * j2**2
        lhs = j0**5 + middle.shift(1) + (j2**5).shift(2)
        yield CheckCase("N=5", lhs, eta_quotient(N, trunc, 6, 6))
