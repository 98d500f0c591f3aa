"""Cross-checks of the theta, quintuple product and Jacobi cube generators."""

from typing import Iterator, Sequence

from ..identities import BaseIdentityCheck, CheckCase
from ..multisection import prime_context
from ..qfunctions import (
    ThetaArg,
    euler_series,
    jacobi_cube,
    quintuple_sides,
    theta_product,
    theta_sum,
)
from ..series import power


class ThetaProductSumCheck(BaseIdentityCheck):
    """``f(a, b)`` as a bilateral sum against its triple-product form."""

    check_id = "theta.prodsum"
    description = "f(-q^a, -q^b) sum form = product form for every theta pair of the J closed forms"
    per_n = True

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            ctx = prime_context(N)
            pairs = set()
            for A in range(1, ctx.half + 1):
                pairs.add((2 * A, N - 2 * A))
                pairs.add((A, N - A))
            for a, b in sorted(pairs):
                x, y = ThetaArg.neg_power(a), ThetaArg.neg_power(b)
                yield CheckCase(
                    f"N={N} f(-q^{a}, -q^{b})",
                    theta_sum(x, y, trunc),
                    theta_product(x, y, trunc),
                )


class QuintupleCheck(BaseIdentityCheck):
    check_id = "quintuple"
    description = "Quintuple product identity at q -> q^N, a -> -q^A for every A of N"
    per_n = True

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            for A in range(1, prime_context(N).half + 1):
                lhs, rhs = quintuple_sides(N, A, trunc)
                yield CheckCase(f"N={N} A={A}", lhs, rhs)


class JacobiCubeCheck(BaseIdentityCheck):
    check_id = "jacobi"
    description = "(q)^3_inf = sum (-1)^n (2n+1) q^(n(n+1)/2)"

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        yield CheckCase("cube", power(euler_series(1, trunc), 3), jacobi_cube(trunc))
