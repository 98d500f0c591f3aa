"""Root-of-unity products and the circulant determinant, per prime.

Orders for these checks count powers of ``q**(1/N)``.
"""

from typing import Iterator, Sequence

from ..cyclotomic import (
    DEFAULT_CYCLOTOMIC_ORDER,
    circulant_determinant,
    circulant_entries,
    cofactor_product,
    eigenvalue_product,
    product_identity_sides,
    q_order,
)
from ..identities import BaseIdentityCheck, CheckCase
from ..multisection import prime_context, root_euler_series
from ..qfunctions import eta_quotient, euler_series
from ..series import div, power, rescale


class RootProductCheck(BaseIdentityCheck):
    check_id = "eq19.product"
    description = (
        "prod_p (w^p q^(1/N))_inf = (q)^(N+1)/(q^N), and the twisted J-expansion "
        "product = (q)^(N+1)/(q^N)^(N+1)"
    )
    per_n = True
    default_trunc = DEFAULT_CYCLOTOMIC_ORDER
    trunc_unit = "t"

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            (product, expected), (eigen, eigen_expected) = product_identity_sides(
                prime_context(N), trunc
            )
            yield CheckCase(f"N={N} Euler product", product, expected)
            yield CheckCase(f"N={N} eigenvalue product", eigen, eigen_expected)


class CofactorCheck(BaseIdentityCheck):
    """Reciprocal of the J expansion through the cofactor product."""

    check_id = "eq24.reciprocal"
    description = (
        "(q^N)_inf/(q^(1/N))_inf = (q^N)^(N+1)/(q)^(N+1) times the p=1..N-1 "
        "twisted J-expansion product"
    )
    per_n = True
    default_trunc = DEFAULT_CYCLOTOMIC_ORDER
    trunc_unit = "t"

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            ctx = prime_context(N)
            trunc_q = q_order(trunc, N)
            lhs = div(
                rescale(euler_series(N, trunc_q), N),
                root_euler_series(ctx, trunc),
            ).truncate(trunc)
            prefactor = div(
                power(euler_series(N, trunc_q), N + 1),
                power(euler_series(1, trunc_q), N + 1),
            )
            rhs = rescale(prefactor, N) * cofactor_product(ctx, trunc)
            yield CheckCase(f"N={N}", lhs, rhs)


class CirculantCheck(BaseIdentityCheck):
    """Bareiss determinant of the J circulant against its eigenvalue product."""

    check_id = "eq25.determinant"
    description = "det circulant(t^k J_k) = eigenvalue product = (q)^(N+1)/(q^N)^(N+1)"
    per_n = True
    supported_n = (5, 7)
    default_trunc = DEFAULT_CYCLOTOMIC_ORDER
    trunc_unit = "t"

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            ctx = prime_context(N)
            determinant = circulant_determinant(circulant_entries(ctx, trunc))
            expected = rescale(eta_quotient(N, q_order(trunc, N), N + 1, N + 1), N)
            yield CheckCase(f"N={N} determinant", determinant, expected)
            eigen = rescale(eigenvalue_product(ctx, trunc), N)
            yield CheckCase(f"N={N} eigenvalues", determinant, eigen)
