"""Support, closed forms and product of the J functions for each prime."""

import logging
from typing import Iterator, Sequence

from ..closed_form import closed_forms, j_product, j_series_closed, theorem2_prediction
from ..identities import BaseIdentityCheck, CheckCase
from ..multisection import class_indices, j_oracle, nonzero_support, prime_context
from ..series import ScaledSeries

logger = logging.getLogger(__name__)

# Lowest terms of the nonzero J's lie well below q**(24N)
SUPPORT_ORDER_FACTOR = 24


def _indicator(residues, N: int) -> ScaledSeries:
    """``sum_r q**r`` over a residue set, so set equality becomes series equality.

    A failing case reports the first mismatching residue as its exponent.
    """
    return ScaledSeries({r: 1 for r in residues}, trunc=N)


class SupportCheck(BaseIdentityCheck):
    check_id = "thm1.support"
    description = "Exactly (N+1)/2 J_r are nonzero, at the equivalence-class indices"
    per_n = True

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            ctx = prime_context(N)
            support = nonzero_support(ctx, max(trunc, SUPPORT_ORDER_FACTOR * N))
            indices = class_indices(ctx)
            logger.debug(f"N={N}: support {sorted(support)}, classes {sorted(indices)}")
            yield CheckCase(
                f"N={N} residues", _indicator(support, N), _indicator(indices, N)
            )


class ClosedFormCheck(BaseIdentityCheck):
    check_id = "thm1.closed"
    description = "Theta-ratio closed form of every J_p equals the multisection oracle"
    per_n = True

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            ctx = prime_context(N)
            for form in closed_forms(ctx):
                yield CheckCase(
                    f"N={N} A={form.A} p={form.p}",
                    j_series_closed(ctx, form.A, trunc),
                    j_oracle(ctx, form.p, trunc),
                )


class ProductCheck(BaseIdentityCheck):
    check_id = "thm2.product"
    description = "Product of all nonzero J's is (-1)^(|m|(|m|-1)/2) q^Z"
    per_n = True

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        for N in primes:
            ctx = prime_context(N)
            prediction = theorem2_prediction(ctx)
            expected = ScaledSeries.monomial(prediction.sign, prediction.Z, trunc=trunc)
            yield CheckCase(f"N={N}", j_product(ctx, trunc), expected)
