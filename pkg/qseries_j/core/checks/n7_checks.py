"""
Identities among the N=7 J functions.

The nonzero J's of N=7 are J_0, J_1, J_2 = -1 and J_5 (Ramanujan's J_1,
J_2, -1 and J_3). Identities with J's in a denominator are checked with
the denominators cleared.
"""

from typing import Iterator, Mapping, Sequence

from ..identities import BaseIdentityCheck, CheckCase
from ..qfunctions import eta_quotient
from ..series import ScaledSeries
from .common import ExpansionCheck, constant, family, q_power

N = 7


def _js(trunc: int) -> Mapping[int, ScaledSeries]:
    return family(N, trunc)


def seventh_powers(js: Mapping[int, ScaledSeries]) -> ScaledSeries:
    """``J_0**7 + q J_1**7 + q**5 J_5**7``."""
    j0, j1, j5 = js[0], js[1], js[5]
    return j0**7 + (j1**7).shift(1) + (j5**7).shift(5)


def fifth_power_form(js: Mapping[int, ScaledSeries]) -> ScaledSeries:
    """``J_0 J_1**5 + J_5 J_0**5 + q**3 J_1 J_5**5``."""
    j0, j1, j5 = js[0], js[1], js[5]
    return j0 * j1**5 + j5 * j0**5 + (j1 * j5**5).shift(3)


def square_cubic_form(js: Mapping[int, ScaledSeries]) -> ScaledSeries:
    """``J_0**2 J_1**3 + q J_5**2 J_0**3 + q**2 J_1**2 J_5**3``."""
    j0, j1, j5 = js[0], js[1], js[5]
    return j0**2 * j1**3 + (j5**2 * j0**3).shift(1) + (j1**2 * j5**3).shift(2)


class N7ExpansionCheck(ExpansionCheck):
    check_id = "n7.expansion"
    description = "(q^(1/7))_inf/(q^7)_inf = J_0 + q^(1/7) J_1 - q^(2/7) + q^(5/7) J_5"
    required_n = N


class JJJProductCheck(BaseIdentityCheck):
    check_id = "n7.jjj"
    description = "J_0 J_1 J_5 = -1 (Ramanujan's J_1 J_2 J_3), so J_0 J_1 J_2 J_5 = 1"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = _js(trunc)
        triple = js[0] * js[1] * js[5]
        yield CheckCase("J_0 J_1 J_5", triple, constant(-1, trunc))
        yield CheckCase("J_0 J_1 J_2 J_5", triple * js[2], constant(1, trunc))


class N7DeterminantCheck(BaseIdentityCheck):
    check_id = "n7.det"
    description = "Circulant determinant of N=7 after J_0 J_1 J_5 = -1 equals (q)^8/(q^7)^8"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = _js(trunc)
        lhs = (
            seventh_powers(js)
            + (7 * fifth_power_form(js)).shift(1)
            + (14 * square_cubic_form(js)).shift(1)
            - q_power(8, 2, trunc)
        )
        yield CheckCase("N=7", lhs, eta_quotient(N, trunc, 8, 8))


class N7ExpandedDeterminantCheck(BaseIdentityCheck):
    """Every monomial of the 7x7 circulant determinant, before simplifying."""

    check_id = "n7.det_expanded"
    description = "Unsimplified N=7 circulant determinant expansion equals (q)^8/(q^7)^8"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = _js(trunc)
        j0, j1, j5 = js[0], js[1], js[5]
        q1 = (
            j1**7
            + 7 * j0 * j1**5
            + 14 * j0**2 * j1**3
            + 7 * j0**4 * j1**2 * j5
            + 7 * j0**3 * j1
            + 7 * j0**5 * j5
        )
        q2 = (
            7 * j0 * j1**4 * j5**2
            + 7 * j1**3 * j5
            + 7 * j0**2 * j1**2 * j5**2
            + 14 * j0 * j1 * j5
            + 14 * j0**3 * j5**2
            - 1
        )
        q3 = 14 * j1**2 * j5**3 + 7 * j0**2 * j1 * j5**4 + 7 * j0 * j5**3
        lhs = (
            j0**7
            + q1.shift(1)
            + q2.shift(2)
            + q3.shift(3)
            + (7 * j1 * j5**5).shift(4)
            + (j5**7).shift(5)
        )
        yield CheckCase("N=7", lhs, eta_quotient(N, trunc, 8, 8))


class RatioIdentityCheck(BaseIdentityCheck):
    check_id = "n7.id55a"
    description = "J_0^2/J_5 + J_1/J_5^2 = q, checked as J_0^2 J_5 + J_1 = q J_5^2"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = _js(trunc)
        j0, j1, j5 = js[0], js[1], js[5]
        yield CheckCase("N=7", j0**2 * j5 + j1, (j5**2).shift(1))


class SeventhPowerCheck(BaseIdentityCheck):
    check_id = "n7.id55b"
    description = "J_0^7 + q J_1^7 + q^5 J_5^7 = (q)^8/(q^7)^8 + 14q (q)^4/(q^7)^4 + 57q^2"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = _js(trunc)
        rhs = (
            eta_quotient(N, trunc, 8, 8)
            + (14 * eta_quotient(N, trunc, 4, 4)).shift(1)
            + q_power(57, 2, trunc)
        )
        yield CheckCase("N=7", seventh_powers(js), rhs)


class CubicLinearCheck(BaseIdentityCheck):
    check_id = "n7.id55c"
    description = "J_0^3 J_1 + q J_1^3 J_5 + q^2 J_5^3 J_0 = -(q)^4/(q^7)^4 - 8q"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = _js(trunc)
        j0, j1, j5 = js[0], js[1], js[5]
        lhs = j0**3 * j1 + (j1**3 * j5).shift(1) + (j5**3 * j0).shift(2)
        rhs = -eta_quotient(N, trunc, 4, 4) - q_power(8, 1, trunc)
        yield CheckCase("N=7", lhs, rhs)


class SquareCubicCheck(BaseIdentityCheck):
    check_id = "n7.id55d"
    description = "J_0^2 J_1^3 + q J_5^2 J_0^3 + q^2 J_1^2 J_5^3 = -(q)^4/(q^7)^4 - 5q"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        js = _js(trunc)
        rhs = -eta_quotient(N, trunc, 4, 4) - q_power(5, 1, trunc)
        yield CheckCase("N=7", square_cubic_form(js), rhs)


class FifthPowerCheck(BaseIdentityCheck):
    check_id = "n7.id56"
    description = "J_0 J_1^5 + J_5 J_0^5 + q^3 J_1 J_5^5 = 3q"
    required_n = N

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        yield CheckCase("N=7", fifth_power_form(_js(trunc)), q_power(3, 1, trunc))
