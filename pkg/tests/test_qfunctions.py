import random
from fractions import Fraction

import pytest

from qseries_j.core.errors import IncompatibleScale
from qseries_j.core.qfunctions import (
    ThetaArg,
    eta_quotient,
    euler_series,
    jacobi_cube,
    partition_series,
    qpochhammer,
    quintuple_check,
    quintuple_sides,
    theta_product,
    theta_sum,
)
from qseries_j.core.series import ScaledSeries, dilate, power


def test_pentagonal_expansion():
    assert euler_series(1, 30).terms == {
        0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1, 22: 1, 26: 1,
    }


def test_euler_series_at_fractional_scale():
    root = euler_series(1, 10, scale=5)
    assert root.scale == 5
    assert root.terms == {0: 1, 5: -1}


def test_euler_series_rejects_bad_arguments():
    with pytest.raises(ValueError):
        euler_series(0, 10)
    with pytest.raises(ValueError):
        euler_series(1, 0)


def test_partition_numbers():
    assert partition_series(20).coefficients() == [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490,
    ]


def test_qpochhammer_matches_euler():
    q = ThetaArg(1, 1)
    assert qpochhammer(q, q, 60) == euler_series(1, 60)


def test_jacobi_cube():
    assert jacobi_cube(200) == power(euler_series(1, 200), 3)


def test_eta_quotient_of_equal_powers_is_one():
    assert eta_quotient(1, 40, 3, 3) == 1


class TestThetaArg:
    def test_validation(self):
        with pytest.raises(ValueError):
            ThetaArg(2, 1)
        with pytest.raises(ValueError):
            ThetaArg(1, 0)

    def test_units(self):
        assert ThetaArg.neg_power(Fraction(2, 5)).units(5) == 2
        with pytest.raises(IncompatibleScale):
            ThetaArg(1, Fraction(1, 3)).units(2)

    def test_product_and_string(self):
        ab = ThetaArg.neg_power(2) * ThetaArg.neg_power(3)
        assert ab == ThetaArg(1, 5)
        assert str(ThetaArg.neg_power(1)) == "-q"
        assert str(-ThetaArg.neg_power(4)) == "q^4"


class TestTheta:
    def test_f_minus_q_minus_q2_is_euler(self):
        f = theta_sum(ThetaArg.neg_power(1), ThetaArg.neg_power(2), 100)
        assert f == euler_series(1, 100)

    def test_symmetric_random(self):
        rng = random.Random(2718)
        for _ in range(200):
            a = ThetaArg(rng.choice((1, -1)), rng.randint(1, 12))
            b = ThetaArg(rng.choice((1, -1)), rng.randint(1, 12))
            assert theta_sum(a, b, 60) == theta_sum(b, a, 60)

    @pytest.mark.parametrize("a,b", [(1, 4), (2, 3), (3, 4), (6, 1), (2, 9), (5, 6)])
    def test_sum_equals_product(self, a, b):
        x, y = ThetaArg.neg_power(a), ThetaArg.neg_power(b)
        assert theta_sum(x, y, 150) == theta_product(x, y, 150)

    def test_fractional_arguments(self):
        x, y = ThetaArg.neg_power(Fraction(1, 5)), ThetaArg.neg_power(Fraction(2, 5))
        lhs = theta_sum(x, y, 100, scale=5)
        assert lhs.scale == 5
        assert lhs == dilate(euler_series(1, 100), Fraction(1, 5))


class TestQuintuple:
    @pytest.mark.parametrize("N,A", [(5, 1), (5, 2), (7, 1), (7, 3), (11, 4), (13, 6)])
    def test_identity_holds(self, N, A):
        assert quintuple_check(N, A, 150).passed

    def test_sides_are_nontrivial(self):
        lhs, rhs = quintuple_sides(5, 1, 30)
        assert lhs.coefficients()[:4] == [1, 1, 0, -1]
        assert rhs == lhs

    def test_requires_2a_below_n(self):
        with pytest.raises(ValueError):
            quintuple_sides(5, 0, 10)
        with pytest.raises(ValueError):
            quintuple_sides(5, 3, 10)


def test_scaled_series_from_theta_is_exact_integer():
    f = theta_sum(ThetaArg.neg_power(1), ThetaArg.neg_power(4), 50)
    assert isinstance(f, ScaledSeries)
    assert all(isinstance(c, int) for c in f.terms.values())
