import random

import pytest
from sympy import Poly, cyclotomic_poly, rem, symbols

from qseries_j.core.cyclotomic import (
    CycCoeff,
    CycSeries,
    circulant_determinant,
    circulant_entries,
    cofactor_product,
    cyc_reduce,
    omega_twist,
    product_identity_check,
    twisted_product,
)
from qseries_j.core.errors import NonRationalCoefficient, NotPrime
from qseries_j.core.multisection import prime_context
from qseries_j.core.qfunctions import eta_quotient
from qseries_j.core.series import ScaledSeries, rescale

x = symbols("x")


def random_coeff(rng, N):
    return CycCoeff(N, [rng.randint(-4, 4) for _ in range(N - 1)])


class TestCycCoeff:
    def test_reduce_full_power(self):
        assert cyc_reduce([0, 0, 0, 0, 0, 1], 5).vec == (1, 0, 0, 0)

    def test_cyclotomic_polynomial_is_zero(self):
        assert cyc_reduce([1] * 5, 5).is_zero()
        assert cyc_reduce([2] * 7, 7).is_zero()

    def test_root_powers_multiply(self):
        w4 = CycCoeff.root_power(5, 4)
        assert w4 * w4 == CycCoeff.root_power(5, 3)
        assert w4 * CycCoeff.root_power(5, 1) == 1

    def test_top_power_representation(self):
        w4 = CycCoeff.root_power(5, 4)
        assert w4.vec == (-1, -1, -1, -1)
        assert w4.as_root_power() == (1, 4)
        assert CycCoeff.root_power(5, 2, -3).as_root_power() == (-3, 2)
        assert CycCoeff(5, (1, 1, 0, 0)).as_root_power() is None

    def test_rationality(self):
        assert CycCoeff.integer(7, -4).rational_value() == -4
        with pytest.raises(NonRationalCoefficient):
            CycCoeff.root_power(7, 3).rational_value()

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            CycCoeff(5, (1, 2))

    @pytest.mark.parametrize("N", [5, 7, 11])
    def test_reduction_matches_polynomial_remainder(self, N):
        rng = random.Random(N)
        phi = cyclotomic_poly(N, x)
        for _ in range(50):
            poly = [rng.randint(-9, 9) for _ in range(rng.randint(1, 3 * N))]
            remainder = Poly(rem(sum(c * x**i for i, c in enumerate(poly)), phi, x), x)
            expected = tuple(int(remainder.coeff_monomial(x**i)) for i in range(N - 1))
            assert cyc_reduce(poly, N).vec == expected

    def test_ring_laws_random(self):
        rng = random.Random(31337)
        for _ in range(1000):
            N = rng.choice((5, 7, 11))
            a, b, c = (random_coeff(rng, N) for _ in range(3))
            j = rng.randint(-20, 20)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert (a + b) * c == a * c + b * c
            assert a.rotate(j) == a * CycCoeff.root_power(N, j)
            assert a - a == 0


class TestTwist:
    def test_single_twist(self):
        one_minus_t = ScaledSeries({0: 1, 1: -1}, scale=5, trunc=5)
        twisted = omega_twist(one_minus_t, 1)
        assert twisted.terms[1].vec == (0, -1, 0, 0)
        with pytest.raises(NonRationalCoefficient):
            twisted.to_integer_series()

    def test_trivial_twist_round_trip(self):
        a = ScaledSeries({0: 3, 2: -1, 7: 4}, scale=5, trunc=9)
        assert omega_twist(a, 0).to_integer_series() == a

    def test_integer_series_is_rescaled(self):
        a = ScaledSeries({0: 1, 1: -1}, trunc=3)
        twisted = omega_twist(a, 2, 5)
        assert twisted.scale == 5
        assert twisted.terms[5] == -1

    def test_twist_validation(self):
        a = ScaledSeries.one(scale=6, trunc=3)
        with pytest.raises(NotPrime):
            omega_twist(a, 1)
        with pytest.raises(ValueError):
            omega_twist(ScaledSeries.one(scale=5, trunc=3), 5)

    def test_full_product_of_linear_factor(self):
        # prod_p (1 - w**p t) = 1 - t**5
        one_minus_t = ScaledSeries({0: 1, 1: -1}, scale=5, trunc=20)
        product = twisted_product(one_minus_t, range(5), 5)
        assert product.terms == {0: 1, 5: -1}

    def test_series_from_integers(self):
        series = CycSeries.from_series(ScaledSeries({0: 2, 3: 1}, scale=7, trunc=10), 7)
        assert series.is_rational()
        assert series.to_json()["terms"][0] == {"exponent": 0, "coeff": ["2", "0", "0", "0", "0", "0"]}


class TestProductIdentity:
    @pytest.mark.parametrize("N", [5, 7])
    def test_product_identity(self, N):
        report = product_identity_check(prime_context(N), 100)
        assert report.passed
        assert report.residual.is_zero()
        assert report.determinant_passed
        assert report.determinant_residual.is_zero()

    def test_cofactor_product_is_integral(self):
        product = cofactor_product(prime_context(5), 60)
        assert product.scale == 5
        assert product.coefficient(0) == 1

    @pytest.mark.slow
    @pytest.mark.parametrize("N,trunc", [(5, 250), (7, 250), (11, 150)])
    def test_product_identity_long(self, N, trunc):
        report = product_identity_check(prime_context(N), trunc)
        assert report.passed
        assert report.determinant_passed


class TestCirculant:
    @pytest.mark.parametrize(
        "values,det", [([3, 1], 8), ([1, 2, 3], 18), ([1, 1], 0), ([0, 1], -1)]
    )
    def test_small_integer_circulants(self, values, det):
        entries = [ScaledSeries({0: v}, trunc=4) for v in values]
        assert circulant_determinant(entries) == det

    def test_empty(self):
        with pytest.raises(ValueError):
            circulant_determinant([])

    def test_j_circulant_n5(self):
        ctx = prime_context(5)
        determinant = circulant_determinant(circulant_entries(ctx, 100))
        assert determinant == rescale(eta_quotient(5, 20, 6, 6), 5)
