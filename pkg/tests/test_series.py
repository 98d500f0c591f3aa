import random
from fractions import Fraction

import pytest

from qseries_j.core.errors import (
    DivisionByZeroSeries,
    IncompatibleScale,
    NegativeValuation,
    NonIntegerQuotient,
)
from qseries_j.core.qfunctions import euler_series
from qseries_j.core.series import (
    ScaledSeries,
    compare,
    dilate,
    div,
    multisect,
    power,
    reassemble,
    rescale,
)


def random_series(rng, *, scale=1, trunc=None, unit=False):
    trunc = trunc or rng.randint(1, 12)
    exponents = rng.sample(range(trunc), rng.randint(0, min(trunc, 6)))
    terms = {e: rng.randint(-5, 5) for e in exponents}
    if unit:
        terms[0] = rng.choice((1, -1))
    return ScaledSeries(terms, scale=scale, trunc=trunc)


class TestConstruction:
    def test_drops_zeros_and_terms_beyond_precision(self):
        s = ScaledSeries({0: 1, 2: 0, 3: 4, 7: 9}, trunc=5)
        assert s.items() == [(0, 1), (3, 4)]
        assert s.trunc == 5

    def test_negative_exponent_rejected(self):
        with pytest.raises(NegativeValuation):
            ScaledSeries({-1: 1}, trunc=3)

    def test_coefficient_beyond_precision_rejected(self):
        s = ScaledSeries.one(trunc=3)
        assert s.coefficient(2) == 0
        with pytest.raises(ValueError):
            s.coefficient(3)

    def test_valuation_and_leading_term(self):
        s = ScaledSeries({2: -3, 4: 1}, trunc=6)
        assert s.valuation() == 2
        assert s.leading_term() == (2, -3)
        assert ScaledSeries.zero(trunc=6).valuation() is None

    def test_render(self):
        assert ScaledSeries({0: 1, 1: -1}, trunc=3).render() == "1 - q + O(q^3)"
        assert ScaledSeries({1: 2}, scale=2, trunc=4).render() == "2*q^(1/2) + O(q^2)"
        assert ScaledSeries.zero(trunc=3).render() == "O(q^3)"

    def test_equality_with_integer(self):
        assert ScaledSeries({0: -1}, trunc=4) == -1
        assert ScaledSeries({0: -1, 2: 1}, trunc=4) != -1

    def test_json_round_trip(self):
        s = ScaledSeries({0: 10**30, 3: -7}, scale=5, trunc=11)
        payload = s.to_json()
        assert payload["terms"][0] == [0, str(10**30)]
        assert ScaledSeries.from_json(payload) == s


class TestArithmetic:
    def test_precision_is_the_smaller_one(self):
        a = ScaledSeries.one(trunc=5)
        b = ScaledSeries.one(trunc=3)
        assert (a + b).trunc == 3
        assert (a * b).trunc == 3

    def test_mixed_scales_align(self):
        half = ScaledSeries({1: 1}, scale=2, trunc=4)
        third = ScaledSeries({1: 1}, scale=3, trunc=6)
        total = half + third
        assert total.scale == 6
        assert total.terms == {2: 1, 3: 1}

    def test_shift_raises_precision(self):
        s = ScaledSeries({0: 1, 1: 1}, trunc=3).shift(2)
        assert s.terms == {2: 1, 3: 1}
        assert s.trunc == 5

    def test_shift_below_valuation(self):
        with pytest.raises(NegativeValuation):
            ScaledSeries({1: 1}, trunc=3).shift(-2)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroSeries):
            div(ScaledSeries.one(trunc=4), ScaledSeries.zero(trunc=4))

    def test_non_integer_quotient(self):
        with pytest.raises(NonIntegerQuotient):
            div(ScaledSeries.one(trunc=4), ScaledSeries({0: 2, 1: 1}, trunc=4))

    def test_dividend_below_divisor_valuation(self):
        with pytest.raises(NegativeValuation):
            div(ScaledSeries({1: 1}, trunc=4), ScaledSeries({2: 1}, trunc=4))

    def test_division_by_monomial_lowers_precision(self):
        quotient = div(ScaledSeries({2: 3, 3: 6}, trunc=6), ScaledSeries({2: 3}, trunc=6))
        assert quotient.terms == {0: 1, 1: 2}
        assert quotient.trunc == 4

    def test_power(self):
        one_plus_q = ScaledSeries({0: 1, 1: 1}, trunc=6)
        assert power(one_plus_q, 4).coefficients() == [1, 4, 6, 4, 1, 0]
        assert power(one_plus_q, 0) == 1
        with pytest.raises(ValueError):
            power(one_plus_q, -1)

    def test_ring_laws_random(self):
        rng = random.Random(20240101)
        for _ in range(1000):
            scale = rng.choice((1, 2, 3))
            trunc = rng.randint(1, 12)
            a, b, c = (random_series(rng, scale=scale, trunc=trunc) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert (a + b) * c == a * c + b * c
            assert a - a == 0

    def test_division_inverts_multiplication_random(self):
        rng = random.Random(7)
        for _ in range(1000):
            trunc = rng.randint(1, 12)
            a = random_series(rng, trunc=trunc)
            b = random_series(rng, trunc=trunc, unit=True)
            assert div(a * b, b) == a


class TestScale:
    def test_rescale_keeps_value(self):
        s = ScaledSeries({0: 1, 1: -1}, trunc=3)
        up = rescale(s, 4)
        assert up.terms == {0: 1, 4: -1}
        assert up.trunc == 12
        assert up == s

    def test_rescale_incompatible(self):
        with pytest.raises(IncompatibleScale):
            rescale(ScaledSeries({1: 1}, scale=2, trunc=4), 1)

    def test_rescale_round_trip_random(self):
        rng = random.Random(99)
        for _ in range(1000):
            scale = rng.choice((1, 2, 3, 5))
            a = random_series(rng, scale=scale)
            k = rng.randint(2, 7)
            back = rescale(rescale(a, k * scale), scale)
            assert back.terms == a.terms
            assert back.trunc == a.trunc

    def test_dilate_is_substitution(self):
        doubled = dilate(euler_series(1, 10), 2)
        assert doubled.terms == {0: 1, 2: -1, 4: -1, 10: 1, 14: 1}
        assert doubled.trunc == 20
        assert doubled == euler_series(2, 20)

    def test_dilate_fractional(self):
        root = dilate(ScaledSeries({0: 1, 1: -1}, trunc=3), Fraction(1, 5))
        assert root.scale == 5
        assert root.terms == {0: 1, 1: -1}
        assert root.trunc == 3


class TestMultisection:
    def test_components(self):
        s = ScaledSeries({0: 1, 1: 2, 2: 3, 3: 4, 5: 6}, scale=2, trunc=6)
        even = multisect(s, 2, 0)
        odd = multisect(s, 2, 1)
        assert even.scale == 1 and even.terms == {0: 1, 1: 3}
        assert odd.terms == {0: 2, 1: 4, 2: 6}
        assert even.trunc == 3 and odd.trunc == 3

    def test_scale_must_be_divisible(self):
        with pytest.raises(IncompatibleScale):
            multisect(ScaledSeries.one(scale=3, trunc=3), 2, 0)

    def test_residue_range(self):
        with pytest.raises(ValueError):
            multisect(ScaledSeries.one(scale=5, trunc=3), 5, 5)

    def test_reassembly_random(self):
        rng = random.Random(12345)
        for _ in range(1000):
            N = rng.choice((2, 3, 5, 7, 11))
            scale = N * rng.randint(1, 2)
            a = random_series(rng, scale=scale, trunc=rng.randint(1, 20))
            components = {r: multisect(a, N, r) for r in range(N)}
            assert reassemble(components, N, scale) == a


class TestCompare:
    def test_reports_first_bad_exponent(self):
        lhs = ScaledSeries({0: 1, 1: 1, 3: 2}, scale=2, trunc=6)
        rhs = ScaledSeries({0: 1, 3: 2}, scale=2, trunc=6)
        result = compare(lhs, rhs)
        assert not result.passed
        assert result.first_bad_exponent == Fraction(1, 2)
        assert result.residual.terms == {1: 1}

    def test_equal_sides(self):
        result = compare(euler_series(1, 20), euler_series(1, 30))
        assert result.passed
        assert result.first_bad_exponent is None
        assert result.trunc == 20
