from collections import Counter

import pytest
from sympy import primerange

from qseries_j.core.closed_form import (
    closed_forms,
    j_closed_form,
    j_product,
    j_series_closed,
    theorem2_check,
    theorem2_prediction,
)
from qseries_j.core.multisection import class_indices, j_oracle, prime_context


@pytest.mark.parametrize(
    "N,A,p,sign,X,num,den",
    [
        (5, 0, 1, -1, 0, None, None),
        (5, 1, 0, 1, 0, (2, 3), (1, 4)),
        (7, 3, 5, 1, 0, (6, 1), (3, 4)),
        (11, 5, 4, -1, 1, (10, 1), (5, 6)),
    ],
)
def test_descriptors(N, A, p, sign, X, num, den):
    form = j_closed_form(prime_context(N), A)
    assert (form.p, form.sign, form.X) == (p, sign, X)
    assert form.theta_num == num
    assert form.theta_den == den


def test_a_out_of_range():
    with pytest.raises(ValueError):
        j_closed_form(prime_context(5), 3)
    with pytest.raises(ValueError):
        j_closed_form(prime_context(5), -1)


def test_formula_text():
    assert j_closed_form(prime_context(5), 0).formula() == "-1"
    assert j_closed_form(prime_context(5), 1).formula() == "f(-q^2, -q^3)/f(-q, -q^4)"
    assert j_closed_form(prime_context(11), 5).formula() == "-q f(-q^10, -q)/f(-q^5, -q^6)"


def test_json_shape():
    payload = j_closed_form(prime_context(7), 0).to_json()
    assert payload == {
        "N": 7, "p": 2, "A": 0, "sign": -1, "X": 0, "theta_num": None, "theta_den": None,
    }
    assert j_closed_form(prime_context(7), 3).to_json()["theta_num"] == [6, 1]


def test_indices_cover_classes():
    for N in primerange(5, 98):
        ctx = prime_context(N)
        assert {form.p for form in closed_forms(ctx)} == class_indices(ctx)


def test_theta_exponents_complete():
    for N in primerange(5, 98):
        ctx = prime_context(N)
        numerators = Counter()
        denominators = Counter()
        for form in closed_forms(ctx)[1:]:
            numerators.update(form.theta_num)
            denominators.update(form.theta_den)
        expected = Counter(range(1, N))
        assert numerators == expected
        assert denominators == expected


@pytest.mark.parametrize("N", [5, 7, 11, 13])
def test_closed_form_equals_oracle(N):
    ctx = prime_context(N)
    for form in closed_forms(ctx):
        assert j_series_closed(ctx, form.A, 80) == j_oracle(ctx, form.p, 80)


def test_constant_function_for_a_zero():
    assert j_series_closed(prime_context(7), 0, 100) == -1
    assert j_oracle(prime_context(7), 2, 100) == -1


@pytest.mark.parametrize("N", [5, 7, 11, 13, 17])
def test_leading_term(N):
    ctx = prime_context(N)
    for form in closed_forms(ctx)[1:]:
        assert j_series_closed(ctx, form.A, 40).leading_term() == (form.X, form.sign)


@pytest.mark.parametrize("N,sign,Z", [(5, 1, 0), (7, 1, 0), (11, -1, 1)])
def test_product_prediction(N, sign, Z):
    prediction = theorem2_prediction(prime_context(N))
    assert (prediction.sign, prediction.Z) == (sign, Z)


def test_prediction_integral_for_all_primes():
    for N in primerange(5, 98):
        prediction = theorem2_prediction(prime_context(N))
        assert prediction.Z >= 0
        assert prediction.sign in (1, -1)


@pytest.mark.parametrize("N", [5, 7, 11, 13])
def test_product_check(N):
    result = theorem2_check(prime_context(N), 100)
    assert result.passed
    assert result.residual.is_zero()


def test_product_of_n11_is_minus_q():
    product = j_product(prime_context(11), 30)
    assert product.terms == {1: -1}


def test_product_check_needs_room_for_z():
    with pytest.raises(ValueError):
        theorem2_check(prime_context(11), 2)


@pytest.mark.slow
def test_closed_form_equals_oracle_to_23():
    for N in primerange(5, 24):
        ctx = prime_context(N)
        for form in closed_forms(ctx):
            assert j_series_closed(ctx, form.A, 200) == j_oracle(ctx, form.p, 200)
        assert theorem2_check(ctx, 200).passed
