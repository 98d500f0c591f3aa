from typing import Iterator, Sequence

import pytest

from qseries_j.core.checks.n7_checks import seventh_powers
from qseries_j.core.errors import UnknownCheck
from qseries_j.core.identities import (
    BaseIdentityCheck,
    CheckCase,
    IdentityRegistry,
    check_ids,
    get_check,
    run_check,
    run_suite,
)
from qseries_j.core.multisection import j_family, prime_context
from qseries_j.core.qfunctions import eta_quotient, partition_series
from qseries_j.core.series import ScaledSeries

ALL_IDS = [
    "n5.expansion", "n5.reciprocal", "n5.jj", "n5.quintic", "n5.partition", "n5.det",
    "n7.expansion", "n7.jjj", "n7.det", "n7.det_expanded",
    "n7.id55a", "n7.id55b", "n7.id55c", "n7.id55d", "n7.id56",
    "theta.prodsum", "quintuple", "jacobi",
    "thm1.support", "thm1.closed", "thm2.product",
    "eq19.product", "eq24.reciprocal", "eq25.determinant",
]


class OffByOneCheck(BaseIdentityCheck):
    check_id = "broken.offbyone"
    description = "1 + q = 1"

    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        yield CheckCase(
            "constant",
            ScaledSeries({0: 1, 1: 1}, trunc=trunc),
            ScaledSeries.one(trunc=trunc),
        )


class TestRegistry:
    def test_every_check_is_registered(self):
        assert sorted(check_ids()) == sorted(ALL_IDS)

    def test_checks_load_lazily_and_describe_themselves(self):
        for check_id in ALL_IDS:
            check = get_check(check_id)
            assert check.check_id == check_id
            assert check.description

    def test_unknown_check(self):
        with pytest.raises(UnknownCheck):
            run_check("n5.nosuch")

    def test_custom_failing_check(self):
        registry = IdentityRegistry()
        registry.register_check(OffByOneCheck)
        report = registry.get_check("broken.offbyone").run(10)
        assert not report.passed
        assert report.first_bad_exponent == 1
        assert report.residual.terms == {1: 1}
        payload = report.to_json()
        assert set(payload) == {"id", "pass", "trunc", "first_bad_exponent", "cases"}
        assert payload["first_bad_exponent"] == 1
        assert payload["cases"][0]["label"] == "constant"

    def test_custom_check_stays_out_of_global_registry(self):
        assert "broken.offbyone" not in check_ids()

    def test_rejects_nonpositive_order(self):
        with pytest.raises(ValueError):
            get_check("n5.jj").run(0)


class TestFixedPrimeChecks:
    def test_jj(self):
        report = run_check("n5.jj", 80)
        assert report.passed
        assert report.first_bad_exponent is None

    def test_n5_suite(self):
        suite = run_suite("n5", 100)
        assert suite.summary() == "6/6 passed"
        assert suite.passed

    @pytest.mark.parametrize(
        "check_id",
        ["n7.expansion", "n7.jjj", "n7.det", "n7.det_expanded",
         "n7.id55a", "n7.id55b", "n7.id55c", "n7.id55d", "n7.id56"],
    )
    def test_n7(self, check_id):
        assert run_check(check_id, 80).passed

    def test_seventh_power_constant_is_57(self):
        trunc = 40
        js = j_family(prime_context(7), trunc)
        rest = (
            seventh_powers(js)
            - eta_quotient(7, trunc, 8, 8)
            - (14 * eta_quotient(7, trunc, 4, 4)).shift(1)
        )
        assert rest.terms == {2: 57}

    def test_partition_congruence(self):
        assert run_check("n5.partition", 120).passed
        values = partition_series(5 * 116).coefficients()
        assert all(values[5 * n + 4] % 5 == 0 for n in range(116))


class TestSuite:
    def test_unknown_prefix_runs_nothing(self):
        suite = run_suite("nosuch")
        assert suite.total == 0
        assert suite.summary() == "0/0 passed"

    def test_fixed_prime_checks_follow_the_prime_list(self):
        assert run_suite("n7", n_values=(5,)).total == 0

    def test_per_prime_checks(self):
        suite = run_suite("thm", 60, (5, 7))
        assert [report.id for report in suite.reports] == [
            "thm1.support", "thm1.closed", "thm2.product",
        ]
        assert suite.passed
        assert len(suite.reports[1].cases) == 3 + 4

    def test_support_check_at_order_one(self):
        # J_4 of N=11 starts at q, so it vanishes below order 2
        report = run_check("thm1.support", 1, (11,))
        assert report.passed
        assert report.trunc == 1

    def test_support_over_cli_sized_orders(self):
        assert run_suite("thm1.support", 1, (5, 7, 11, 13)).passed

    def test_determinant_check_skips_larger_primes(self):
        assert run_suite("eq25", 60, (11,)).total == 0

    def test_cyclotomic_checks(self):
        suite = run_suite("eq", 80, (5, 7))
        assert suite.summary() == "3/3 passed"

    def test_json(self):
        payload = run_suite("n5.jj", 30).to_json()
        assert payload["pass"] is True
        assert payload["passed"] == payload["total"] == 1
        assert payload["reports"][0]["id"] == "n5.jj"

    @pytest.mark.slow
    def test_full_suite(self):
        suite = run_suite()
        assert suite.passed, suite.summary()
