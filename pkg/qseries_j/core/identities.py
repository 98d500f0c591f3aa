"""
Identity verification system for the J functions.

Provides a registry of named checks, each comparing two independently
computed sides of an identity coefficient by coefficient.
"""

import importlib
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Dict, Iterator, List, Optional, Sequence, Tuple, Type, Union

from .errors import QSeriesError, UnknownCheck
from .series import Comparison, ScaledSeries, compare

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 200
DEFAULT_PRIMES: Tuple[int, ...] = (5, 7, 11, 13)


@dataclass(frozen=True)
class CheckCase:
    """One instance of an identity: a label and the two sides."""

    label: str
    lhs: ScaledSeries
    rhs: ScaledSeries


@dataclass(frozen=True)
class CaseResult:
    label: str
    comparison: Comparison

    @property
    def passed(self) -> bool:
        return self.comparison.passed

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "pass": self.passed,
            "first_bad_exponent": _exponent_json(self.comparison.first_bad_exponent),
        }


@dataclass
class CheckReport:
    """Result of running one registered check."""

    id: str
    trunc: int
    cases: List[CaseResult] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(case.passed for case in self.cases)

    @property
    def first_failure(self) -> Optional[CaseResult]:
        return next((case for case in self.cases if not case.passed), None)

    @property
    def residual(self) -> Optional[ScaledSeries]:
        """Residual of the first failing case (or of the last case if all pass)."""
        failure = self.first_failure
        if failure is not None:
            return failure.comparison.residual
        return self.cases[-1].comparison.residual if self.cases else None

    @property
    def first_bad_exponent(self) -> Optional[Fraction]:
        failure = self.first_failure
        return None if failure is None else failure.comparison.first_bad_exponent

    def to_json(self) -> dict:
        payload = {
            "id": self.id,
            "pass": self.passed,
            "trunc": self.trunc,
            "first_bad_exponent": _exponent_json(self.first_bad_exponent),
            "cases": [case.to_json() for case in self.cases],
        }
        if self.error is not None:
            payload["error"] = self.error
        return payload


def _exponent_json(exponent: Optional[Fraction]) -> Union[None, int, str]:
    if exponent is None:
        return None
    if exponent.denominator == 1:
        return exponent.numerator
    return str(exponent)


class BaseIdentityCheck(ABC):
    """Abstract base class for identity checks.

    A check either belongs to one fixed prime (``required_n``), runs once
    per prime of the requested list (``per_n``), or runs once globally.
    ``trunc_unit`` records whether the order counts powers of q or of
    ``q**(1/N)``.
    """

    check_id: ClassVar[str]
    description: ClassVar[str]
    required_n: ClassVar[Optional[int]] = None
    per_n: ClassVar[bool] = False
    supported_n: ClassVar[Optional[Tuple[int, ...]]] = None
    default_trunc: ClassVar[int] = DEFAULT_ORDER
    trunc_unit: ClassVar[str] = "q"

    def primes_for(self, n_values: Optional[Sequence[int]]) -> List[int]:
        """Primes this check evaluates for the requested list."""
        if self.required_n is not None:
            return [self.required_n]
        if not self.per_n:
            return []
        primes = list(n_values) if n_values else list(DEFAULT_PRIMES)
        if self.supported_n is not None:
            primes = [N for N in primes if N in self.supported_n]
        return primes

    def applies_to(self, n_values: Optional[Sequence[int]]) -> bool:
        """Whether a suite over ``n_values`` should include this check."""
        if self.required_n is not None:
            return not n_values or self.required_n in n_values
        if self.per_n:
            return bool(self.primes_for(n_values))
        return True

    @abstractmethod
    def cases(self, trunc: int, primes: Sequence[int]) -> Iterator[CheckCase]:
        """Yield both sides of every instance of the identity.

        Args:
            trunc: Truncation order in ``trunc_unit``
            primes: Primes from ``primes_for`` (empty for global checks)

        Returns:
            Iterator over CheckCase
        """
        pass

    def run(self, trunc: Optional[int] = None, n_values: Optional[Sequence[int]] = None) -> CheckReport:
        trunc = self.default_trunc if trunc is None else trunc
        if trunc < 1:
            raise ValueError(f"trunc must be positive, got {trunc}")
        report = CheckReport(id=self.check_id, trunc=trunc)
        for case in self.cases(trunc, self.primes_for(n_values)):
            comparison = compare(case.lhs, case.rhs)
            logger.debug(f"{self.check_id} [{case.label}]: passed={comparison.passed}")
            report.cases.append(CaseResult(case.label, comparison))
        return report


class IdentityRegistry:
    """Registry for identity checks."""

    def __init__(self):
        self._checks: Dict[str, Union[str, Type[BaseIdentityCheck]]] = {}
        self._register_default_checks()

    def register_check(self, check_class: Type[BaseIdentityCheck]):
        """Register a check class under its ``check_id``.

        Args:
            check_class: Check class to register
        """
        self._checks[check_class.check_id] = check_class
        logger.debug(f"Registered check {check_class.__name__} as {check_class.check_id}")

    def ids(self) -> List[str]:
        return list(self._checks)

    def get_check(self, check_id: str) -> BaseIdentityCheck:
        """Instantiate the check registered under ``check_id``.

        Raises:
            UnknownCheck: If nothing is registered under that id
        """
        check_spec = self._checks.get(check_id)
        if check_spec is None:
            raise UnknownCheck(f"no identity check named {check_id!r}")

        if isinstance(check_spec, str):
            module_path, class_name = check_spec.split(":")
            module = importlib.import_module(module_path)
            check_class = getattr(module, class_name)
        else:
            check_class = check_spec
        return check_class()

    def _register_default_checks(self):
        """Register built-in checks."""
        # Classes are named by path so check modules load only when used
        package = "qseries_j.core.checks"
        defaults = {
            "n5.expansion": "n5_checks:N5ExpansionCheck",
            "n5.reciprocal": "n5_checks:ReciprocalCheck",
            "n5.jj": "n5_checks:JJProductCheck",
            "n5.quintic": "n5_checks:QuinticCheck",
            "n5.partition": "n5_checks:PartitionCheck",
            "n5.det": "n5_checks:N5DeterminantCheck",
            "n7.expansion": "n7_checks:N7ExpansionCheck",
            "n7.jjj": "n7_checks:JJJProductCheck",
            "n7.det": "n7_checks:N7DeterminantCheck",
            "n7.det_expanded": "n7_checks:N7ExpandedDeterminantCheck",
            "n7.id55a": "n7_checks:RatioIdentityCheck",
            "n7.id55b": "n7_checks:SeventhPowerCheck",
            "n7.id55c": "n7_checks:CubicLinearCheck",
            "n7.id55d": "n7_checks:SquareCubicCheck",
            "n7.id56": "n7_checks:FifthPowerCheck",
            "theta.prodsum": "special_checks:ThetaProductSumCheck",
            "quintuple": "special_checks:QuintupleCheck",
            "jacobi": "special_checks:JacobiCubeCheck",
            "thm1.support": "theorem_checks:SupportCheck",
            "thm1.closed": "theorem_checks:ClosedFormCheck",
            "thm2.product": "theorem_checks:ProductCheck",
            "eq19.product": "cyclotomic_checks:RootProductCheck",
            "eq24.reciprocal": "cyclotomic_checks:CofactorCheck",
            "eq25.determinant": "cyclotomic_checks:CirculantCheck",
        }
        for check_id, target in defaults.items():
            self._checks[check_id] = f"{package}.{target}"


# Global registry instance
_registry = IdentityRegistry()


def check_ids() -> List[str]:
    return _registry.ids()


def get_check(check_id: str) -> BaseIdentityCheck:
    return _registry.get_check(check_id)


def register_check(check_class: Type[BaseIdentityCheck]):
    """Register a custom identity check.

    Args:
        check_class: Check class to register
    """
    _registry.register_check(check_class)


def run_check(
    check_id: str,
    trunc: Optional[int] = None,
    n_values: Optional[Sequence[int]] = None,
) -> CheckReport:
    """Main API for running one identity check.

    Args:
        check_id: Registered id such as ``"n5.jj"``
        trunc: Order override in the check's own unit; its default when None
        n_values: Primes for per-prime checks; DEFAULT_PRIMES when None

    Returns:
        CheckReport with one CaseResult per identity instance

    Raises:
        UnknownCheck: If ``check_id`` is not registered
    """
    check = get_check(check_id)
    try:
        report = check.run(trunc, n_values)
    except Exception as e:
        logger.error(f"Check {check_id} failed to evaluate: {e}")
        raise
    if report.passed:
        logger.info(f"{check_id}: {len(report.cases)} case(s) passed")
    else:
        logger.warning(f"{check_id}: fails first at q^{report.first_bad_exponent}")
    return report


@dataclass
class SuiteResult:
    reports: List[CheckReport]

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def passed_count(self) -> int:
        return sum(1 for report in self.reports if report.passed)

    @property
    def passed(self) -> bool:
        return self.passed_count == self.total

    def summary(self) -> str:
        return f"{self.passed_count}/{self.total} passed"

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "passed": self.passed_count,
            "total": self.total,
            "reports": [report.to_json() for report in self.reports],
        }


def run_suite(
    prefix: Optional[str] = None,
    trunc: Optional[int] = None,
    n_values: Optional[Sequence[int]] = None,
) -> SuiteResult:
    """Run every registered check whose id starts with ``prefix``.

    A check that raises a QSeriesError is recorded as a failed report so the
    rest of the suite still runs.
    """
    reports: List[CheckReport] = []
    for check_id in check_ids():
        if prefix and not check_id.startswith(prefix):
            continue
        check = get_check(check_id)
        if not check.applies_to(n_values):
            logger.debug(f"Skipping {check_id}: not applicable to N={list(n_values or [])}")
            continue
        try:
            reports.append(run_check(check_id, trunc, n_values))
        except QSeriesError as e:
            reports.append(
                CheckReport(
                    id=check_id,
                    trunc=check.default_trunc if trunc is None else trunc,
                    error=str(e),
                )
            )
    result = SuiteResult(reports)
    logger.info(f"Suite {prefix or '*'}: {result.summary()}")
    return result
