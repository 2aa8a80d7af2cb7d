import pytest

from tfcahn.checks import CHECKS, run_checks
from tfcahn.results import CheckResult


@pytest.mark.parametrize("check", CHECKS, ids=lambda c: c.__name__)
def test_each_invariant_check_passes(check: object) -> None:
    res = check()  # type: ignore[operator]
    assert isinstance(res, CheckResult)
    assert res.passed, res.summary()


def test_suite_reports_exceptions_as_failures() -> None:
    def broken() -> CheckResult:
        raise RuntimeError("boom")

    suite = run_checks((broken,))
    assert not suite.passed
    (res,) = suite.failures
    assert res.name == "broken"
    assert res.details["error"] == "RuntimeError: boom"
    assert suite.as_dict()["passed"] is False
