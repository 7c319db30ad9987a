import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", parent=settings.get_profile("default"), max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in report.user_properties:
        if mark[0] == "criterion":
            num, title = mark[1]
            prev = _CRITERIA.get(num, (title, "PASS"))[1]
            status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
            _CRITERIA[num] = (title, status)


@pytest.fixture
def criterion(request, record_property):
    """Tag a test as (part of) a numbered acceptance criterion."""
    def tag(num: int, title: str) -> None:
        record_property("criterion", (num, title))
    return tag


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, status = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {status}  {title}")
