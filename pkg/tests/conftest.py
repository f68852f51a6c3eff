import os

from hypothesis import HealthCheck, settings

# Fixed example order so reruns are comparable.
settings.register_profile("repo", derandomize=True, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" in report.nodeid and (report.when == "call" or report.failed):
        _criteria[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    from tests.test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_criteria.items(), key=lambda kv: int(kv[0].rsplit("_", 1)[-1])):
        n = int(nodeid.rsplit("_", 1)[-1])
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {n:2d}: {CRITERIA[n]}")
