"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

ACCEPTANCE_DETAILS: dict[str, str] = {}
_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        if report.outcome == "failed" or name not in _outcomes:
            _outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_outcomes):
        status = "PASS" if _outcomes[name] == "passed" else "FAIL"
        detail = ACCEPTANCE_DETAILS.get(name, "")
        terminalreporter.write_line(f"{status}  {name}  {detail}".rstrip())
