"""Collects acceptance-criterion outcomes and prints one line per criterion
at the end of the run."""

import re

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_(c\d+_[a-z0-9_]+)")
_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    match = _ACCEPTANCE.search(report.nodeid)
    if not match:
        return
    name = match.group(1)
    if report.when == "call":
        _results[name] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.failed:
        _results[name] = "ERROR"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_results):
        terminalreporter.write_line(f"{_results[name]:4}  {name}")
