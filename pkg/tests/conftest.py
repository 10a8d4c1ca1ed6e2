import re

_ACCEPTANCE = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _PATTERN.search(report.nodeid)
    if m:
        n = int(m.group(1))
        _ACCEPTANCE[n] = _ACCEPTANCE.get(n, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status = "PASS" if _ACCEPTANCE[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}")
