"""Collects acceptance-criterion outcomes and prints one line per criterion."""

ACCEPTANCE_LINES = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    ACCEPTANCE_LINES[name] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("_")[1][1:])):
        status, dur = ACCEPTANCE_LINES[name]
        terminalreporter.write_line(f"{status}  {name}  ({dur:.2f}s)")
