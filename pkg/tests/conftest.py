import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record an acceptance criterion outcome: ``acceptance(number, title, {check: passed})``."""

    def record(number, title, checks):
        ok = all(checks.values())
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
        details = [f"      {'ok  ' if v else 'FAIL'} {k}" for k, v in checks.items()]
        _ACCEPTANCE.append((number, line, details))
        print(line)
        for d in details:
            print(d)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line, details in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
        for d in details:
            terminalreporter.write_line(d)
