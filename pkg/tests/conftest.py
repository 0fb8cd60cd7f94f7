import os

import pytest

from bqkz import qkzsolver as qs


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("QKZ_CACHE_DIR", str(tmp_path / "qkz-cache"))


_SOLUTIONS: dict = {}


def solution(k, n):
    """Session-wide memo of exact solutions; they are immutable."""
    if (k, n) not in _SOLUTIONS:
        _SOLUTIONS[k, n] = qs.solve(k, n)
    return _SOLUTIONS[k, n]


@pytest.fixture(scope="session")
def sol():
    return solution


def pytest_report_header(config):
    return f"cpu count: {os.cpu_count()}"


# acceptance criteria record their verdict here; printed after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {status} {detail}")
