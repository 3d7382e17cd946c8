
import pytest

from discretecs import BACKEND, build_field

_CRITERIA: dict[int, list[tuple[str, bool]]] = {}


def record_criterion(number: int, label: str, passed: bool) -> None:
    _CRITERIA.setdefault(number, []).append((label, passed))


@pytest.fixture(scope="session")
def fields():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_field(n)
        return cache[n]

    return get


def pytest_report_header(config):
    return f"discretecs kernel backend: {BACKEND}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entries = _CRITERIA[number]
        ok = all(p for _, p in entries)
        detail = "; ".join(f"{label}={'ok' if p else 'FAIL'}" for label, p in entries)
        tr.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({detail})")
