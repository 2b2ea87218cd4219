import time
from contextlib import contextmanager

import pytest

_LINES = []


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.elapsed = None


@contextmanager
def _criterion(number, title, limit):
    c = Criterion(number, title, limit)
    start = time.perf_counter()
    ok = False
    try:
        yield c
        c.elapsed = time.perf_counter() - start
        ok = c.elapsed < limit
    finally:
        if c.elapsed is None:
            c.elapsed = time.perf_counter() - start
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({c.elapsed:.2f}s, limit {limit}s)"
        _LINES.append(line)
        print(line)
    assert c.elapsed < limit, f"criterion {number} took {c.elapsed:.2f}s, limit {limit}s"


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
