import contextlib
import time

import pytest

_RESULTS = {}


class _Criterion:
    def __init__(self, key, title, limit):
        self.key, self.title, self.limit = key, title, limit
        self.elapsed = None
        self.ok = False

    @contextlib.contextmanager
    def timed(self):
        start = time.perf_counter()
        yield
        self.elapsed = time.perf_counter() - start


@pytest.fixture
def criterion(request):
    """Record an acceptance criterion's outcome for the end-of-run summary."""
    made = []

    def make(key, title, limit=None):
        c = _Criterion(key, title, limit)
        made.append(c)
        return c

    yield make
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    for c in made:
        c.ok = not failed
        _RESULTS[c.key] = c


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS, key=lambda k: (int(k.rstrip("abcdefgh")), k)):
        c = _RESULTS[key]
        timing = "" if c.elapsed is None else f" [{c.elapsed:.2f}s" + (f" / limit {c.limit}s]" if c.limit else "]")
        terminalreporter.write_line(f"{'PASS' if c.ok else 'FAIL'}  criterion {key}: {c.title}{timing}")
