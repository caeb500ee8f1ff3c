import time
from contextlib import contextmanager
from itertools import combinations

import pytest
from hypothesis import strategies as st

from edgespectra.graph import Graph

_ACCEPTANCE: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@contextmanager
def _criterion(number: int, title: str, budget_s: float):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - t0
        _ACCEPTANCE.append(f"[criterion {number:>2}] FAIL  {title}  ({elapsed:.3f}s, budget {budget_s}s)")
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed < budget_s
    _ACCEPTANCE.append(
        f"[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.3f}s, budget {budget_s}s)"
    )
    assert ok, f"criterion {number} took {elapsed:.3f}s, budget {budget_s}s"


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
