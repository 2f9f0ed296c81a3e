from functools import lru_cache

import pytest
from hypothesis import strategies as st

from gameofcards import GameParams, build_graph, reduce

_acceptance: list[tuple[str, str]] = []


@lru_cache(maxsize=None)
def graph(n: int, p: int):
    return build_graph(GameParams(n, p))


@lru_cache(maxsize=None)
def reduced(n: int, p: int):
    return reduce(graph(n, p))


@pytest.fixture
def g63():
    return graph(6, 3)


@pytest.fixture
def g64():
    return graph(6, 4)


@st.composite
def configurations(draw, min_p=2, max_p=6, max_cards=6):
    p = draw(st.integers(min_p, max_p))
    return tuple(draw(st.lists(st.integers(0, max_cards), min_size=p, max_size=p)))


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
