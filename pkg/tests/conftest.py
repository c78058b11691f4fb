import random

import pytest
from hypothesis import strategies as st

from mntgraphs.graph import Graph, from_graph6
from mntgraphs.search import all_levels


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


_CLASSES: dict[int, list[Graph]] = {}


def classes_up_to(n: int) -> list[Graph]:
    """All isomorphism classes of graphs on 1..n vertices."""
    out = []
    for k in range(1, n + 1):
        if k not in _CLASSES:
            _CLASSES[k] = [from_graph6(key) for _, level in all_levels(k) for key in level]
        out.extend(_CLASSES[k])
    return out


@pytest.fixture(scope="session")
def classes7():
    return classes_up_to(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
