import itertools

import pytest
from hypothesis import strategies as st

from hypercolor.core import Hypergraph, build, complete, cycle, merge, path

ACCEPTANCE_LINES: list[str] = []


def bowtie() -> Hypergraph:
    return merge(complete(3, ["a", "b", "c"]), "a", complete(3, ["d", "e", "f"]), "d", "v")


def two_cliques_bridged(n: int) -> Hypergraph:
    left = [f"a{i}" for i in range(n)]
    right = [f"b{i}" for i in range(n)]
    edges = [list(p) for g in (left, right) for p in itertools.combinations(g, 2)]
    return build(left + right, edges + [[left[-1], right[0]]])


@st.composite
def hypergraphs(draw, max_order=5, max_edges=6, max_edge_size=3):
    n = draw(st.integers(0, max_order))
    names = [str(i) for i in range(n)]
    if n < 2:
        return build(names, [])
    edge = st.lists(st.sampled_from(names), min_size=2, max_size=min(max_edge_size, n), unique=True)
    return build(names, draw(st.lists(edge, max_size=max_edges)))


@pytest.fixture
def C5():
    return cycle(5)


@pytest.fixture
def K4():
    return complete(4)


@pytest.fixture
def P3():
    return path(3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
