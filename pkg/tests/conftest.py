import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from graphsemigroups.graph import Graph  # noqa: E402


@st.composite
def connected_graphs(draw, min_n=2, max_n=6):
    """Connected simple graphs: a random tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    extra = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    if extra:
        chosen = draw(st.lists(st.sampled_from(extra), unique=True, max_size=len(extra)))
        edges.update(chosen)
    return Graph(n, edges)


@pytest.fixture
def c3():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c4():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.result_lines():
        terminalreporter.write_line(line)
