from itertools import combinations

import pytest
from hypothesis import strategies as st

from acyclic_lab.graph.core import Graph, complete_bipartite, complete_graph, cycle_graph, path_graph
from acyclic_lab.solver.search import SolveBudget, Verdict


@st.composite
def small_graphs(draw, max_vertices=6):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@pytest.fixture
def k23():
    return complete_bipartite(2, 3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def budget():
    return SolveBudget(node_limit=None, wall_limit=30.0)


def decided(result):
    """Skip instead of failing when the search ran out of budget."""
    if result.verdict is Verdict.UNKNOWN:
        pytest.skip(f"solver budget exhausted: {result.reason}")
    return result


@pytest.fixture(autouse=True)
def _no_solve_cache(monkeypatch):
    monkeypatch.setattr("acyclic_lab.config.SOLVE_CACHE_DB", None)
