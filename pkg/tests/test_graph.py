import pytest
from hypothesis import given, settings

from acyclic_lab.errors import ParseError, PreconditionError
from acyclic_lab.gadgets.chain import chain_gadget
from acyclic_lab.gadgets.gd import g_d
from acyclic_lab.graph.core import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    has_universal_vertex,
    identify_vertices,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_d_regular,
    is_k_degenerate,
    join,
    max_degree,
    path_graph,
    regular_degree,
)
from acyclic_lab.graph.dimacs import format_dimacs, graph_hash, parse_dimacs, read_dimacs, write_dimacs
from acyclic_lab.graph.families import EXCEPTIONS, exception_graph, named_graph
from acyclic_lab.graph.nx_bridge import graph_atlas, to_networkx
from acyclic_lab.harness.oracles import oracle_is_bipartite, oracle_is_k_degenerate
from acyclic_lab.reductions.edge_bicliques import coleman_cai

from conftest import small_graphs


def test_from_edges_normalises_and_dedupes():
    g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 2)])
    assert g.edges == ((0, 2), (1, 2))
    assert g == Graph.from_edges(3, [(1, 2), (0, 2)])


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_from_edges_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        Graph.from_edges(3, edges)


def test_direct_construction_requires_sorted_edges():
    with pytest.raises(ValueError):
        Graph(3, ((1, 2), (0, 1)))


def test_max_degree():
    assert max_degree(complete_bipartite(2, 3)) == 3
    assert max_degree(g_d(5).graph) == 5
    assert max_degree(empty_graph(1)) == 0


def test_is_d_regular():
    assert is_d_regular(cycle_graph(4), 2)
    assert is_d_regular(g_d(4).graph, 4)
    assert not is_d_regular(path_graph(3), 1)
    assert regular_degree(path_graph(3)) is None
    assert regular_degree(empty_graph(0)) is None


def test_is_bipartite():
    assert is_bipartite(cycle_graph(4)) == (frozenset({0, 2}), frozenset({1, 3}))
    assert is_bipartite(complete_graph(3)) is None
    assert is_bipartite(chain_gadget(3, 2).graph) is not None


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_vertices=7))
def test_is_bipartite_matches_odd_cycle_search(g):
    sides = is_bipartite(g)
    assert (sides is not None) == oracle_is_bipartite(g)
    if sides is not None:
        left, right = sides
        assert left | right == frozenset(g.vertices())
        assert all((u in left) != (v in left) for u, v in g.edges)


def test_is_k_degenerate():
    assert is_k_degenerate(coleman_cai(complete_bipartite(3, 3), 3).graph, 2) is not None
    assert is_k_degenerate(complete_graph(4), 2) is None
    tree = Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert is_k_degenerate(tree, 1) is not None


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_degeneracy_order_is_a_witness(g):
    for k in range(3):
        order = is_k_degenerate(g, k)
        assert (order is not None) == oracle_is_k_degenerate(g, k)
        if order is not None:
            position = {v: i for i, v in enumerate(order)}
            for v in g.vertices():
                earlier = [w for w in g.adjacency[v] if position[w] < position[v]]
                assert len(earlier) <= k


def test_has_universal_vertex():
    assert has_universal_vertex(complete_graph(4)) is not None
    assert has_universal_vertex(cycle_graph(5)) is None
    assert has_universal_vertex(join(cycle_graph(4), complete_graph(1))) == 4


def test_disjoint_union():
    assert disjoint_union(complete_graph(2), complete_graph(2)) == Graph(4, ((0, 1), (2, 3)))
    assert disjoint_union(empty_graph(0), cycle_graph(3)) == cycle_graph(3)
    union = disjoint_union(path_graph(3), path_graph(3))
    assert (union.vertex_count, union.edge_count) == (6, 4)


def test_join():
    wheel = join(cycle_graph(4), complete_graph(1))
    assert (wheel.vertex_count, wheel.edge_count) == (5, 8)
    assert join(complete_graph(1), complete_graph(1)) == complete_graph(2)
    assert join(cycle_graph(4), complete_graph(2)).edge_count == 13


def test_identify_vertices():
    assert identify_vertices(path_graph(3), [[0, 2]]) == complete_graph(2)
    with pytest.raises(PreconditionError):
        identify_vertices(complete_graph(2), [[0, 1]])
    two_edges = disjoint_union(complete_graph(2), complete_graph(2))
    assert identify_vertices(two_edges, [[1, 2]]) == path_graph(3)


def test_identify_vertices_rejects_overlapping_groups():
    with pytest.raises(PreconditionError):
        identify_vertices(empty_graph(4), [[0, 1], [1, 2]])


def test_complete_bipartite():
    assert complete_bipartite(2, 3).edge_count == 6
    assert complete_bipartite(1, 1) == complete_graph(2)
    assert complete_bipartite(3, 4).edge_count == 12
    with pytest.raises(PreconditionError):
        complete_bipartite(0, 2)


def test_induced_subgraph_and_connectivity():
    g = cycle_graph(5)
    assert induced_subgraph(g, [0, 1, 2]) == path_graph(3)
    assert is_connected(g)
    assert not is_connected(disjoint_union(g, g))


def test_dimacs_text_is_canonical():
    g = complete_bipartite(2, 3)
    text = format_dimacs(g, comments=["K23"])
    assert text.splitlines()[0] == "c K23"
    assert parse_dimacs(text.splitlines()) == g
    assert graph_hash(g) == graph_hash(parse_dimacs(format_dimacs(g).splitlines()))


def test_dimacs_file_roundtrip(tmp_path):
    g = g_d(3).graph
    path = tmp_path / "nested" / "g3.col"
    write_dimacs(g, str(path))
    assert read_dimacs(str(path)) == g


@pytest.mark.parametrize("text", [
    "e 1 2\np edge 2 1\n",
    "p edge 2 1\n",
    "p edge 2 1\ne 1 3\n",
    "p edge 2 1\ne 1 x\n",
    "p edge two 1\n",
    "p edge 2 1\ne 1 1\n",
    "p edge 2 1\np edge 2 1\ne 1 2\n",
    "x 1 2\n",
    "",
])
def test_dimacs_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text.splitlines())


def test_dimacs_accepts_col_problem_and_duplicate_edges():
    g = parse_dimacs(["c comment", "p col 3 2", "e 1 2", "e 2 1", "e 2 3"])
    assert g == path_graph(3)


def test_named_graphs():
    assert named_graph("k2,3") == complete_bipartite(2, 3)
    assert named_graph("C5") == cycle_graph(5)
    assert named_graph("p3") == path_graph(3)
    assert named_graph("petersen").edge_count == 15
    assert named_graph("cl3").vertex_count == 6
    with pytest.raises(PreconditionError):
        named_graph("nonsense")


@pytest.mark.parametrize("name", sorted(EXCEPTIONS))
def test_exception_graphs_are_cubic(name):
    g = exception_graph(name)
    assert is_d_regular(g, 3)
    assert is_connected(g)


def test_unknown_exception_graph():
    with pytest.raises(PreconditionError):
        exception_graph("petersen")


def test_atlas_counts_graphs_up_to_isomorphism():
    assert sum(1 for _ in graph_atlas(3)) == 8
    assert sum(1 for _ in graph_atlas(4, connected_only=True)) == 1 + 1 + 2 + 6
    with pytest.raises(ValueError):
        next(graph_atlas(8))


def test_networkx_bridge_preserves_edges():
    g = g_d(5).graph
    h = to_networkx(g)
    assert h.number_of_nodes() == 12
    assert h.number_of_edges() == 30
