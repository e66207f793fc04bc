from itertools import combinations, product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.text import format_colouring, parse_colouring
from acyclic_lab.colouring.verify import find_bicoloured_cycle, is_acyclic_colouring, is_proper
from acyclic_lab.errors import ColouringMismatch, ParseError
from acyclic_lab.gadgets.chain import chain_gadget
from acyclic_lab.graph.core import complete_bipartite, complete_graph, cycle_graph
from acyclic_lab.graph.families import circular_ladder, zigzag_example
from acyclic_lab.harness.oracles import all_assignments, oracle_is_acyclic

from conftest import small_graphs

PRISM_COLOURING = Colouring.of(3, [0, 1, 2, 1, 2, 0])


def test_colour_out_of_palette_is_rejected():
    with pytest.raises(ColouringMismatch):
        Colouring.of(2, [0, 2])


def test_colouring_must_cover_graph():
    with pytest.raises(ColouringMismatch):
        is_proper(complete_graph(3), Colouring.of(3, [0, 1]))


def test_is_proper():
    k2 = complete_graph(2)
    assert is_proper(k2, Colouring.of(2, [0, 1]))
    assert not is_proper(k2, Colouring.of(2, [0, 0]))
    assert is_proper(circular_ladder(3), PRISM_COLOURING)


def test_bicoloured_cycle_witness():
    g = zigzag_example()
    f = Colouring.of(3, [0, 1, 2, 0, 1, 2])
    assert is_proper(g, f)
    witness = find_bicoloured_cycle(g, f)
    assert witness is not None
    assert witness.length == 4
    assert witness.colours == (0, 2)
    assert witness.vertices == (0, 2, 3, 5, 0)


def test_whole_four_cycle_is_the_witness():
    witness = find_bicoloured_cycle(cycle_graph(4), Colouring.of(2, [0, 1, 0, 1]))
    assert witness.vertices == (0, 1, 2, 3, 0)
    assert witness.colours == (0, 1)


def test_prism_colouring_is_acyclic():
    assert find_bicoloured_cycle(circular_ladder(3), PRISM_COLOURING) is None
    assert is_acyclic_colouring(circular_ladder(3), PRISM_COLOURING)


def test_bicoloured_cycle_needs_a_proper_colouring():
    with pytest.raises(ColouringMismatch):
        find_bicoloured_cycle(complete_graph(2), Colouring.of(1, [0, 0]))


def test_is_acyclic_colouring_examples():
    assert is_acyclic_colouring(complete_bipartite(2, 3), Colouring.of(3, [1, 2, 0, 0, 0]))
    assert not is_acyclic_colouring(cycle_graph(4), Colouring.of(2, [0, 1, 0, 1]))
    gadget = chain_gadget(3, 2)
    assert is_acyclic_colouring(gadget.graph, gadget.canonical_colouring)


def test_improper_colouring_is_not_acyclic():
    assert not is_acyclic_colouring(complete_graph(2), Colouring.of(1, [0, 0]))


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_vertices=6), st.integers(min_value=1, max_value=3))
def test_k_common_neighbours_force_distinct_colours(g, k):
    nbrs = g.neighbour_sets
    crowded = [(u, v) for u, v in combinations(g.vertices(), 2) if len(nbrs[u] & nbrs[v]) >= k]
    for a in all_assignments(g.vertex_count, k):
        if oracle_is_acyclic(g, a):
            assert all(a[u] != a[v] for u, v in crowded)


def test_biclique_sides_with_three_common_neighbours_differ():
    g = complete_bipartite(2, 3)
    colourings = [a for a in all_assignments(5, 3) if oracle_is_acyclic(g, a)]
    assert colourings
    assert all(a[0] != a[1] for a in colourings)


@pytest.mark.parametrize("k", [3, 4])
def test_small_biclique_colourings_are_rigid(k):
    g = complete_bipartite(k - 1, k)
    small, large = range(k - 1), range(k - 1, 2 * k - 1)
    colourings = [a for a in all_assignments(g.vertex_count, k) if oracle_is_acyclic(g, a)]
    # k-1 distinct colours on the small side leave one colour for the whole large side
    assert len(colourings) == factorial(k)
    for a in colourings:
        assert len({a[v] for v in small}) == k - 1
        assert len({a[v] for v in large}) == 1


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_vertices=5), st.integers(min_value=1, max_value=3))
def test_verifier_agrees_with_cycle_enumeration(g, k):
    for assignment in product(range(k), repeat=g.vertex_count):
        f = Colouring(k, assignment)
        assert is_acyclic_colouring(g, f) == oracle_is_acyclic(g, assignment)


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_vertices=6), st.data())
def test_witness_is_a_bicoloured_cycle(g, data):
    assignment = data.draw(st.lists(st.integers(0, 2), min_size=g.vertex_count, max_size=g.vertex_count))
    f = Colouring.of(3, assignment)
    if not is_proper(g, f):
        return
    witness = find_bicoloured_cycle(g, f)
    if witness is None:
        return
    walk = witness.vertices
    assert walk[0] == walk[-1]
    assert witness.length >= 4
    assert len(set(walk[:-1])) == witness.length
    assert all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))
    assert {f[v] for v in walk} == set(witness.colours)


def test_colouring_text_format():
    f = Colouring.of(3, [2, 0, 1])
    text = format_colouring(f)
    assert text == "k 3\n0 2\n1 0\n2 1\n"
    assert parse_colouring(text) == f
    assert parse_colouring("k 2 1 0 0 1") == Colouring.of(2, [1, 0])


@pytest.mark.parametrize("text", [
    "",
    "palette 3",
    "k 2 0",
    "k 2 0 0 0 1",
    "k 2 1 0",
    "k 2 0 5",
    "k two",
])
def test_colouring_text_errors(text):
    with pytest.raises(ParseError):
        parse_colouring(text)


def test_relabelled_and_classes():
    f = Colouring.of(3, [0, 1, 0, 2])
    assert f.relabelled([2, 0, 1]).assignment == (2, 0, 2, 1)
    assert f.colour_classes() == {0: [0, 2], 1: [1], 2: [3]}
    assert f.colours_used() == 3
