from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.verify import is_acyclic_colouring
from acyclic_lab.errors import CapExceeded, ColouringMismatch, PreconditionError
from acyclic_lab.gadgets.chain import chain_gadget, terminal_colours_agree
from acyclic_lab.gadgets.gd import g_d
from acyclic_lab.graph.core import complete_bipartite, complete_graph, cycle_graph, path_graph
from acyclic_lab.graph.families import petersen
from acyclic_lab.solver.search import enumerate_acyclic_colourings, enumerate_colourings
from acyclic_lab.symmetry.automorphisms import _Backtrack, automorphism_generators, automorphisms, group_order
from acyclic_lab.symmetry.classes import (
    Kind,
    Relation,
    Uniqueness,
    another_colouring,
    canonical_under_swaps,
    count_classes,
    is_unique,
    related,
)
from acyclic_lab.symmetry.permutations import Automorphism, ColourPermutation, is_automorphism
from acyclic_lab.utils.union_find import UnionFind

from conftest import small_graphs


@pytest.mark.parametrize("assignment, expected", [
    ((2, 0, 1), (0, 1, 2)),
    ((0, 1, 0), (0, 1, 0)),
    ((1, 1, 0), (0, 0, 1)),
])
def test_canonical_under_swaps(assignment, expected):
    assert canonical_under_swaps(Colouring(3, assignment)).assignment == expected


@settings(max_examples=60)
@given(st.lists(st.integers(0, 3), max_size=8), st.permutations(range(4)))
def test_canonical_form_is_idempotent_and_swap_invariant(assignment, sigma):
    f = Colouring.of(4, assignment)
    canonical = canonical_under_swaps(f)
    assert canonical_under_swaps(canonical) == canonical
    assert canonical_under_swaps(ColourPermutation(tuple(sigma)).apply(f)) == canonical


def test_colour_permutation_algebra():
    sigma = ColourPermutation((1, 2, 0))
    assert sigma.compose(sigma.inverse()) == ColourPermutation.identity(3)
    assert sigma.apply(Colouring.of(3, [0, 1])).assignment == (1, 2)
    with pytest.raises(PreconditionError):
        ColourPermutation((0, 0, 1))
    with pytest.raises(ColouringMismatch):
        sigma.apply(Colouring.of(2, [0, 1]))


def test_automorphism_action():
    psi = Automorphism((1, 2, 0))
    f = Colouring.of(3, [0, 1, 2])
    h = psi.act(f)
    assert all(h[psi(v)] == f[v] for v in range(3))
    assert psi.compose(psi.inverse()).is_identity()


@pytest.mark.parametrize("graph, expected", [
    (complete_graph(3), 6),
    (path_graph(3), 2),
    (cycle_graph(5), 10),
    (petersen(), 120),
])
def test_automorphism_counts(graph, expected):
    found = automorphisms(graph)
    assert len(found) == expected
    assert found[0].is_identity()
    assert all(is_automorphism(graph, psi) for psi in found)
    assert group_order(graph) == expected


def test_gd5_is_vertex_transitive():
    g = g_d(5).graph
    images = {psi(0) for psi in automorphisms(g)}
    assert images == set(g.vertices())


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_vertices=6))
def test_automorphisms_form_a_group(g):
    found = automorphisms(g)
    members = set(found)
    for a in found:
        assert a.inverse() in members
        for b in found:
            assert a.compose(b) in members
    assert group_order(g) == len(found)


def test_generators_reach_the_whole_group():
    g = petersen()
    gens, order = automorphism_generators(g)
    assert order == 120
    closure = {Automorphism.identity(g.vertex_count)}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for psi in gens:
            y = psi.compose(x)
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    assert len(closure) == 120


def test_automorphism_cap():
    with pytest.raises(CapExceeded):
        automorphisms(petersen(), cap=10)


def test_is_automorphism_rejects_non_edges():
    assert not is_automorphism(path_graph(3), Automorphism((1, 0, 2)))
    assert not is_automorphism(path_graph(3), Automorphism((0, 1)))


def test_search_output_is_checked_against_the_adjacency_matrix(monkeypatch):
    # with consistency checks disabled the search maps the middle of P4 the wrong way round
    monkeypatch.setattr(_Backtrack, "_consistent", lambda self, v, image, mapping, used: True)
    with pytest.raises(RuntimeError, match="non-automorphism"):
        automorphisms(path_graph(4))
    with pytest.raises(RuntimeError, match="non-automorphism"):
        automorphism_generators(path_graph(4))


@pytest.mark.parametrize("graph, k, kind, expected", [
    (path_graph(3), 2, Kind.PROPER, 1),
    (complete_bipartite(2, 3), 3, Kind.ACYCLIC, 1),
    (path_graph(3), 3, Kind.PROPER, 2),
    (cycle_graph(4), 2, Kind.ACYCLIC, 0),
])
def test_swap_class_counts(graph, k, kind, expected):
    counted = count_classes(graph, k, Relation.SWAP, kind)
    assert counted.count == expected


def test_representatives_are_canonical_and_sorted():
    counted = count_classes(path_graph(3), 3, Relation.SWAP, Kind.PROPER, with_representatives=True)
    assert counted.colourings == 12
    assert counted.representatives == [[0, 1, 0], [0, 1, 2]]


def test_count_overflow():
    with pytest.raises(CapExceeded):
        count_classes(cycle_graph(6), 3, cap=3)


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_vertices=5), st.integers(1, 3))
def test_count_sandwich(g, k):
    swap = count_classes(g, k, Relation.SWAP, Kind.ACYCLIC)
    total = len(enumerate_acyclic_colourings(g, k))
    assert swap.count <= total <= swap.count * factorial(k)
    auto = count_classes(g, k, Relation.SWAP_AUTO, Kind.ACYCLIC)
    assert auto.count <= swap.count


@settings(max_examples=20, deadline=None)
@given(small_graphs(max_vertices=5))
def test_automorphisms_preserve_acyclicity(g):
    found = automorphisms(g)
    for f in enumerate_acyclic_colourings(g, 3):
        for psi in found:
            assert is_acyclic_colouring(g, psi.act(f))


def test_another_colouring():
    k23 = complete_bipartite(2, 3)
    assert another_colouring(k23, Colouring.of(3, [1, 2, 0, 0, 0])) is None

    c6 = cycle_graph(6)
    f = Colouring.of(3, [0, 1, 2, 0, 1, 2])
    other = another_colouring(c6, f)
    assert other is not None
    assert is_acyclic_colouring(c6, other)
    assert canonical_under_swaps(other) != canonical_under_swaps(f)

    assert another_colouring(complete_graph(2), Colouring.of(2, [0, 1]), kind=Kind.PROPER) is None


def test_another_colouring_rejects_wrong_kind():
    with pytest.raises(ColouringMismatch):
        another_colouring(cycle_graph(4), Colouring.of(2, [0, 1, 0, 1]))


def test_uniqueness():
    chain = chain_gadget(3, 2).graph
    assert is_unique(chain, 3, Relation.SWAP_AUTO, Kind.ACYCLIC) is Uniqueness.UNIQUE
    assert is_unique(cycle_graph(4), 2, Relation.SWAP, Kind.ACYCLIC) is Uniqueness.NONE_EXIST
    assert is_unique(chain, 3, Relation.SWAP, Kind.ACYCLIC) is Uniqueness.NOT_UNIQUE
    assert is_unique(cycle_graph(6), 3, cap=2) is Uniqueness.OVERFLOW


@pytest.mark.parametrize("k, t", [(3, 1), (3, 2), (4, 1), (4, 2)])
def test_chain_colourings_share_the_terminal_colour(k, t):
    gadget = chain_gadget(k, t)
    colourings = enumerate_colourings(gadget.graph, k)
    assert len(colourings) > 0
    assert all(terminal_colours_agree(gadget, f) for f in colourings)
    assert count_classes(gadget.graph, k, Relation.SWAP_AUTO, Kind.ACYCLIC).count == 1


def test_related():
    p3 = path_graph(3)
    f1 = Colouring.of(3, [0, 1, 2])
    f2 = Colouring.of(3, [2, 1, 0])
    assert related(p3, f1, f2, Relation.SWAP)
    f3 = Colouring.of(3, [0, 1, 0])
    assert not related(p3, f1, f3, Relation.SWAP_AUTO)
    path4 = path_graph(4)
    g1 = Colouring.of(3, [0, 1, 2, 0])
    g2 = Colouring.of(3, [0, 2, 1, 0])
    assert related(path4, g1, g2, Relation.SWAP)
    h1 = Colouring.of(3, [0, 1, 0, 2])
    h2 = Colouring.of(3, [0, 1, 2, 1])
    assert not related(path4, h1, h2, Relation.SWAP)
    assert related(path4, h1, h2, Relation.SWAP_AUTO)


def test_union_find_classes():
    uf = UnionFind("abcde")
    assert uf.union("a", "b")
    uf.union("c", "d")
    uf.union("b", "d")
    assert not uf.union("a", "c")
    assert len(uf) == 2
    assert sorted(sorted(members) for members in uf.classes().values()) == [["a", "b", "c", "d"], ["e"]]
