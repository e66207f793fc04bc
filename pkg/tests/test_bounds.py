from fractions import Fraction

import pytest

from acyclic_lab.errors import PreconditionError
from acyclic_lab.gadgets.gd import g_d
from acyclic_lab.graph.core import complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from acyclic_lab.graph.nx_bridge import graph_atlas
from acyclic_lab.solver.bounds import (
    Regime,
    bound_report,
    ceil_sqrt,
    max_average_degree,
    npc_degree_bound,
    regular_regime,
    trivial_yes_threshold,
)
from acyclic_lab.solver.search import SolveBudget, acyclic_chromatic_number


def test_density_bounds():
    assert bound_report(cycle_graph(5)).density_bound == 2
    assert bound_report(complete_graph(4)).density_bound == Fraction(5, 2)
    assert bound_report(empty_graph(0)).density_bound == 1


def test_regular_bound():
    assert bound_report(g_d(4).graph).regular_bound == 4
    assert bound_report(path_graph(3)).regular_bound is None
    assert bound_report(empty_graph(3)).regular_bound is None


def test_report_serialises_fractions_as_text():
    report = bound_report(complete_graph(4), enable_mad=True)
    dumped = report.model_dump(mode="json")
    assert dumped["density_bound"] == "5/2"
    assert dumped["mad_bound"] == "5/2"
    assert report.implied_minimum() == 3


def test_max_average_degree_finds_the_densest_part():
    g = disjoint_union(complete_graph(4), path_graph(6))
    assert max_average_degree(g) == 3
    assert max_average_degree(empty_graph(3)) == 0
    with pytest.raises(PreconditionError):
        max_average_degree(empty_graph(21))


def test_implied_minimum_uses_every_bound():
    assert bound_report(g_d(5).graph).implied_minimum() == 4
    assert bound_report(cycle_graph(5)).implied_minimum() == 3


@pytest.mark.slow
def test_number_beats_density_and_mad_on_small_connected_graphs():
    for g in graph_atlas(6, connected_only=True):
        if g.edge_count == 0:
            continue
        value = acyclic_chromatic_number(g, SolveBudget.unlimited()).value
        report = bound_report(g, enable_mad=True)
        assert value > report.density_bound
        assert value > report.mad_bound
        if report.regular_bound is not None:
            assert value >= report.regular_bound


@pytest.mark.parametrize("k, d, expected", [
    (3, 0, True),
    (3, 2, False),
    (256, 24, True),
    (256, 25, False),
])
def test_trivial_yes_threshold(k, d, expected):
    assert trivial_yes_threshold(k, d) is expected


@pytest.mark.parametrize("k, expected", [(3, 12), (4, 20), (9, 99)])
def test_npc_degree_bound(k, expected):
    assert npc_degree_bound(k) == expected


def test_ceil_sqrt():
    assert [ceil_sqrt(k) for k in (1, 2, 4, 5, 9, 10)] == [1, 2, 2, 3, 3, 4]


@pytest.mark.parametrize("k, d, expected", [
    (4, 6, Regime.ALWAYS_NO),
    (4, 5, Regime.CANDIDATE_NPC),
    (3, 2, Regime.OPEN),
    (3, 4, Regime.ALWAYS_NO),
])
def test_regular_regime(k, d, expected):
    assert regular_regime(k, d) is expected


def test_max_degree_regime():
    assert regular_regime(3, 4, regular=False) is Regime.CANDIDATE_NPC
    assert regular_regime(3, 3, regular=False) is Regime.OPEN


def test_regimes_need_three_colours():
    with pytest.raises(PreconditionError):
        regular_regime(2, 2)
    with pytest.raises(PreconditionError):
        trivial_yes_threshold(2, 1)
