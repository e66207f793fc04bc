"""
Acceptance campaigns: each suite is a list of named cases, and each case either
passes, fails with a serialized counterexample, or is skipped because a budget
or cap ran out. Budget misses are never failures.
"""
import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from acyclic_lab import config
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.verify import is_acyclic_colouring
from acyclic_lab.errors import BudgetExhausted, CapExceeded, PreconditionError
from acyclic_lab.gadgets.chain import chain_gadget, terminal_colours_agree
from acyclic_lab.gadgets.gd import g_d, gd_acyclic_number
from acyclic_lab.graph.core import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_d_regular,
    path_graph,
)
from acyclic_lab.graph.dimacs import format_dimacs
from acyclic_lab.graph.nx_bridge import graph_atlas
from acyclic_lab.harness.io import colouring_record
from acyclic_lab.harness.oracles import all_assignments, oracle_is_acyclic
from acyclic_lab.reductions.chains import (
    chain_terminal_counts,
    construct_bipartite_delta_k_plus_1,
    construct_swap_auto,
)
from acyclic_lab.reductions.edge_bicliques import coleman_cai, construct_k23
from acyclic_lab.reductions.joins import add_universal, join_kq
from acyclic_lab.reductions.lifts import lift, project
from acyclic_lab.reductions.regular import construct_regular
from acyclic_lab.solver.bounds import Regime, bound_report, regular_regime, trivial_yes_threshold
from acyclic_lab.solver.search import (
    SolveBudget,
    SolveResult,
    Verdict,
    acyclic_chromatic_number,
    enumerate_acyclic_colourings,
    is_k_acyclic_colourable,
    is_k_colourable,
)
from acyclic_lab.symmetry.automorphisms import automorphism_generators, vertex_orbit
from acyclic_lab.symmetry.classes import Kind, Relation, count_classes, is_unique

logger = logging.getLogger(__name__)


class CaseVerdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CaseFailed(Exception):
    def __init__(self, detail: str, counterexample: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.counterexample = counterexample


class CaseSkipped(Exception):
    pass


class CaseResult(BaseModel):
    model_config = ConfigDict(extra='forbid')

    name: str = Field(description="Case name inside the suite")
    verdict: CaseVerdict = Field(description="pass, fail or skipped")
    detail: str = Field(default="", description="Failure or skip reason")
    counterexample: Optional[Dict[str, Any]] = Field(
        default=None, description="Graph (DIMACS text) plus colouring or count pair for a failure"
    )
    seconds: float = Field(default=0.0, description="Wall time of the case")


class SuiteReport(BaseModel):
    """Per-case verdicts of one suite run."""
    model_config = ConfigDict(extra='forbid')

    suite: str
    cases: List[CaseResult] = Field(default_factory=list)
    seconds: float = 0.0

    def tally(self, verdict: CaseVerdict) -> int:
        return sum(1 for c in self.cases if c.verdict is verdict)

    @property
    def ok(self) -> bool:
        return self.tally(CaseVerdict.FAIL) == 0


Case = Tuple[str, Callable[[], None]]


# --- helpers ---------------------------------------------------------------

# per-case wall limit of the suite run executing on this worker thread
_case_seconds = threading.local()


def _budget(seconds: Optional[float] = None) -> SolveBudget:
    seconds = seconds or getattr(_case_seconds, "value", None) or config.SUITE_CASE_SECONDS
    return SolveBudget(config.SOLVE_NODE_LIMIT, seconds)


def _witness(g: Graph, f: Optional[Colouring] = None, **extra) -> Dict[str, Any]:
    return {"graph": format_dimacs(g), "colouring": colouring_record(f), **extra}


def _decided(result: SolveResult, what: str) -> SolveResult:
    if result.verdict is Verdict.UNKNOWN:
        raise CaseSkipped(f"{what}: {result.reason}")
    return result


def _check(condition: bool, detail: str, counterexample: Optional[Dict[str, Any]] = None) -> None:
    if not condition:
        raise CaseFailed(detail, counterexample)


def _acyclic_number(g: Graph, seconds: Optional[float] = None) -> int:
    result = acyclic_chromatic_number(g, _budget(seconds))
    if result.value is None:
        raise CaseSkipped(f"chi_a of {g!r} not settled within budget")
    return result.value


# --- suites ----------------------------------------------------------------

def lower_bounds_cases() -> List[Case]:
    """chi_a > 1 + m/n and chi_a > 1 + mad/2 on every connected graph with edges, n <= 7."""
    def for_order(n: int):
        def run():
            for g in graph_atlas(7, connected_only=True):
                if g.vertex_count != n or g.edge_count == 0:
                    continue
                chi = _acyclic_number(g)
                report = bound_report(g, enable_mad=True)
                _check(chi > report.density_bound, f"chi_a={chi} <= 1 + m/n = {report.density_bound}",
                       _witness(g, chi_a=chi))
                _check(chi > report.mad_bound, f"chi_a={chi} <= 1 + mad/2 = {report.mad_bound}",
                       _witness(g, chi_a=chi))
                if report.regular_bound is not None:
                    _check(chi >= report.regular_bound,
                           f"chi_a={chi} below the regular bound {report.regular_bound}", _witness(g, chi_a=chi))
        return run
    return [(f"n={n}", for_order(n)) for n in range(2, 8)]


def gd_family_cases() -> List[Case]:
    def for_degree(d: int):
        def run():
            gadget = g_d(d)
            g = gadget.graph
            _check(is_d_regular(g, d), f"G_{d} is not {d}-regular", _witness(g))
            chi = _acyclic_number(g)
            want = gd_acyclic_number(d)
            _check(chi == want, f"chi_a(G_{d}) = {chi}, expected {want}", _witness(g, chi_a=chi))
            generators, _ = automorphism_generators(g)
            orbit = vertex_orbit(0, generators)
            _check(len(orbit) == g.vertex_count, f"G_{d} is not vertex-transitive", _witness(g))
        return run
    return [(f"d={d}", for_degree(d)) for d in range(1, 7)]


def chain_lemma_cases() -> List[Case]:
    def for_params(k: int, t: int):
        def run():
            gadget = chain_gadget(k, t)
            colourings = enumerate_acyclic_colourings(gadget.graph, k)
            _check(not colourings.overflow, "enumeration overflowed")
            _check(len(colourings) > 0, "no k-acyclic colouring found", _witness(gadget.graph))
            for f in colourings:
                _check(terminal_colours_agree(gadget, f), "terminal property fails", _witness(gadget.graph, f))
            counted = count_classes(gadget.graph, k, Relation.SWAP_AUTO, Kind.ACYCLIC)
            _check(counted.count == 1, f"{counted.count} classes up to swaps and automorphisms",
                   _witness(gadget.graph, counts=[counted.count, 1]))
        return run
    return [(f"k={k},t={t}", for_params(k, t)) for k in (3, 4) for t in (1, 2)]


def c1_cases() -> List[Case]:
    def run():
        for g in graph_atlas(4):
            output = coleman_cai(g, 3)
            source = _decided(is_k_colourable(g, 3, _budget()), "source 3-colourability")
            target = _decided(is_k_acyclic_colourable(output.graph, 3, _budget()), "output 3-acyclic colourability")
            _check(source.is_yes == target.is_yes,
                   f"3-colourable={source.is_yes} but output 3-acyclic colourable={target.is_yes}",
                   _witness(g))
            if source.is_yes:
                lifted = lift(output, source.colouring)
                _check(is_acyclic_colouring(output.graph, lifted), "lifted colouring is not acyclic",
                       _witness(output.graph, lifted))
    return [("graphs n<=4", run)]


def c2_cases() -> List[Case]:
    k = 3

    def for_graph(name: str, g: Graph):
        def run():
            output = construct_bipartite_delta_k_plus_1(g, k)
            m = g.edge_count
            expected = (2 * k * k - k) * 2 * m + k * m
            _check(output.graph.vertex_count == expected,
                   f"{output.graph.vertex_count} vertices, expected {expected}", _witness(g))
            source = _decided(is_k_colourable(g, k, _budget()), "source 3-colourability")
            if source.is_yes:
                lifted = lift(output, source.colouring)
                _check(is_acyclic_colouring(output.graph, lifted), "lifted colouring is not acyclic",
                       _witness(output.graph, lifted))
                return
            target = _decided(is_k_acyclic_colourable(output.graph, k, _budget()), "output 3-acyclic colourability")
            if target.is_yes:
                back = project(output, target.colouring)
                raise CaseFailed("output is 3-acyclic colourable but the source is not 3-colourable",
                                 _witness(output.graph, target.colouring, projected=colouring_record(back)))
        return run

    inputs = [("K2", complete_graph(2)), ("P3", path_graph(3)), ("C5", cycle_graph(5)), ("K4", complete_graph(4))]
    return [(name, for_graph(name, g)) for name, g in inputs]


def c3_cases() -> List[Case]:
    def for_params(k: int, d: int, name: str, g: Graph):
        def run():
            output = construct_regular(g, k, d)
            source = _decided(is_k_acyclic_colourable(g, k, _budget()), "source k-acyclic colourability")
            _check(source.is_yes, "inputs are chosen k-acyclic colourable", _witness(g))
            lifted = lift(output, source.colouring)
            _check(is_acyclic_colouring(output.graph, lifted), "lifted colouring is not acyclic",
                   _witness(output.graph, lifted))
            target = _decided(is_k_acyclic_colourable(output.graph, k, _budget()), "output k-acyclic colourability")
            _check(target.is_yes, "output is not k-acyclic colourable", _witness(output.graph))
            back = project(output, target.colouring)
            _check(is_acyclic_colouring(g, back), "output colouring does not restrict to a source colouring",
                   _witness(g, back))
        return run

    inputs = [("K2", complete_graph(2)), ("P3", path_graph(3))]
    return [(f"k={k},d={d},{name}", for_params(k, d, name, g))
            for k, d in ((3, 3), (4, 4)) for name, g in inputs]


def c4_cases() -> List[Case]:
    def run():
        for g in graph_atlas(4):
            output = construct_k23(g)
            source = count_classes(g, 3, Relation.SWAP, Kind.PROPER)
            target = count_classes(output.graph, 3, Relation.SWAP, Kind.ACYCLIC)
            _check(source.count == target.count,
                   f"{source.count} 3-colourings vs {target.count} 3-acyclic colourings up to swaps",
                   _witness(g, counts=[source.count, target.count]))
    return [("graphs n<=4", run)]


def c5_cases() -> List[Case]:
    def terminal_counts():
        output = construct_swap_auto(path_graph(3))
        counts = sorted(chain_terminal_counts(output).values())
        _check(len(set(counts)) == len(counts), f"chain lengths {counts} are not distinct",
               _witness(output.source))

    def k2_unique():
        output = construct_swap_auto(complete_graph(2))
        budget = SolveBudget(None, config.SUITE_SWAP_AUTO_SECONDS)
        counted = count_classes(output.graph, 3, Relation.SWAP_AUTO, Kind.ACYCLIC, budget=budget)
        _check(counted.count == 1, f"{counted.count} classes up to swaps and automorphisms",
               _witness(output.graph, counts=[counted.count, 1]))

    return [("P3 chain lengths", terminal_counts), ("K2 unique", k2_unique)]


def c6_cases() -> List[Case]:
    def for_params(q: int, name: str, g: Graph):
        def run():
            joined = join_kq(g, q).graph
            chi, chi_joined = _acyclic_number(g), _acyclic_number(joined)
            _check(chi_joined == q + chi, f"chi_a(G join K_{q}) = {chi_joined}, expected {q} + {chi}",
                   _witness(g, counts=[chi_joined, q + chi]))
            before = is_unique(g, 3, Relation.SWAP_AUTO, Kind.ACYCLIC)
            after = is_unique(joined, 3 + q, Relation.SWAP_AUTO, Kind.ACYCLIC)
            _check(before == after, f"uniqueness {before.value} for G but {after.value} after the join",
                   _witness(g))
        return run

    inputs = [("C4", cycle_graph(4)), ("C5", cycle_graph(5)), ("P4", path_graph(4))]
    return [(f"q={q},{name}", for_params(q, name, g)) for q in (1, 2) for name, g in inputs]


def universal_cases() -> List[Case]:
    def for_graph(g: Graph):
        def run():
            before = count_classes(g, 3, Relation.SWAP, Kind.ACYCLIC)
            after = count_classes(add_universal(g), 4, Relation.SWAP, Kind.ACYCLIC)
            _check(before.count == after.count, f"{before.count} classes before, {after.count} after",
                   _witness(g, counts=[before.count, after.count]))
        return run
    return [("K2,3", for_graph(complete_bipartite(2, 3))), ("P4", for_graph(path_graph(4)))]


def verifier_oracle_cases() -> List[Case]:
    def for_order(n: int):
        def run():
            for g in graph_atlas(5):
                if g.vertex_count != n:
                    continue
                for assignment in all_assignments(n, 3):
                    f = Colouring(3, assignment)
                    _check(is_acyclic_colouring(g, f) == oracle_is_acyclic(g, assignment),
                           "verifier disagrees with the cycle-enumeration oracle", _witness(g, f))
        return run
    return [(f"n={n}", for_order(n)) for n in range(1, 6)]


def regime_cases() -> List[Case]:
    def run():
        _check(regular_regime(4, 6) is Regime.ALWAYS_NO, "(4,6) should be always_no")
        _check(regular_regime(4, 5) is Regime.CANDIDATE_NPC, "(4,5) should be candidate_npc")
        _check(regular_regime(3, 4, regular=False) is Regime.CANDIDATE_NPC, "(3,4) should be candidate_npc")
        _check(trivial_yes_threshold(256, 24), "threshold(256, 24) should hold")
        _check(not trivial_yes_threshold(3, 2), "threshold(3, 2) should fail")
    return [("boundaries", run)]


SUITES: Dict[str, Callable[[], List[Case]]] = {
    "lower-bounds": lower_bounds_cases,
    "gd-family": gd_family_cases,
    "chain-lemma": chain_lemma_cases,
    "c1": c1_cases,
    "c2": c2_cases,
    "c3": c3_cases,
    "c4": c4_cases,
    "c5": c5_cases,
    "c6": c6_cases,
    "universal": universal_cases,
    "verifier-oracle": verifier_oracle_cases,
    "regimes": regime_cases,
}


def _run_case(name: str, fn: Callable[[], None], case_seconds: Optional[float] = None) -> CaseResult:
    start = time.monotonic()
    _case_seconds.value = case_seconds
    try:
        fn()
        verdict, detail, counterexample = CaseVerdict.PASS, "", None
    except CaseFailed as e:
        verdict, detail, counterexample = CaseVerdict.FAIL, e.detail, e.counterexample
    except (CaseSkipped, BudgetExhausted, CapExceeded) as e:
        verdict, detail, counterexample = CaseVerdict.SKIPPED, str(e), None
    except Exception as e:
        logger.exception("Case %s crashed: %s", name, e)
        verdict, detail, counterexample = CaseVerdict.FAIL, f"{type(e).__name__}: {e}", None
    finally:
        _case_seconds.value = None
    return CaseResult(name=name, verdict=verdict, detail=detail, counterexample=counterexample,
                      seconds=round(time.monotonic() - start, 3))


def run_suite(suite: str, workers: Optional[int] = None, progress: bool = True,
              case_seconds: Optional[float] = None) -> SuiteReport:
    """Run every case of `suite`; `case_seconds` overrides the configured per-case wall limit."""
    if suite not in SUITES:
        raise PreconditionError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    cases = SUITES[suite]()
    workers = workers or config.SUITE_WORKERS
    logger.info("Running suite %s: %d cases on %d workers", suite, len(cases), workers)

    start = time.monotonic()
    results: Dict[str, CaseResult] = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_case = {executor.submit(_run_case, name, fn, case_seconds): name for name, fn in cases}
        with tqdm(total=len(cases), desc=suite, unit="case", disable=not progress) as pbar:
            for future in as_completed(future_to_case):
                result = future.result()
                results[result.name] = result
                if result.verdict is CaseVerdict.FAIL:
                    logger.warning("%s / %s failed: %s", suite, result.name, result.detail)
                pbar.update(1)

    report = SuiteReport(
        suite=suite,
        cases=[results[name] for name, _ in cases],
        seconds=round(time.monotonic() - start, 3),
    )
    logger.info("Suite %s: %d passed, %d failed, %d skipped in %.1fs", suite,
                report.tally(CaseVerdict.PASS), report.tally(CaseVerdict.FAIL),
                report.tally(CaseVerdict.SKIPPED), report.seconds)
    return report
