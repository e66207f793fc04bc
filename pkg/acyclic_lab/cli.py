"""
acyclic-lab command line: gen | reduce | solve | count | verify | bound.

Exit codes: 0 yes/verified, 1 no/refuted, 2 unknown/budget/overflow, 3 usage error.
"""
import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from acyclic_lab import __version__, config
from acyclic_lab.errors import CapExceeded, ColouringMismatch, ParseError, PreconditionError
from acyclic_lab.gadgets.chain import chain_gadget
from acyclic_lab.gadgets.filler import filler_gadget
from acyclic_lab.gadgets.gd import g_d
from acyclic_lab.graph.core import max_degree
from acyclic_lab.graph.dimacs import graph_hash
from acyclic_lab.graph.families import EXCEPTIONS, exception_graph, named_graph
from acyclic_lab.harness.io import (
    Manifest,
    colouring_record,
    load_graph,
    read_colouring,
    write_colouring,
    write_graph,
    write_manifest,
)
from acyclic_lab.harness.suites import SUITES, CaseVerdict, run_suite
from acyclic_lab.reductions.chains import construct_bipartite_delta_k_plus_1, construct_swap_auto
from acyclic_lab.reductions.edge_bicliques import coleman_cai, construct_k23
from acyclic_lab.reductions.joins import construct_universal, join_kq
from acyclic_lab.reductions.regular import construct_regular
from acyclic_lab.solver.bounds import bound_report, npc_degree_bound, regular_regime, trivial_yes_threshold
from acyclic_lab.solver.cache import cached_number
from acyclic_lab.solver.search import (
    SolveBudget,
    Verdict,
    acyclic_chromatic_number,
    chromatic_number,
    is_k_acyclic_colourable,
    is_k_colourable,
)
from acyclic_lab.symmetry.classes import Kind, Relation, another_colouring, count_classes

logger = logging.getLogger(__name__)

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3
VERDICT_EXIT = {Verdict.YES: EXIT_YES, Verdict.NO: EXIT_NO, Verdict.UNKNOWN: EXIT_UNKNOWN}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; 2 means 'unknown' here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _stem(args, default: str) -> str:
    return args.out or os.path.join(config.OUTPUT_DIR, default)


def _budget(args) -> SolveBudget:
    seconds = args.seconds if args.seconds is not None else config.SOLVE_SECONDS
    nodes = args.nodes if args.nodes is not None else config.SOLVE_NODE_LIMIT
    return SolveBudget(nodes, seconds)


def _emit(record: dict) -> None:
    print(json.dumps(record, indent=2, ensure_ascii=False))


# --- gen -------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family == "gd":
        _require(args, "d")
        gadget, default, params = g_d(args.d), f"gd{args.d}", {"d": args.d}
    elif args.family == "chain":
        _require(args, "k", "t")
        gadget, default, params = chain_gadget(args.k, args.t), f"chain_k{args.k}_t{args.t}", {"k": args.k, "t": args.t}
    elif args.family == "filler":
        _require(args, "d")
        gadget, default, params = filler_gadget(args.d), f"filler_d{args.d}", {"d": args.d}
    else:
        _require(args, "name")
        gadget, default, params = None, args.name.replace(",", "_"), {"name": args.name}

    if gadget is not None:
        graph = gadget.graph
    elif args.family == "exception":
        graph = exception_graph(args.name)
    else:
        graph = named_graph(args.name)
    sidecar = {"family": args.family, "parameters": params}
    if gadget is not None:
        sidecar.update(gadget.sidecar())
    stem = _stem(args, default)
    written = write_graph(stem, graph, sidecar, comments=[f"acyclic-lab gen {args.family}"])
    write_manifest(stem, Manifest(
        command=f"gen {args.family}",
        parameters=params,
        outcome={"vertices": graph.vertex_count, "edges": graph.edge_count, "graph_hash": graph_hash(graph)},
    ))
    print(f"{written['graph']}: n={graph.vertex_count} m={graph.edge_count}")
    return EXIT_YES


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise PreconditionError(f"missing required option(s) {' '.join(missing)}")


# --- reduce ----------------------------------------------------------------

def cmd_reduce(args) -> int:
    g = load_graph(args.input)
    construction = args.construction
    k = args.k if args.k is not None else 3
    if construction == "cc":
        output = coleman_cai(g, k)
    elif construction == "c2":
        output = construct_bipartite_delta_k_plus_1(g, k)
    elif construction == "c3":
        _require(args, "d")
        output = construct_regular(g, k, args.d)
    elif construction == "c4":
        output = construct_k23(g)
    elif construction == "c5":
        output = construct_swap_auto(g)
    elif construction == "c6":
        output = join_kq(g, args.q if args.q is not None else 1)
    else:
        output = construct_universal(g)

    out = output.graph
    stem = _stem(args, f"{construction}_{graph_hash(g)[:8]}")
    written = write_graph(stem, out, output.sidecar(), comments=[f"acyclic-lab reduce {construction}"])
    write_manifest(stem, Manifest(
        command=f"reduce {construction}",
        inputs={args.input: graph_hash(g)},
        parameters=dict(output.parameters),
        outcome={
            "vertices": out.vertex_count,
            "edges": out.edge_count,
            "max_degree": max_degree(out),
            "claims": [str(c) for c in output.claims],
            "graph_hash": graph_hash(out),
        },
    ))
    print(f"{written['graph']}: n={out.vertex_count} m={out.edge_count} claims: "
          f"{', '.join(str(c) for c in output.claims) or 'none'}")
    return EXIT_YES


# --- solve -----------------------------------------------------------------

def cmd_solve(args) -> int:
    g = load_graph(args.input)
    budget = _budget(args)
    kind = "chromatic" if args.chromatic else "acyclic"

    if args.number:
        compute = chromatic_number if args.chromatic else acyclic_chromatic_number
        result = cached_number(g, kind, lambda: compute(g, budget))
        _emit({"kind": kind, "number": result.value, "verdict": result.verdict.value, "nodes": result.nodes})
        if result.colouring is not None and args.out:
            write_colouring(args.out, result.colouring)
        return EXIT_YES if result.value is not None else EXIT_UNKNOWN

    _require(args, "k")
    decide = is_k_colourable if args.chromatic else is_k_acyclic_colourable
    result = decide(g, args.k, budget, workers=args.workers)
    _emit({
        "kind": kind,
        "k": args.k,
        "verdict": result.verdict.value,
        "reason": result.reason,
        "nodes": result.nodes,
        "colouring": colouring_record(result.colouring),
    })
    if result.colouring is not None and args.out:
        write_colouring(args.out, result.colouring)
    return VERDICT_EXIT[result.verdict]


# --- count -----------------------------------------------------------------

def cmd_count(args) -> int:
    g = load_graph(args.input)
    relation, kind = Relation(args.relation), Kind(args.kind)
    try:
        if args.another:
            f = read_colouring(args.another)
            other = another_colouring(g, f, relation, kind, cap=args.cap)
            _emit({"relation": relation.value, "kind": kind.value, "another": colouring_record(other)})
            return EXIT_YES if other is not None else EXIT_NO
        _require(args, "k")
        counted = count_classes(g, args.k, relation, kind, cap=args.cap,
                                with_representatives=args.representatives)
    except CapExceeded as e:
        _emit({"relation": relation.value, "kind": kind.value, "k": args.k, "overflow": str(e)})
        return EXIT_UNKNOWN
    _emit(counted.model_dump(mode="json", exclude_none=True))
    return EXIT_YES


# --- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    report = run_suite(args.suite, workers=args.workers, progress=not args.quiet, case_seconds=args.seconds)
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        for case in report.cases:
            line = f"{case.verdict.value:8s} {case.name} ({case.seconds:.2f}s)"
            if case.detail:
                line += f": {case.detail}"
            print(line)
        print(f"{report.suite}: {report.tally(CaseVerdict.PASS)} passed, "
              f"{report.tally(CaseVerdict.FAIL)} failed, {report.tally(CaseVerdict.SKIPPED)} skipped")
    if args.out:
        write_manifest(args.out, Manifest(
            command=f"verify {args.suite}",
            parameters={"case_seconds": args.seconds or config.SUITE_CASE_SECONDS, "seed": config.SAMPLING_SEED,
                        "workers": args.workers or config.SUITE_WORKERS},
            outcome={c.name: c.verdict.value for c in report.cases},
        ))
    return EXIT_YES if report.ok else EXIT_NO


# --- bound -----------------------------------------------------------------

def cmd_bound(args) -> int:
    record = {}
    if args.input:
        g = load_graph(args.input)
        report = bound_report(g, enable_mad=args.mad)
        record["bounds"] = report.model_dump(mode="json")
        record["implied_minimum"] = report.implied_minimum()
    if args.k is not None:
        record["npc_degree_bound"] = npc_degree_bound(args.k)
        if args.d is not None:
            record["regime"] = regular_regime(args.k, args.d, regular=not args.max_degree).value
            record["trivial_yes"] = trivial_yes_threshold(args.k, args.d)
    if not record:
        raise PreconditionError("give an input graph and/or --k [--d]")
    _emit(record)
    return EXIT_YES


# --- parser ----------------------------------------------------------------

def _budget_options(p) -> None:
    p.add_argument("--seconds", type=float, help=f"wall budget per solve (default {config.SOLVE_SECONDS})")
    p.add_argument("--nodes", type=int, help="search node budget (default unlimited)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="acyclic-lab", description="Exact acyclic colouring solver and reduction workbench")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--version", action="version", version=f"acyclic-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a gadget or named graph")
    p.add_argument("family", choices=["gd", "chain", "filler", "exception", "named"])
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--name", help=f"exception: one of {sorted(EXCEPTIONS)}; named: e.g. k2,3 c5 petersen")
    p.add_argument("-o", "--out", help="output stem (writes <stem>.col and <stem>.meta.json)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="apply a construction to a DIMACS graph")
    p.add_argument("construction", choices=["cc", "c2", "c3", "c4", "c5", "c6", "universal"])
    p.add_argument("input", help="DIMACS file or named:<graph>")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("-o", "--out", help="output stem")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="decide colourability or compute a chromatic number")
    p.add_argument("input", help="DIMACS file or named:<graph>")
    p.add_argument("--k", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--acyclic", action="store_true", help="k-acyclic colourability (default)")
    mode.add_argument("--chromatic", action="store_true", help="plain k-colourability")
    p.add_argument("--number", action="store_true", help="smallest feasible k instead of a decision")
    p.add_argument("--workers", type=int, default=1, help="split the first branching across threads")
    p.add_argument("-o", "--out", help="write the witness colouring here")
    _budget_options(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("count", help="count colouring classes up to symmetry")
    p.add_argument("input", help="DIMACS file or named:<graph>")
    p.add_argument("--k", type=int)
    p.add_argument("--relation", choices=[r.value for r in Relation], default=Relation.SWAP.value)
    p.add_argument("--kind", choices=[k.value for k in Kind], default=Kind.ACYCLIC.value)
    p.add_argument("--cap", type=int, default=None, help=f"enumeration cap (default {config.ENUMERATION_CAP})")
    p.add_argument("--representatives", action="store_true", help="list one canonical colouring per class")
    p.add_argument("--another", metavar="COLOURING", help="find a colouring not related to this one")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run an acceptance suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--json", action="store_true", help="print the SuiteReport as JSON")
    p.add_argument("--seconds", type=float, help=f"per-case budget (default {config.SUITE_CASE_SECONDS})")
    p.add_argument("--workers", type=int)
    p.add_argument("--quiet", action="store_true", help="no progress bar")
    p.add_argument("-o", "--out", help="write <stem>.manifest.json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="lower bounds and degree regimes")
    p.add_argument("input", nargs="?", help="DIMACS file or named:<graph>")
    p.add_argument("--mad", action="store_true", help="include the max-average-degree bound (n <= 20)")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--max-degree", action="store_true", help="classify max-degree-d graphs instead of d-regular")
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (PreconditionError, ParseError, ColouringMismatch, OSError) as e:
        logger.debug("command failed", exc_info=True)
        print(f"acyclic-lab: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
