"""Joins with complete graphs: the K_q join and the universal-vertex step."""
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.graph.core import Graph, complete_graph, has_universal_vertex, join
from acyclic_lab.reductions.base import Origin, Provenance, ReductionOutput, finish


def _join_output(construction: str, g: Graph, q: int) -> ReductionOutput:
    graph = join(g, complete_graph(q))
    provenance = [Provenance(origin=Origin.SOURCE, vertex=v) for v in g.vertices()]
    provenance += [Provenance(origin=Origin.HUB, index=j) for j in range(1, q + 1)]
    return finish(construction, g, graph, provenance, [], q=q)


def join_kq(g: Graph, q: int) -> ReductionOutput:
    """G joined with K_q; hubs follow the source vertices. chi_a of the result is q + chi_a(G)."""
    if q < 1:
        raise PreconditionError(f"q must be positive, got {q}")
    universal = has_universal_vertex(g)
    if universal is not None:
        raise PreconditionError(f"input has a universal vertex ({universal})")
    return _join_output("c6", g, q)


def add_universal(g: Graph) -> Graph:
    return join(g, complete_graph(1))


def construct_universal(g: Graph) -> ReductionOutput:
    """add_universal with provenance, for file output."""
    return _join_output("universal", g, 1)


def lift_join(output: ReductionOutput, f: Colouring) -> Colouring:
    """Source vertices keep f, hub j takes colour k + j - 1; palette k + q."""
    f.check_covers(output.source)
    k, q = f.palette_size, output.parameters["q"]
    colours = [f[p.vertex] if p.origin is Origin.SOURCE else k + p.index - 1 for p in output.provenance]
    return Colouring(k + q, tuple(colours))
