"""
Edge replacement by K_{2,k}: every edge uv becomes k fresh connectors adjacent
to both u and v. A k-colouring of the source lifts to a k-acyclic colouring of
the output, and a k-acyclic colouring of the output restricts to a k-colouring.
"""
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.graph.core import Graph, max_degree
from acyclic_lab.reductions.base import (
    Origin,
    Provenance,
    ReductionOutput,
    bipartite,
    degenerate,
    finish,
    max_degree_at_most,
)


def _replace_edges(g: Graph, k: int):
    n = g.vertex_count
    provenance = [Provenance(origin=Origin.SOURCE, vertex=v) for v in g.vertices()]
    edges = []
    nxt = n
    for u, v in g.edges:
        for j in range(1, k + 1):
            edges.extend([(u, nxt), (v, nxt)])
            provenance.append(Provenance(origin=Origin.CONNECTOR, edge=(u, v), index=j))
            nxt += 1
    return Graph.from_edges(nxt, edges), provenance


def coleman_cai(g: Graph, k: int) -> ReductionOutput:
    """n + k*m vertices: the source vertices first, then k connectors per sorted edge."""
    if k < 3:
        raise PreconditionError(f"edge replacement needs k >= 3, got {k}")
    graph, provenance = _replace_edges(g, k)
    return finish("cc", g, graph, provenance, [degenerate(2), bipartite()], k=k)


def construct_k23(g: Graph) -> ReductionOutput:
    """K_{2,3} edge replacement on inputs of maximum degree at most 8."""
    delta = max_degree(g)
    if delta > 8:
        raise PreconditionError(f"K_2,3 replacement needs max degree <= 8, got {delta}")
    graph, provenance = _replace_edges(g, 3)
    return finish("c4", g, graph, provenance,
                  [degenerate(2), bipartite(), max_degree_at_most(24)], k=3)


def lift_edge_biclique(output: ReductionOutput, f: Colouring) -> Colouring:
    """Source vertices keep f; each connector of uv takes the smallest colour outside {f(u), f(v)}."""
    f.check_covers(output.source)
    k = output.parameters["k"]
    if f.palette_size > k:
        raise PreconditionError(f"source colouring uses palette {f.palette_size} > k={k}")
    colours = []
    for p in output.provenance:
        if p.origin is Origin.SOURCE:
            colours.append(f[p.vertex])
        else:
            u, v = p.edge
            colours.append(min(c for c in range(k) if c not in (f[u], f[v])))
    return Colouring(k, tuple(colours))


def restrict_to_sources(output: ReductionOutput, f: Colouring) -> Colouring:
    f.check_covers(output.graph)
    sources = {p.vertex: w for w, p in enumerate(output.provenance) if p.origin is Origin.SOURCE}
    return Colouring(f.palette_size, tuple(f[sources[v]] for v in output.source.vertices()))
