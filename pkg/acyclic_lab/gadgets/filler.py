"""
Filler gadget: G_d minus its smallest edge xy, with a pendant terminal on x
and one on y. Every non-terminal vertex has degree d.
"""
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.gadgets.base import GadgetGraph
from acyclic_lab.gadgets.gd import g_d, gd_acyclic_number
from acyclic_lab.graph.core import Graph
from acyclic_lab.graph.tags import Role, VertexTag


def filler_gadget(d: int) -> GadgetGraph:
    if d < 2:
        raise PreconditionError(f"filler gadget needs d >= 2, got {d}")
    base = g_d(d)
    n = base.vertex_count
    x, y = base.graph.edges[0]
    edges = list(base.graph.edges[1:]) + [(x, n), (y, n + 1)]
    graph = Graph.from_edges(n + 2, edges)

    tags = []
    for v, tag in enumerate(base.tags):
        label = f"x={tag.label}" if v == x else f"y={tag.label}" if v == y else tag.label
        tags.append(VertexTag(label=label, role=Role.FILLER_INTERNAL))
    tags.append(VertexTag(label="tx", role=Role.TERMINAL))
    tags.append(VertexTag(label="ty", role=Role.TERMINAL))
    return GadgetGraph(graph, (n, n + 1), tuple(tags))


def filler_colouring(d: int, k: int, c1: int, c2: int, cv: int) -> Colouring:
    """
    k-acyclic colouring of filler_gadget(d) with x -> c1, y -> c2 and both
    terminals -> cv, by permuting the canonical G_d colouring.
    """
    if len({c1, c2, cv}) != 3:
        raise PreconditionError(f"colours c1={c1}, c2={c2}, cv={cv} must be pairwise distinct")
    if any(not 0 <= c < k for c in (c1, c2, cv)):
        raise PreconditionError(f"colours must lie below k={k}")
    need = gd_acyclic_number(d)
    if k < need:
        raise PreconditionError(f"filler for d={d} needs k >= ceil((d+3)/2) = {need}, got k={k}")

    base = g_d(d)
    canonical = base.canonical_colouring
    x, y = base.graph.edges[0]
    fx, fy = canonical[x], canonical[y]
    spare = iter(c for c in range(k) if c not in (c1, c2))
    sigma = {fx: c1, fy: c2}
    for c in range(canonical.palette_size):
        if c not in sigma:
            sigma[c] = next(spare)
    internal = tuple(sigma[c] for c in canonical.assignment)
    return Colouring(k, internal + (cv, cv))
