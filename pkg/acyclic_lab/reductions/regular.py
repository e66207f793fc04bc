"""
Regularisation: two copies of the source, and for each vertex v, d - deg(v)
filler gadgets whose terminals are identified with v^(1) and v^(2). The output
is d-regular and k-acyclic colourable exactly when the source is.
"""
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.gadgets.filler import filler_colouring, filler_gadget
from acyclic_lab.graph.core import Graph, disjoint_union, identify_vertices, max_degree
from acyclic_lab.reductions.base import Origin, Provenance, ReductionOutput, finish, regular


def construct_regular(g: Graph, k: int, d: int) -> ReductionOutput:
    if k < 3:
        raise PreconditionError(f"regularisation needs k >= 3, got {k}")
    delta = max_degree(g)
    if not delta <= d <= 2 * k - 3:
        raise PreconditionError(
            f"regularisation needs max degree {delta} <= d={d} <= 2k-3 = {2 * k - 3}"
        )
    n = g.vertex_count
    needs_fillers = any(deg < d for deg in g.degrees)
    if needs_fillers and d < 2:
        raise PreconditionError(f"filler gadgets need d >= 2, got d={d}")

    graph = disjoint_union(g, g)
    provenance = [Provenance(origin=Origin.COPY, vertex=v, index=1) for v in g.vertices()]
    provenance += [Provenance(origin=Origin.COPY, vertex=v, index=2) for v in g.vertices()]
    groups = {v: [v] for v in range(2 * n)}
    if needs_fillers:
        filler = filler_gadget(d)
        tx, ty = filler.terminals
        internal = filler.vertex_count - 2
        for v in g.vertices():
            for instance in range(1, d - g.degrees[v] + 1):
                offset = graph.vertex_count
                graph = disjoint_union(graph, filler.graph)
                groups[v].append(offset + tx)
                groups[v + n].append(offset + ty)
                provenance += [
                    Provenance(origin=Origin.FILLER, vertex=v, index=instance, position=p)
                    for p in range(internal)
                ]
    graph = identify_vertices(graph, groups.values())
    return finish("c3", g, graph, provenance, [regular(d)], k=k, d=d)


def lift_regular(output: ReductionOutput, f: Colouring) -> Colouring:
    """
    f on both copies; every filler of v coloured by filler_colouring with
    c1, c2 the two smallest colours other than f(v).
    """
    f.check_covers(output.source)
    k, d = output.parameters["k"], output.parameters["d"]
    if f.palette_size > k:
        raise PreconditionError(f"source colouring uses palette {f.palette_size} > k={k}")
    schemes = {}
    colours = []
    for p in output.provenance:
        fv = f[p.vertex]
        if p.origin is Origin.COPY:
            colours.append(fv)
            continue
        if fv not in schemes:
            c1, c2 = [c for c in range(k) if c != fv][:2]
            schemes[fv] = filler_colouring(d, k, c1, c2, fv)
        colours.append(schemes[fv][p.position])
    return Colouring(k, tuple(colours))


def restrict_to_first_copy(output: ReductionOutput, f: Colouring) -> Colouring:
    f.check_covers(output.graph)
    return Colouring(f.palette_size, f.assignment[:output.source.vertex_count])
