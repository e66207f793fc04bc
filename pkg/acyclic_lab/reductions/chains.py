"""
Vertex replacement by chain gadgets.

Each source vertex v becomes a chain gadget whose terminals are split into
blocks of k, one block per neighbour in ascending order. For every source edge
uv and j in 1..k a connector joins the j-th terminal of u's block for v to the
j-th terminal of v's block for u. Chains are laid out in vertex order, then the
connectors in sorted edge order.
"""
from typing import Dict, List, Sequence

from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.gadgets.chain import chain_gadget, chain_levels
from acyclic_lab.graph.core import Graph, max_degree
from acyclic_lab.reductions.base import (
    Origin,
    Provenance,
    ReductionOutput,
    bipartite,
    finish,
    max_degree_at_most,
)


def _chain_replace(g: Graph, k: int, terminal_counts: Sequence[int]):
    edges = []
    provenance: List[Provenance] = []
    terminals: Dict[int, List[int]] = {}
    offset = 0
    for v in g.vertices():
        t = terminal_counts[v]
        if t == 0:
            continue
        gadget = chain_gadget(k, t)
        edges.extend((offset + a, offset + b) for a, b in gadget.graph.edges)
        terminals[v] = [offset + x for x in gadget.terminals]
        for level, members in enumerate(chain_levels(k, t), start=1):
            for pos, _ in enumerate(members, start=1):
                is_terminal = level % 2 == 0 and pos == k
                provenance.append(Provenance(
                    origin=Origin.CHAIN, vertex=v, index=level, position=pos, terminal=is_terminal,
                ))
                offset += 1

    rank = {v: {w: i for i, w in enumerate(g.adjacency[v])} for v in g.vertices()}
    for u, v in g.edges:
        for j in range(k):
            a = terminals[u][rank[u][v] * k + j]
            b = terminals[v][rank[v][u] * k + j]
            edges.extend([(offset, a), (offset, b)])
            provenance.append(Provenance(origin=Origin.CONNECTOR, edge=(u, v), index=j + 1))
            offset += 1
    return Graph.from_edges(offset, edges), provenance


def construct_bipartite_delta_k_plus_1(g: Graph, k: int) -> ReductionOutput:
    """
    Chain of k*deg(v) terminals per vertex (none for isolated vertices) and k
    connectors per edge. Output has (2k^2 - k)*2m + k*m vertices.
    """
    if k < 3:
        raise PreconditionError(f"chain replacement needs k >= 3, got {k}")
    delta = max_degree(g)
    if delta > 2 * (k - 1):
        raise PreconditionError(f"input max degree {delta} exceeds 2(k-1) = {2 * (k - 1)}")
    counts = [k * d for d in g.degrees]
    graph, provenance = _chain_replace(g, k, counts)
    return finish("c2", g, graph, provenance, [bipartite(), max_degree_at_most(k + 1)], k=k)


def swap_auto_labels(g: Graph) -> List[int]:
    """lambda(v_i) = i after sorting vertices by (degree, index); 1-based."""
    order = sorted(g.vertices(), key=lambda v: (g.degrees[v], v))
    labels = [0] * g.vertex_count
    for i, v in enumerate(order, start=1):
        labels[v] = i
    return labels


def construct_swap_auto(g: Graph) -> ReductionOutput:
    """
    k = 3 chains with 3*deg(v) + lambda(v) terminals, so no two chains have the
    same length; the last lambda(v) terminals of each chain stay unwired.
    """
    delta = max_degree(g)
    if delta > 8:
        raise PreconditionError(f"swap+auto construction needs max degree <= 8, got {delta}")
    labels = swap_auto_labels(g)
    counts = [3 * d + lam for d, lam in zip(g.degrees, labels)]
    graph, provenance = _chain_replace(g, 3, counts)
    return finish("c5", g, graph, provenance, [bipartite(), max_degree_at_most(4)], k=3)


def chain_terminal_counts(output: ReductionOutput) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for p in output.provenance:
        if p.origin is Origin.CHAIN and p.terminal:
            counts[p.vertex] = counts.get(p.vertex, 0) + 1
    return counts


def lift_chains(output: ReductionOutput, f: Colouring) -> Colouring:
    """
    Each chain gets the canonical chain colouring with colour 0 swapped for f(v);
    each connector of uv gets the smallest colour outside {f(u), f(v)}.
    """
    f.check_covers(output.source)
    k = output.parameters["k"]
    if f.palette_size > k:
        raise PreconditionError(f"source colouring uses palette {f.palette_size} > k={k}")
    colours = []
    for p in output.provenance:
        if p.origin is Origin.CHAIN:
            scheme = 0 if p.index % 2 == 0 else p.position
            fv = f[p.vertex]
            colours.append(fv if scheme == 0 else 0 if scheme == fv else scheme)
        else:
            u, v = p.edge
            colours.append(min(c for c in range(k) if c not in (f[u], f[v])))
    return Colouring(k, tuple(colours))


def project_chains(output: ReductionOutput, f: Colouring) -> Colouring:
    """Colour of each chain's first terminal; isolated source vertices (no chain) get 0."""
    f.check_covers(output.graph)
    first: Dict[int, int] = {}
    for w, p in enumerate(output.provenance):
        if p.origin is Origin.CHAIN and p.terminal and p.vertex not in first:
            first[p.vertex] = f[w]
    return Colouring(f.palette_size, tuple(first.get(v, 0) for v in output.source.vertices()))
