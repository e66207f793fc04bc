"""
The G_d family: d-regular vertex-transitive graphs with acyclic chromatic
number exactly ceil((d+3)/2).

Vertices are ordered pairs (i, j), i != j, over {0, ..., p+1}, indexed in
lexicographic order. In G_{2p+1}, (i, j) ~ (k, l) iff j == k or i == l; G_{2p}
drops the perfect matching (i, j) -- (j, i). The colouring (i, j) -> i is
acyclic in both.
"""
from itertools import combinations
from typing import List, Tuple

from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.gadgets.base import GadgetGraph
from acyclic_lab.graph.core import Graph
from acyclic_lab.graph.tags import Role, VertexTag

Pair = Tuple[int, int]


def pair_labels(p: int) -> List[Pair]:
    size = p + 2
    return [(i, j) for i in range(size) for j in range(size) if i != j]


def pair_label(pair: Pair) -> str:
    return f"({pair[0]},{pair[1]})"


def _pairs_adjacent(a: Pair, b: Pair) -> bool:
    return a[1] == b[0] or a[0] == b[1]


def _build(p: int, drop_matching: bool) -> GadgetGraph:
    labels = pair_labels(p)
    edges = []
    for (u, a), (v, b) in combinations(enumerate(labels), 2):
        if not _pairs_adjacent(a, b):
            continue
        if drop_matching and a == (b[1], b[0]):
            continue
        edges.append((u, v))
    graph = Graph.from_edges(len(labels), edges)
    tags = tuple(VertexTag(label=pair_label(pair), role=Role.PLAIN) for pair in labels)
    colouring = Colouring(p + 2, tuple(i for i, _ in labels))
    return GadgetGraph(graph, (), tags, colouring)


def g_odd(p: int) -> GadgetGraph:
    """G_{2p+1}: (p+2)(p+1) vertices, (2p+1)-regular."""
    if p < 0:
        raise PreconditionError(f"p must be non-negative, got {p}")
    return _build(p, drop_matching=False)


def g_even(p: int) -> GadgetGraph:
    """G_{2p} = G_{2p+1} minus the (i,j)--(j,i) matching."""
    if p < 1:
        raise PreconditionError(f"G_2p needs p >= 1, got {p}")
    return _build(p, drop_matching=True)


def g_d(d: int) -> GadgetGraph:
    if d < 1:
        raise PreconditionError(f"G_d needs d >= 1, got {d}")
    return g_odd((d - 1) // 2) if d % 2 else g_even(d // 2)


def gd_acyclic_number(d: int) -> int:
    """ceil((d+3)/2), the palette of the canonical G_d colouring."""
    return (d + 4) // 2
