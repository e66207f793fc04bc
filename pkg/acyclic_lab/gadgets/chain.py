"""
Chain gadget: 2t levels where levels 2i-1 and 2i form K_{k-1,k}, and the j-th
non-terminal vertex of level 2i is matched to the j-th vertex of level 2i+1.
The last vertex of every even level is a terminal.

Up to colour swaps and automorphisms its k-acyclic colouring is unique: all
terminals share one colour c1, and any two terminals are joined by a path
coloured only with c1 and c2, for every other colour c2.
"""
from collections import deque
from typing import List, Tuple

from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.gadgets.base import GadgetGraph
from acyclic_lab.graph.core import Graph
from acyclic_lab.graph.tags import Role, VertexTag


def chain_levels(k: int, t: int) -> List[Tuple[int, ...]]:
    """Vertex indices per level, levels 1..2t in order."""
    levels, nxt = [], 0
    for level in range(1, 2 * t + 1):
        size = k - 1 if level % 2 else k
        levels.append(tuple(range(nxt, nxt + size)))
        nxt += size
    return levels


def chain_gadget(k: int, t: int) -> GadgetGraph:
    if k < 3:
        raise PreconditionError(f"chain gadget needs k >= 3, got {k}")
    if t < 1:
        raise PreconditionError(f"chain gadget needs t >= 1 terminals, got {t}")
    levels = chain_levels(k, t)
    edges = []
    for i in range(t):
        odd, even = levels[2 * i], levels[2 * i + 1]
        edges.extend((u, v) for u in odd for v in even)
        if i + 1 < t:
            edges.extend(zip(even[:-1], levels[2 * i + 2]))

    tags, colours, terminals = [], [], []
    for level, members in enumerate(levels, start=1):
        for pos, v in enumerate(members, start=1):
            if level % 2 == 0 and pos == k:
                terminals.append(v)
                tags.append(VertexTag(label=f"v'{level // 2}", role=Role.TERMINAL, index=level))
            else:
                tags.append(VertexTag(label=f"L{level}.{pos}", role=Role.CHAIN_LEVEL, index=level))
            colours.append(pos if level % 2 else 0)

    graph = Graph.from_edges(t * (2 * k - 1), edges)
    return GadgetGraph(graph, tuple(terminals), tuple(tags), Colouring(k, tuple(colours)))


def chain_colouring(k: int, t: int, terminal_colour: int) -> Colouring:
    """Canonical chain colouring with colour 0 swapped for terminal_colour."""
    if not 0 <= terminal_colour < k:
        raise PreconditionError(f"terminal colour {terminal_colour} outside palette {k}")
    sigma = list(range(k))
    sigma[0], sigma[terminal_colour] = terminal_colour, 0
    return chain_gadget(k, t).canonical_colouring.relabelled(sigma)


def _bicoloured_reach(g: Graph, f: Colouring, start: int, allowed: Tuple[int, int]) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen and f[w] in allowed:
                seen.add(w)
                queue.append(w)
    return seen


def terminal_colours_agree(gadget: GadgetGraph, f: Colouring) -> bool:
    """
    Monochromatic terminals, and for every other colour c2 all terminals lie in
    one component of the subgraph coloured {c1, c2}.
    """
    terminals = gadget.terminals
    c1 = f[terminals[0]]
    if any(f[x] != c1 for x in terminals):
        return False
    for c2 in range(f.palette_size):
        if c2 == c1:
            continue
        reach = _bicoloured_reach(gadget.graph, f, terminals[0], (c1, c2))
        if not all(x in reach for x in terminals):
            return False
    return True
