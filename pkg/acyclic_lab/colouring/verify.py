"""
Proper-colouring and acyclic-colouring verifiers.

Acyclicity is checked pair by pair over the C(k,2) colour-class pairs: the
subgraph induced by two classes must be a forest.
"""
from itertools import combinations
from typing import Optional, Tuple

from acyclic_lab.colouring.model import Colouring, CycleWitness
from acyclic_lab.errors import ColouringMismatch
from acyclic_lab.graph.core import Graph


def is_proper(g: Graph, f: Colouring) -> bool:
    f.check_covers(g)
    return all(f[u] != f[v] for u, v in g.edges)


def _normalise_cycle(cycle) -> Tuple[int, ...]:
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated) + (rotated[0],)


def _cycle_in_classes(g: Graph, f: Colouring, a: int, b: int) -> Optional[Tuple[int, ...]]:
    """DFS over G[V_a ∪ V_b] in vertex order; first cycle found, normalised."""
    allowed = [c == a or c == b for c in f.assignment]
    parent = [-1] * g.vertex_count
    state = [0] * g.vertex_count  # 0 new, 1 on stack, 2 done
    for root in g.vertices():
        if not allowed[root] or state[root]:
            continue
        state[root] = 1
        stack = [(root, iter(g.adjacency[root]))]
        while stack:
            u, nbrs = stack[-1]
            advanced = False
            for w in nbrs:
                if not allowed[w] or w == parent[u]:
                    continue
                if state[w] == 1:
                    cycle = [u]
                    x = u
                    while x != w:
                        x = parent[x]
                        cycle.append(x)
                    return _normalise_cycle(cycle[::-1])
                if state[w] == 0:
                    state[w] = 1
                    parent[w] = u
                    stack.append((w, iter(g.adjacency[w])))
                    advanced = True
                    break
            if not advanced:
                state[u] = 2
                stack.pop()
    return None


def find_bicoloured_cycle(g: Graph, f: Colouring) -> Optional[CycleWitness]:
    if not is_proper(g, f):
        raise ColouringMismatch("bicoloured cycles are undefined for an improper colouring")
    present = sorted(set(f.assignment))
    for a, b in combinations(present, 2):
        cycle = _cycle_in_classes(g, f, a, b)
        if cycle is not None:
            return CycleWitness(cycle, (a, b))
    return None


def is_acyclic_colouring(g: Graph, f: Colouring) -> bool:
    return is_proper(g, f) and find_bicoloured_cycle(g, f) is None
