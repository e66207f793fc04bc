"""
Independent brute-force oracles for small graphs, used by the verification
suites and the tests. They share no code with the verifier or the solver.
"""
from itertools import combinations, product
from typing import Iterator, Tuple

import networkx as nx

from acyclic_lab.graph.core import Graph
from acyclic_lab.graph.nx_bridge import to_networkx


def all_assignments(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    return product(range(k), repeat=n)


def oracle_is_acyclic(g: Graph, assignment: Tuple[int, ...]) -> bool:
    """Proper, and no explicitly enumerated cycle uses only two colours."""
    if any(assignment[u] == assignment[v] for u, v in g.edges):
        return False
    for cycle in nx.simple_cycles(to_networkx(g)):
        if len(cycle) >= 3 and len({assignment[v] for v in cycle}) <= 2:
            return False
    return True


def oracle_count(g: Graph, k: int, acyclic: bool = True) -> int:
    if acyclic:
        return sum(1 for a in all_assignments(g.vertex_count, k) if oracle_is_acyclic(g, a))
    return sum(
        1 for a in all_assignments(g.vertex_count, k)
        if all(a[u] != a[v] for u, v in g.edges)
    )


def oracle_is_bipartite(g: Graph) -> bool:
    """No odd cycle among all simple cycles."""
    return all(len(c) % 2 == 0 for c in nx.simple_cycles(to_networkx(g)))


def oracle_is_k_degenerate(g: Graph, k: int) -> bool:
    """Every non-empty induced subgraph has a vertex of degree <= k."""
    nbrs = g.neighbour_sets
    for size in range(1, g.vertex_count + 1):
        for subset in combinations(g.vertices(), size):
            chosen = set(subset)
            if min(len(nbrs[v] & chosen) for v in subset) > k:
                return False
    return True
