"""
Immutable simple undirected graphs on dense vertex indices 0..n-1.

Every constructor and composition operator returns a fresh Graph whose edge
tuple is sorted and normalised (u < v), so two graphs built the same way are
equal and hash the same.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

from acyclic_lab.errors import PreconditionError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        previous = None
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) is not normalised for n={self.vertex_count}")
            if previous is not None and (u, v) <= previous:
                raise ValueError("edges must be sorted and free of duplicates")
            previous = (u, v)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Normalise, dedupe and sort an edge iterable. Duplicate edges collapse."""
        normalised = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            normalised.add((u, v) if u < v else (v, u))
        return cls(vertex_count, tuple(sorted(normalised)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbour tuple per vertex."""
        nbrs = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(row)) for row in nbrs)

    @cached_property
    def neighbour_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbour_sets[u]

    def vertices(self) -> range:
        return range(self.vertex_count)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


# --- structural predicates -------------------------------------------------

def max_degree(g: Graph) -> int:
    return max(g.degrees, default=0)


def is_d_regular(g: Graph, d: int) -> bool:
    return all(deg == d for deg in g.degrees)


def regular_degree(g: Graph) -> Optional[int]:
    """The common degree if g is regular and non-empty, else None."""
    if g.vertex_count == 0:
        return None
    d = g.degrees[0]
    return d if is_d_regular(g, d) else None


def is_bipartite(g: Graph) -> Optional[Tuple[frozenset, frozenset]]:
    """BFS 2-colouring; returns the two sides or None if an odd cycle exists."""
    side = [-1] * g.vertex_count
    for root in g.vertices():
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    left = frozenset(v for v in g.vertices() if side[v] == 0)
    right = frozenset(v for v in g.vertices() if side[v] == 1)
    return left, right


def is_k_degenerate(g: Graph, k: int) -> Optional[Tuple[int, ...]]:
    """
    Ordering in which every vertex has at most k earlier neighbours, or None.

    Peels vertices of remaining degree <= k (lowest index first); the reversed
    peel order is the witness.
    """
    remaining = list(g.degrees)
    removed = [False] * g.vertex_count
    peeled = []
    for _ in range(g.vertex_count):
        candidate = next(
            (v for v in g.vertices() if not removed[v] and remaining[v] <= k), None
        )
        if candidate is None:
            return None
        removed[candidate] = True
        peeled.append(candidate)
        for w in g.adjacency[candidate]:
            if not removed[w]:
                remaining[w] -= 1
    return tuple(reversed(peeled))


def has_universal_vertex(g: Graph) -> Optional[int]:
    n = g.vertex_count
    return next((v for v in g.vertices() if g.degrees[v] == n - 1), None)


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.vertex_count


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, relabelled to 0..|S|-1 in ascending original order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(keep), edges)


# --- composition -----------------------------------------------------------

def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.vertex_count
    edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    return Graph.from_edges(a.vertex_count + b.vertex_count, edges)


def join(a: Graph, b: Graph) -> Graph:
    union = disjoint_union(a, b)
    shift = a.vertex_count
    cross = [(u, v + shift) for u in a.vertices() for v in b.vertices()]
    return Graph.from_edges(union.vertex_count, list(union.edges) + cross)


def identify_vertices(g: Graph, groups: Iterable[Iterable[int]]) -> Graph:
    """
    Collapse each group to a single vertex; parallel edges merge.

    The group's smallest member represents it, and surviving vertices are
    renumbered compactly in ascending order of their original index.
    """
    representative = list(g.vertices())
    claimed = set()
    for group in groups:
        members = sorted(set(group))
        if not members:
            continue
        for v in members:
            if not 0 <= v < g.vertex_count:
                raise PreconditionError(f"vertex {v} is not in the graph")
            if v in claimed:
                raise PreconditionError(f"vertex {v} appears in two groups")
            claimed.add(v)
        member_set = set(members)
        for v in members:
            if g.neighbour_sets[v] & member_set:
                raise PreconditionError(
                    f"identifying group {members} would create a self-loop at {v}"
                )
        for v in members:
            representative[v] = members[0]

    survivors = sorted(set(representative))
    index = {v: i for i, v in enumerate(survivors)}
    edges = [(index[representative[u]], index[representative[v]]) for u, v in g.edges]
    return Graph.from_edges(len(survivors), edges)


# --- elementary families ---------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: side A is 0..a-1, side B is a..a+b-1."""
    if a < 1 or b < 1:
        raise PreconditionError("both sides of a complete bipartite graph must be positive")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))
