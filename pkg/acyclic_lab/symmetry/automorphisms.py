"""
Automorphism search by colour refinement plus backtracking.

Vertices are first split into cells by iterated (cell, sorted neighbour-cell)
signatures starting from degrees; an automorphism maps every vertex inside its
cell. The backtracking then assigns images in BFS order, so each vertex after a
component root already has a mapped neighbour that constrains it.
"""
import logging
from collections import deque
from typing import Dict, Iterator, List, Optional, Tuple

from acyclic_lab import config
from acyclic_lab.errors import CapExceeded
from acyclic_lab.graph.core import Graph
from acyclic_lab.symmetry.permutations import Automorphism, adjacency_matrix, is_automorphism

logger = logging.getLogger(__name__)


def refine_cells(g: Graph) -> Tuple[int, ...]:
    """Stable cell index per vertex; cells are numbered in sorted-signature order."""
    cells = list(g.degrees)
    count = len(set(cells))
    while True:
        signatures = [
            (cells[v], tuple(sorted(cells[w] for w in g.adjacency[v]))) for v in g.vertices()
        ]
        index = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [index[sig] for sig in signatures]
        if len(index) == count:
            return tuple(refined)
        cells, count = refined, len(index)


def bfs_order(g: Graph) -> List[int]:
    order, seen = [], [False] * g.vertex_count
    for root in g.vertices():
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


class _Backtrack:
    def __init__(self, g: Graph, node_cap: int):
        self.g = g
        self.cells = refine_cells(g)
        self.order = bfs_order(g)
        self.members: Dict[int, List[int]] = {}
        for v in g.vertices():
            self.members.setdefault(self.cells[v], []).append(v)
        self.node_cap = node_cap
        self.nodes = 0
        self.matrix = adjacency_matrix(g)

    def _consistent(self, v: int, image: int, mapping: Dict[int, int], used: set) -> bool:
        nbrs_of_image = self.g.neighbour_sets[image]
        mapped = 0
        for u in self.g.adjacency[v]:
            if u in mapping:
                if mapping[u] not in nbrs_of_image:
                    return False
                mapped += 1
        return mapped == sum(1 for x in self.g.adjacency[image] if x in used)

    def extend(self, depth: int, mapping: Dict[int, int], used: set) -> Iterator[Dict[int, int]]:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise CapExceeded("automorphism search nodes", self.node_cap)
        if depth == len(self.order):
            yield mapping
            return
        v = self.order[depth]
        if v in mapping:
            yield from self.extend(depth + 1, mapping, used)
            return
        for image in self.members[self.cells[v]]:
            if image in used or not self._consistent(v, image, mapping, used):
                continue
            mapping[v] = image
            used.add(image)
            yield from self.extend(depth + 1, mapping, used)
            del mapping[v]
            used.discard(image)

    def seeded(self, fixed: Dict[int, int]) -> Iterator[Automorphism]:
        """Automorphisms extending `fixed`; the seed must be listed in BFS-order prefix form."""
        mapping: Dict[int, int] = {}
        used: set = set()
        for v, image in fixed.items():
            if self.cells[v] != self.cells[image] or image in used:
                return
            if not self._consistent(v, image, mapping, used):
                return
            mapping[v] = image
            used.add(image)
        for full in self.extend(0, mapping, used):
            psi = Automorphism(tuple(full[v] for v in self.g.vertices()))
            if not is_automorphism(self.g, psi, self.matrix):
                raise RuntimeError(f"automorphism search produced a non-automorphism {psi.images}")
            yield psi


def automorphisms(g: Graph, cap: Optional[int] = None, node_cap: Optional[int] = None) -> List[Automorphism]:
    """Complete automorphism list, identity first. Raises CapExceeded past `cap` results or `node_cap` nodes."""
    cap = config.AUTOMORPHISM_CAP if cap is None else cap
    search = _Backtrack(g, config.AUTOMORPHISM_NODE_CAP if node_cap is None else node_cap)
    found: List[Automorphism] = []
    for psi in search.seeded({}):
        if len(found) >= cap:
            raise CapExceeded("automorphisms", cap)
        found.append(psi)
    found.sort(key=lambda psi: (not psi.is_identity(), psi.images))
    logger.debug("%r has %d automorphisms (%d search nodes)", g, len(found), search.nodes)
    return found


def automorphism_generators(g: Graph, node_cap: Optional[int] = None) -> Tuple[List[Automorphism], int]:
    """
    Strong generating set along the BFS base, and the group order.

    Level L contributes one automorphism per image of the L-th base point under
    the pointwise stabiliser of the earlier base points; the group order is the
    product of those orbit sizes.
    """
    search = _Backtrack(g, config.AUTOMORPHISM_NODE_CAP if node_cap is None else node_cap)
    generators: List[Automorphism] = []
    order_size = 1
    for level, base in enumerate(search.order):
        prefix = {v: v for v in search.order[:level]}
        level_gens: List[Automorphism] = []
        orbit = {base}
        for image in search.members[search.cells[base]]:
            if image in orbit:
                continue
            psi = next(search.seeded({**prefix, base: image}), None)
            if psi is None:
                continue
            level_gens.append(psi)
            orbit = vertex_orbit(base, level_gens)
        generators.extend(level_gens)
        order_size *= len(orbit)
    logger.debug("%r: %d generators, group order %d", g, len(generators), order_size)
    return generators, order_size


def vertex_orbit(point: int, gens: List[Automorphism]) -> set:
    orbit = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for psi in gens:
            y = psi(x)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def group_order(g: Graph, node_cap: Optional[int] = None) -> int:
    return automorphism_generators(g, node_cap)[1]
