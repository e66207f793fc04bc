"""
Exact backtracking engines for k-acyclic colourability, plain k-colourability
and exhaustive colouring enumeration.

Before searching, vertices are grouped into classes that every colouring must
paint alike: two classes merge when they share k-1 neighbours that pairwise
cannot share a colour. The decision search branches on the vertex with the
fewest open colours per class member (ties by lowest index) and only ever
introduces the smallest unused colour, which is sound because unused colours
are interchangeable. A colour c is open at v when no neighbour has c and, for
every colour c' seen at least twice around v, no two of those c'-neighbours
already share a component of G[V_c ∪ V_c']. Dead ends report the coloured
vertices responsible, and the search jumps straight back to the latest of them.
"""
from __future__ import annotations

import logging
import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from itertools import chain, combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from acyclic_lab import config
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.verify import is_acyclic_colouring, is_proper
from acyclic_lab.errors import BudgetExhausted
from acyclic_lab.graph.core import Graph, regular_degree
from acyclic_lab.utils.union_find import UnionFind

logger = logging.getLogger(__name__)

# larger common neighbourhoods are not searched for a separated subset
SEPARATED_POOL_LIMIT = 16


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolveBudget:
    node_limit: Optional[int] = None
    wall_limit: Optional[float] = None  # seconds

    @classmethod
    def default(cls) -> "SolveBudget":
        return cls(config.SOLVE_NODE_LIMIT, config.SOLVE_SECONDS)

    @classmethod
    def unlimited(cls) -> "SolveBudget":
        return cls(None, None)

    def start(self, stop: Optional[threading.Event] = None) -> "Meter":
        return Meter(self, stop)


class Meter:
    """Running node/time account for one top-level call; shared by its sub-searches."""

    def __init__(self, budget: SolveBudget, stop: Optional[threading.Event] = None):
        self.budget = budget
        self.stop = stop
        self.nodes = 0
        self.deadline = (
            time.monotonic() + budget.wall_limit if budget.wall_limit is not None else None
        )

    def tick(self) -> None:
        self.nodes += 1
        limit = self.budget.node_limit
        if limit is not None and self.nodes > limit:
            raise BudgetExhausted(f"node limit {limit} reached")
        # clock reads are cheap enough, but not free
        if self.nodes % 64:
            return
        if self.stop is not None and self.stop.is_set():
            raise BudgetExhausted("stopped: another branch already succeeded")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhausted(f"wall limit {self.budget.wall_limit}s reached")


@dataclass(frozen=True)
class SolveResult:
    verdict: Verdict
    colouring: Optional[Colouring] = None
    nodes: int = 0
    reason: str = ""

    @property
    def is_yes(self) -> bool:
        return self.verdict is Verdict.YES


@dataclass(frozen=True)
class NumberResult:
    value: Optional[int]
    colouring: Optional[Colouring] = None
    nodes: int = 0

    @property
    def verdict(self) -> Verdict:
        return Verdict.YES if self.value is not None else Verdict.UNKNOWN


@dataclass(frozen=True)
class EnumerationResult:
    colourings: Tuple[Colouring, ...]
    overflow: bool = False

    def __len__(self) -> int:
        return len(self.colourings)

    def __iter__(self):
        return iter(self.colourings)


def density_excludes(g: Graph, k: int) -> bool:
    """True when k <= 1 + m/n, compared exactly as k*n <= n + m (graphs with edges only)."""
    n, m = g.vertex_count, g.edge_count
    return m > 0 and k * n <= n + m


def regular_excludes(g: Graph, k: int) -> bool:
    d = regular_degree(g)
    return d is not None and d >= 1 and k < (d + 4) // 2


def must_differ_pairs(g: Graph, k: int) -> List[Tuple[int, int]]:
    """Non-adjacent pairs with at least k common neighbours; every k-acyclic colouring separates them."""
    if k < 1:
        return []
    pairs = []
    nbrs = g.neighbour_sets
    for u, v in combinations(g.vertices(), 2):
        if v in nbrs[u] or g.degrees[u] < k or g.degrees[v] < k:
            continue
        if len(nbrs[u] & nbrs[v]) >= k:
            pairs.append((u, v))
    return pairs


def _has_separated_set(pool: Sequence[int], size: int, apart: List[Set[int]]) -> bool:
    """Whether `pool` holds `size` vertices that are pairwise in each other's `apart` sets."""
    if size <= 0:
        return True
    for i, v in enumerate(pool):
        rest = [w for w in pool[i + 1:] if w in apart[v]]
        if len(rest) >= size - 1 and _has_separated_set(rest, size - 1, apart):
            return True
    return False


def must_share_classes(g: Graph, k: int, differ: Iterable[Tuple[int, int]] = ()) -> List[int]:
    """
    Smallest member of each vertex's forced-equal class.

    Two classes merge when the vertices adjacent to both contain k-1 that are
    pairwise adjacent or listed in `differ`: those take k-1 distinct colours,
    and both classes avoid all of them, leaving one colour for the two. Merging
    repeats until nothing changes; common sets past SEPARATED_POOL_LIMIT are
    passed over, which only loses merges.
    """
    n = g.vertex_count
    if k < 2:
        return list(range(n))
    apart = [set(nbrs) for nbrs in g.neighbour_sets]
    for u, v in differ:
        apart[u].add(v)
        apart[v].add(u)
    uf = UnionFind(range(n))
    merged = True
    while merged:
        merged = False
        touching: Dict[Tuple[int, int], Set[int]] = {}
        for w in g.vertices():
            roots = sorted({uf.find(x) for x in g.adjacency[w]})
            for pair in combinations(roots, 2):
                touching.setdefault(pair, set()).add(w)
        for (a, b), common in touching.items():
            if not k - 1 <= len(common) <= SEPARATED_POOL_LIMIT or uf.find(a) == uf.find(b):
                continue
            if _has_separated_set(sorted(common), k - 1, apart):
                merged |= uf.union(a, b)
    smallest = {root: min(members) for root, members in uf.classes().items()}
    return [smallest[uf.find(v)] for v in g.vertices()]


class _Search:
    """Mutable search state over one graph and palette."""

    def __init__(self, g: Graph, k: int, acyclic: bool, meter: Meter, break_symmetry: bool):
        self.g = g
        self.k = k
        self.acyclic = acyclic
        self.meter = meter
        self.break_symmetry = break_symmetry
        n = g.vertex_count
        self.colour = [-1] * n
        self.used = [0] * k
        self.nbr_colour = [[0] * k for _ in range(n)]
        self.touched = [0] * n
        self.differ: List[List[int]] = [[] for _ in range(n)]
        pairs = must_differ_pairs(g, k) if acyclic else []
        for u, v in pairs:
            self.differ[u].append(v)
            self.differ[v].append(u)

        self.same = must_share_classes(g, k, pairs)
        members: Dict[int, List[int]] = {}
        for v in g.vertices():
            members.setdefault(self.same[v], []).append(v)
        self.mates = [[w for w in members[self.same[v]] if w != v] for v in g.vertices()]
        self.class_size = [len(members.get(v, ())) for v in g.vertices()]
        self.class_colour = [-1] * n
        self.class_count = [0] * n
        # first-coloured member; assignments are undone in LIFO order, so it leaves last
        self.class_anchor = [-1] * n
        merged = sum(1 for size in self.class_size if size > 1)
        if merged:
            logger.debug("%r with k=%d: %d forced-equal classes", g, k, merged)

    # -- state updates -------------------------------------------------------

    def assign(self, v: int, c: int) -> None:
        self.colour[v] = c
        self.used[c] += 1
        for w in self.g.adjacency[v]:
            self.nbr_colour[w][c] += 1
            self.touched[w] += 1
        for w in self.differ[v]:
            self.nbr_colour[w][c] += 1
            self.touched[w] += 1
        r = self.same[v]
        if not self.class_count[r]:
            self.class_colour[r] = c
            self.class_anchor[r] = v
        self.class_count[r] += 1
        for w in self.mates[v]:
            self.touched[w] += 1

    def unassign(self, v: int) -> None:
        c = self.colour[v]
        self.colour[v] = -1
        self.used[c] -= 1
        for w in self.g.adjacency[v]:
            self.nbr_colour[w][c] -= 1
            self.touched[w] -= 1
        for w in self.differ[v]:
            self.nbr_colour[w][c] -= 1
            self.touched[w] -= 1
        r = self.same[v]
        self.class_count[r] -= 1
        if not self.class_count[r]:
            self.class_colour[r] = -1
            self.class_anchor[r] = -1
        for w in self.mates[v]:
            self.touched[w] -= 1

    # -- feasibility ---------------------------------------------------------

    def _cycle_path(self, v: int, c: int, c2: int) -> Optional[List[int]]:
        """A c/c2 path joining two c2-neighbours of v, if one exists."""
        colour = self.colour
        adjacency = self.g.adjacency
        targets = {w for w in adjacency[v] if colour[w] == c2}
        if len(targets) < 2:
            return None
        parent: Dict[int, Optional[int]] = {}
        for start in sorted(targets):
            if start in parent:
                continue
            parent[start] = None
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adjacency[x]:
                    if y in parent or (colour[y] != c and colour[y] != c2):
                        continue
                    parent[y] = x
                    if y in targets:
                        path = [y]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        return path
                    queue.append(y)
        return None

    def reason(self, v: int, c: int) -> Optional[Set[int]]:
        """None when c is open at v, otherwise coloured vertices that together rule it out."""
        r = self.same[v]
        held = self.class_colour[r]
        if held != -1 and held != c:
            return {self.class_anchor[r]}
        counts = self.nbr_colour[v]
        if counts[c]:
            # counts include must-differ partners
            for w in chain(self.g.adjacency[v], self.differ[v]):
                if self.colour[w] == c:
                    return {w}
        if self.acyclic:
            for c2 in range(self.k):
                if c2 == c or counts[c2] < 2:
                    continue
                path = self._cycle_path(v, c, c2)
                if path is not None:
                    return set(path)
        return None

    def feasible(self, v: int, c: int) -> bool:
        return self.reason(v, c) is None

    def candidates(self) -> range:
        if not self.break_symmetry:
            return range(self.k)
        top = max((c for c in range(self.k) if self.used[c]), default=-1)
        return range(min(self.k, top + 2))

    def domain(self, v: int) -> List[int]:
        return [c for c in self.candidates() if self.feasible(v, c)]

    def select(self) -> Optional[int]:
        """
        The uncoloured vertex with the fewest open colours per class member.

        Openness here ignores cycles. A vertex down to one colour or none is
        taken at once. Remaining ties prefer vertices next to coloured ones,
        then the lowest index.
        """
        candidates = self.candidates()
        best, best_key = None, None
        for v in self.g.vertices():
            if self.colour[v] != -1:
                continue
            counts = self.nbr_colour[v]
            r = self.same[v]
            held = self.class_colour[r]
            if held != -1:
                size = 0 if counts[held] else 1
            else:
                size = sum(1 for c in candidates if not counts[c])
            if size <= 1:
                return v
            key = (size / self.class_size[r], 0 if self.touched[v] else 1)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    # -- drivers -------------------------------------------------------------

    def solve(self) -> bool:
        return self._backjump() is None

    def _backjump(self) -> Optional[Set[int]]:
        """None once every vertex is coloured; otherwise coloured vertices whose colours admit no completion."""
        self.meter.tick()
        v = self.select()
        if v is None:
            return None
        conflict: Set[int] = set()
        dom = []
        # colours past the candidates are interchangeable with the first unused
        # one, so its reason covers them
        for c in self.candidates():
            why = self.reason(v, c)
            if why is None:
                dom.append(c)
            else:
                conflict |= why
        for c in dom:
            self.assign(v, c)
            below = self._backjump()
            if below is None:
                return None
            self.unassign(v)
            if v not in below:
                return below
            below.discard(v)
            conflict |= below
        return conflict

    def enumerate(self, order: Sequence[int], depth: int, out: list, cap: int) -> bool:
        """Lexicographic enumeration along `order`; returns False once cap is exceeded."""
        self.meter.tick()
        if depth == len(order):
            if len(out) >= cap:
                return False
            out.append(Colouring(self.k, tuple(self.colour)))
            return True
        v = order[depth]
        for c in range(self.k):
            if not self.feasible(v, c):
                continue
            self.assign(v, c)
            if self._neighbours_alive(v):
                if not self.enumerate(order, depth + 1, out, cap):
                    self.unassign(v)
                    return False
            self.unassign(v)
        return True

    def _neighbours_alive(self, v: int) -> bool:
        for w in self.g.adjacency[v]:
            if self.colour[w] == -1 and not any(self.feasible(w, c) for c in range(self.k)):
                return False
        return True

    def witness(self) -> Colouring:
        return Colouring(self.k, tuple(self.colour))


def _trivial(g: Graph, k: int, acyclic: bool) -> Optional[SolveResult]:
    n = g.vertex_count
    if n == 0:
        return SolveResult(Verdict.YES, Colouring(max(k, 0), ()), reason="empty graph")
    if k <= 0:
        return SolveResult(Verdict.NO, reason="no colours for a non-empty vertex set")
    if acyclic and density_excludes(g, k):
        return SolveResult(Verdict.NO, reason="density bound k <= 1 + m/n")
    if acyclic and regular_excludes(g, k):
        return SolveResult(Verdict.NO, reason="regular bound k < ceil((d+3)/2)")
    if k >= n:
        return SolveResult(Verdict.YES, Colouring(k, tuple(range(n))), reason="one colour per vertex")
    if g.edge_count == 0:
        return SolveResult(Verdict.YES, Colouring(k, (0,) * n), reason="edgeless graph")
    return None


def _check_witness(g: Graph, f: Colouring, acyclic: bool) -> Colouring:
    ok = is_acyclic_colouring(g, f) if acyclic else is_proper(g, f)
    if not ok:
        raise RuntimeError("solver produced a witness that fails verification")
    return f


def _branch_tasks(g: Graph, k: int, acyclic: bool) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Forced prefix up to the first real branching vertex, and that vertex's choices."""
    search = _Search(g, k, acyclic, SolveBudget.unlimited().start(), break_symmetry=True)
    prefix = []
    while True:
        v = search.select()
        dom = [] if v is None else search.domain(v)
        if v is None or len(dom) != 1:
            break
        search.assign(v, dom[0])
        prefix.append((v, dom[0]))
    if v is None or not dom:
        return prefix, []
    return prefix, [(v, c) for c in dom]


def _run_task(g, k, acyclic, budget, prefix, choice, stop) -> Tuple[Verdict, Optional[Colouring], int]:
    meter = budget.start(stop)
    search = _Search(g, k, acyclic, meter, break_symmetry=True)
    for v, c in prefix:
        search.assign(v, c)
    search.assign(*choice)
    try:
        found = search.solve()
    except BudgetExhausted:
        return Verdict.UNKNOWN, None, meter.nodes
    return (Verdict.YES, search.witness(), meter.nodes) if found else (Verdict.NO, None, meter.nodes)


def _decide(g: Graph, k: int, budget: SolveBudget, acyclic: bool, workers: int,
            meter: Optional[Meter] = None) -> SolveResult:
    trivial = _trivial(g, k, acyclic)
    if trivial is not None:
        if trivial.colouring is not None:
            _check_witness(g, trivial.colouring, acyclic)
        return trivial

    if workers > 1:
        return _decide_parallel(g, k, budget, acyclic, workers)

    meter = meter or budget.start()
    search = _Search(g, k, acyclic, meter, break_symmetry=True)
    try:
        found = search.solve()
    except BudgetExhausted as e:
        logger.info("Solve k=%d on %r stopped: %s", k, g, e)
        return SolveResult(Verdict.UNKNOWN, nodes=meter.nodes, reason=str(e))
    if not found:
        return SolveResult(Verdict.NO, nodes=meter.nodes, reason="search exhausted")
    witness = _check_witness(g, search.witness(), acyclic)
    return SolveResult(Verdict.YES, witness, nodes=meter.nodes, reason="search")


def _decide_parallel(g, k, budget, acyclic, workers) -> SolveResult:
    prefix, tasks = _branch_tasks(g, k, acyclic)
    if not tasks:
        # everything forced: the serial search settles it immediately
        return _decide(g, k, budget, acyclic, workers=1)

    logger.info("Splitting k=%d solve of %r into %d tasks", k, g, len(tasks))
    verdicts = []
    nodes = 0
    stop = threading.Event()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_run_task, g, k, acyclic, budget, prefix, t, stop) for t in tasks]
        for future in as_completed(futures):
            verdict, witness, used = future.result()
            nodes += used
            if verdict is Verdict.YES:
                # running siblings see the flag within 64 nodes
                stop.set()
                for other in futures:
                    other.cancel()
                return SolveResult(Verdict.YES, _check_witness(g, witness, acyclic), nodes, "parallel search")
            verdicts.append(verdict)
    if all(v is Verdict.NO for v in verdicts):
        return SolveResult(Verdict.NO, nodes=nodes, reason="parallel search exhausted")
    return SolveResult(Verdict.UNKNOWN, nodes=nodes, reason="budget exhausted in a parallel task")


def is_k_acyclic_colourable(g: Graph, k: int, budget: Optional[SolveBudget] = None,
                            workers: int = 1) -> SolveResult:
    return _decide(g, k, budget or SolveBudget.default(), acyclic=True, workers=workers)


def is_k_colourable(g: Graph, k: int, budget: Optional[SolveBudget] = None,
                    workers: int = 1) -> SolveResult:
    return _decide(g, k, budget or SolveBudget.default(), acyclic=False, workers=workers)


def _minimum(g: Graph, start: int, budget: SolveBudget, acyclic: bool) -> NumberResult:
    meter = budget.start()
    for k in range(start, g.vertex_count + 1):
        result = _decide(g, k, budget, acyclic, workers=1, meter=meter)
        if result.verdict is Verdict.YES:
            return NumberResult(k, result.colouring, meter.nodes)
        if result.verdict is Verdict.UNKNOWN:
            return NumberResult(None, nodes=meter.nodes)
    raise RuntimeError("no palette up to n colours succeeded")  # unreachable: k = n always works


def acyclic_chromatic_number(g: Graph, budget: Optional[SolveBudget] = None) -> NumberResult:
    """Smallest k with a k-acyclic colouring, searching upward from the density bound."""
    n, m = g.vertex_count, g.edge_count
    if n == 0:
        return NumberResult(0, Colouring(0, ()))
    start = 1 if m == 0 else m // n + 2
    return _minimum(g, start, budget or SolveBudget.default(), acyclic=True)


def chromatic_number(g: Graph, budget: Optional[SolveBudget] = None) -> NumberResult:
    if g.vertex_count == 0:
        return NumberResult(0, Colouring(0, ()))
    start = 1 if g.edge_count == 0 else 2
    return _minimum(g, start, budget or SolveBudget.default(), acyclic=False)


def enumerate_colourings(g: Graph, k: int, cap: Optional[int] = None, acyclic: bool = True,
                         budget: Optional[SolveBudget] = None) -> EnumerationResult:
    """
    Every k-colouring of the requested kind exactly once, in lexicographic order
    of the assignment tuple. Raises BudgetExhausted if a budget is given and runs out.
    """
    cap = config.ENUMERATION_CAP if cap is None else cap
    if g.vertex_count == 0:
        return EnumerationResult((Colouring(max(k, 0), ()),))
    if k <= 0 or (acyclic and (density_excludes(g, k) or regular_excludes(g, k))):
        return EnumerationResult(())
    search = _Search(g, k, acyclic, (budget or SolveBudget.unlimited()).start(), break_symmetry=False)
    out: List[Colouring] = []
    complete = search.enumerate(list(g.vertices()), 0, out, cap)
    if not complete:
        logger.warning("Enumeration of %r with k=%d overflowed cap %d", g, k, cap)
    return EnumerationResult(tuple(out), overflow=not complete)


def enumerate_acyclic_colourings(g: Graph, k: int, cap: Optional[int] = None,
                                 budget: Optional[SolveBudget] = None) -> EnumerationResult:
    return enumerate_colourings(g, k, cap, acyclic=True, budget=budget)
