"""
Lower bounds on the acyclic chromatic number and the degree-regime arithmetic.

Everything is exact: rationals are fractions.Fraction and the fractional-power
threshold is compared after raising both sides to the fourth power.
"""
import logging
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from acyclic_lab import config
from acyclic_lab.errors import PreconditionError
from acyclic_lab.graph.core import Graph, regular_degree

logger = logging.getLogger(__name__)


class Regime(str, Enum):
    ALWAYS_NO = "always_no"
    OPEN = "open"
    CANDIDATE_NPC = "candidate_npc"


class BoundReport(BaseModel):
    """Lower bounds on chi_a for one graph."""
    model_config = ConfigDict(extra='forbid', frozen=True, arbitrary_types_allowed=True)

    density_bound: Fraction = Field(description="1 + m/n; chi_a is strictly larger (graphs with edges)")
    regular_bound: Optional[int] = Field(
        default=None, description="ceil((d+3)/2) for d-regular graphs with d >= 1; chi_a is at least this"
    )
    mad_bound: Optional[Fraction] = Field(
        default=None, description="1 + mad/2; chi_a is strictly larger. Only computed on request"
    )

    @field_serializer("density_bound", "mad_bound")
    def _fraction_text(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)

    def implied_minimum(self) -> int:
        """Smallest palette size not excluded by any reported bound."""
        best = self.density_bound.numerator // self.density_bound.denominator + 1
        if self.mad_bound is not None:
            best = max(best, self.mad_bound.numerator // self.mad_bound.denominator + 1)
        if self.regular_bound is not None:
            best = max(best, self.regular_bound)
        return best


def _connected_subsets(g: Graph) -> Iterator[int]:
    """Every connected vertex subset exactly once, as a bitmask (extension by larger-than-root vertices)."""
    masks = [sum(1 << w for w in row) for row in g.adjacency]

    def extend(subset: int, frontier: int, closed: int, root: int) -> Iterator[int]:
        yield subset
        while frontier:
            w = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            fresh = masks[w] & ~closed & ~((1 << (root + 1)) - 1)
            yield from extend(subset | (1 << w), frontier | fresh, closed | fresh, root)

    for root in g.vertices():
        start = masks[root] & ~((1 << (root + 1)) - 1)
        yield from extend(1 << root, start, start | (1 << root), root)


def max_average_degree(g: Graph, max_vertices: Optional[int] = None) -> Fraction:
    """max over subgraphs H of 2|E(H)|/|V(H)|; a densest subgraph can be taken connected."""
    limit = config.MAD_MAX_VERTICES if max_vertices is None else max_vertices
    if g.vertex_count > limit:
        raise PreconditionError(
            f"max average degree is brute force and limited to n <= {limit}, got n={g.vertex_count}"
        )
    masks = [sum(1 << w for w in row) for row in g.adjacency]
    best = Fraction(0)
    for subset in _connected_subsets(g):
        size = bin(subset).count("1")
        if size < 2:
            continue
        twice_edges = sum(bin(masks[v] & subset).count("1") for v in g.vertices() if subset >> v & 1)
        best = max(best, Fraction(twice_edges, size))
    return best


def bound_report(g: Graph, enable_mad: bool = False) -> BoundReport:
    n, m = g.vertex_count, g.edge_count
    density = Fraction(1) + (Fraction(m, n) if n else Fraction(0))
    d = regular_degree(g)
    regular = (d + 4) // 2 if d is not None and d >= 1 else None
    mad = None
    if enable_mad:
        mad = Fraction(1) + max_average_degree(g) / 2
    return BoundReport(density_bound=density, regular_bound=regular, mad_bound=mad)


def trivial_yes_threshold(k: int, d: int) -> bool:
    """d <= 0.38 * k^(3/4), i.e. d^4 * 100^4 <= 38^4 * k^3 over the integers."""
    if k < 3:
        raise PreconditionError(f"threshold is stated for k >= 3, got k={k}")
    return d ** 4 * 100 ** 4 <= 38 ** 4 * k ** 3


def ceil_sqrt(k: int) -> int:
    r = isqrt(k)
    return r if r * r == k else r + 1


def npc_degree_bound(k: int) -> int:
    """Maximum degree k(k - 1 + ceil(sqrt k)) at which k-acyclic colourability is NP-complete."""
    if k < 3:
        raise PreconditionError(f"degree bound is stated for k >= 3, got k={k}")
    return k * (k - 1 + ceil_sqrt(k))


def regular_regime(k: int, d: int, regular: bool = True) -> Regime:
    """
    Complexity regime of k-acyclic colourability on d-regular graphs
    (or, with regular=False, on graphs of maximum degree d).
    """
    if k < 3:
        raise PreconditionError(f"regimes are stated for k >= 3, got k={k}")
    if not regular:
        return Regime.CANDIDATE_NPC if d >= k + 1 else Regime.OPEN
    if d >= 2 * k - 2:
        return Regime.ALWAYS_NO
    if k + 1 <= d <= 2 * k - 3:
        return Regime.CANDIDATE_NPC
    return Regime.OPEN
