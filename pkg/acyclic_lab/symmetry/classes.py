"""
Colourings up to colour swaps (R_swap) and up to swaps plus automorphisms
(R_swap+auto): canonical forms, exact class counts and the Unique/Another
decision procedures.
"""
import logging
from enum import Enum
from typing import List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field

from acyclic_lab import config
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.verify import is_acyclic_colouring, is_proper
from acyclic_lab.errors import CapExceeded, ColouringMismatch
from acyclic_lab.graph.core import Graph
from acyclic_lab.solver.search import SolveBudget, enumerate_colourings
from acyclic_lab.symmetry.automorphisms import automorphism_generators
from acyclic_lab.symmetry.permutations import Automorphism
from acyclic_lab.utils.union_find import UnionFind

logger = logging.getLogger(__name__)


class Relation(str, Enum):
    SWAP = "swap"
    SWAP_AUTO = "swap_auto"


class Kind(str, Enum):
    PROPER = "proper"
    ACYCLIC = "acyclic"


class Uniqueness(str, Enum):
    UNIQUE = "unique"
    NOT_UNIQUE = "not_unique"
    NONE_EXIST = "none_exist"
    OVERFLOW = "overflow"


class ClassCount(BaseModel):
    """Exact number of colouring classes under one relation."""
    model_config = ConfigDict(extra='forbid', frozen=True)

    relation: Relation = Field(description="swap or swap_auto")
    kind: Kind = Field(description="proper or acyclic colourings")
    k: int = Field(description="Palette size")
    count: int = Field(description="Number of equivalence classes", ge=0)
    colourings: int = Field(description="Number of colourings enumerated before merging", ge=0)
    representatives: Optional[List[List[int]]] = Field(
        default=None,
        description="Lexicographically smallest canonical assignment of each class, sorted",
    )


def canonical_under_swaps(f: Colouring) -> Colouring:
    """Relabel colours by order of first appearance along the vertex order."""
    relabel = {}
    for c in f.assignment:
        if c not in relabel:
            relabel[c] = len(relabel)
    return Colouring(f.palette_size, tuple(relabel[c] for c in f.assignment))


def _is_kind(g: Graph, f: Colouring, kind: Kind) -> bool:
    return is_acyclic_colouring(g, f) if kind is Kind.ACYCLIC else is_proper(g, f)


def _generators(g: Graph, relation: Relation, node_cap: Optional[int]) -> List[Automorphism]:
    if relation is Relation.SWAP:
        return []
    gens, order = automorphism_generators(g, node_cap)
    logger.info("Merging orbits of %r with %d generators (group order %d)", g, len(gens), order)
    return gens


def _orbit_of(form: Tuple[int, ...], k: int, gens: List[Automorphism]) -> Set[Tuple[int, ...]]:
    orbit = {form}
    frontier = [form]
    while frontier:
        current = Colouring(k, frontier.pop())
        for psi in gens:
            image = canonical_under_swaps(psi.act(current)).assignment
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return orbit


def count_classes(g: Graph, k: int, relation: Relation = Relation.SWAP, kind: Kind = Kind.ACYCLIC,
                  cap: Optional[int] = None, node_cap: Optional[int] = None,
                  with_representatives: bool = False,
                  budget: Optional[SolveBudget] = None) -> ClassCount:
    """
    Enumerate every colouring of the given kind, reduce to canonical forms and,
    for swap_auto, union forms related by an automorphism generator.

    Raises CapExceeded when the enumeration or automorphism search overflows.
    """
    relation, kind = Relation(relation), Kind(kind)
    cap = config.ENUMERATION_CAP if cap is None else cap
    enumerated = enumerate_colourings(g, k, cap, acyclic=kind is Kind.ACYCLIC, budget=budget)
    if enumerated.overflow:
        raise CapExceeded(f"{kind.value} {k}-colourings", cap)

    forms = sorted({canonical_under_swaps(f).assignment for f in enumerated})
    uf = UnionFind(forms)
    for psi in _generators(g, relation, node_cap):
        for form in forms:
            image = canonical_under_swaps(psi.act(Colouring(k, form))).assignment
            if image not in uf.parent:
                raise RuntimeError(f"automorphism image of {form} is not a {kind.value} colouring")
            uf.union(form, image)

    representatives = None
    if with_representatives:
        representatives = sorted(list(min(members)) for members in uf.classes().values())
    return ClassCount(
        relation=relation,
        kind=kind,
        k=k,
        count=len(uf),
        colourings=len(enumerated),
        representatives=representatives,
    )


def another_colouring(g: Graph, f: Colouring, relation: Relation = Relation.SWAP,
                      kind: Kind = Kind.ACYCLIC, cap: Optional[int] = None,
                      node_cap: Optional[int] = None) -> Optional[Colouring]:
    """First colouring in lexicographic order of the same kind that is not related to f."""
    relation, kind = Relation(relation), Kind(kind)
    f.check_covers(g)
    if not _is_kind(g, f, kind):
        raise ColouringMismatch(f"the given colouring is not a {kind.value} colouring")
    cap = config.ENUMERATION_CAP if cap is None else cap
    k = f.palette_size
    orbit = _orbit_of(canonical_under_swaps(f).assignment, k, _generators(g, relation, node_cap))

    enumerated = enumerate_colourings(g, k, cap, acyclic=kind is Kind.ACYCLIC)
    for h in enumerated:
        if canonical_under_swaps(h).assignment not in orbit:
            return h
    if enumerated.overflow:
        raise CapExceeded(f"{kind.value} {k}-colourings", cap)
    return None


def is_unique(g: Graph, k: int, relation: Relation = Relation.SWAP, kind: Kind = Kind.ACYCLIC,
              cap: Optional[int] = None, node_cap: Optional[int] = None,
              budget: Optional[SolveBudget] = None) -> Uniqueness:
    try:
        counted = count_classes(g, k, relation, kind, cap, node_cap, budget=budget)
    except CapExceeded as e:
        logger.warning("Uniqueness check on %r overflowed: %s", g, e)
        return Uniqueness.OVERFLOW
    if counted.count == 0:
        return Uniqueness.NONE_EXIST
    return Uniqueness.UNIQUE if counted.count == 1 else Uniqueness.NOT_UNIQUE


def related(g: Graph, f1: Colouring, f2: Colouring, relation: Relation = Relation.SWAP,
            node_cap: Optional[int] = None) -> bool:
    """Whether f2 is sigma(f1) composed with some automorphism (or just sigma(f1) for swap)."""
    if f1.palette_size != f2.palette_size:
        return False
    target = canonical_under_swaps(f2).assignment
    orbit = _orbit_of(canonical_under_swaps(f1).assignment, f1.palette_size,
                      _generators(g, Relation(relation), node_cap))
    return target in orbit
