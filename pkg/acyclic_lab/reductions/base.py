"""
Shared output type of every construction: the graph, where each output vertex
came from, and the structural properties the construction promises.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from acyclic_lab.errors import ClaimViolation
from acyclic_lab.graph.core import Graph, is_bipartite, is_d_regular, is_k_degenerate, max_degree
from acyclic_lab.graph.dimacs import graph_hash
from acyclic_lab.graph.tags import Role, VertexTag

logger = logging.getLogger(__name__)


class Origin(str, Enum):
    SOURCE = "source-vertex"
    COPY = "copy"
    CHAIN = "chain"
    CONNECTOR = "connector"
    FILLER = "filler-internal"
    HUB = "hub"


class Provenance(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)

    origin: Origin = Field(description="What part of the construction produced the vertex")
    vertex: Optional[int] = Field(default=None, description="Source vertex the output vertex belongs to")
    edge: Optional[Tuple[int, int]] = Field(default=None, description="Source edge of a connector")
    index: Optional[int] = Field(
        default=None,
        description="Copy number, connector j (1-based), chain level, filler instance or hub j",
    )
    position: Optional[int] = Field(
        default=None, description="Position inside a chain level, or vertex index inside a filler's G_d"
    )
    terminal: bool = Field(default=False, description="Chain terminal")

    def tag(self) -> VertexTag:
        if self.origin is Origin.CHAIN:
            role = Role.TERMINAL if self.terminal else Role.CHAIN_LEVEL
            return VertexTag(label=f"chain({self.vertex}).L{self.index}.{self.position}", role=role, index=self.index)
        if self.origin is Origin.CONNECTOR:
            u, v = self.edge
            return VertexTag(label=f"e({u},{v})_{self.index}", role=Role.CONNECTOR, index=self.index)
        if self.origin is Origin.COPY:
            return VertexTag(label=f"{self.vertex}^({self.index})", role=Role.COPY, index=self.index)
        if self.origin is Origin.FILLER:
            return VertexTag(label=f"filler({self.vertex}#{self.index}).{self.position}", role=Role.FILLER_INTERNAL)
        if self.origin is Origin.HUB:
            return VertexTag(label=f"u_{self.index}", role=Role.PLAIN, index=self.index)
        return VertexTag(label=str(self.vertex), role=Role.PLAIN)


class ClaimKind(str, Enum):
    BIPARTITE = "bipartite"
    MAX_DEGREE = "max_degree"
    REGULAR = "regular"
    DEGENERATE = "degenerate"


class Claim(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)

    kind: ClaimKind
    bound: Optional[int] = Field(default=None, description="B for max_degree <= B, d for d-regular, k for k-degenerate")

    def holds(self, g: Graph) -> bool:
        if self.kind is ClaimKind.BIPARTITE:
            return is_bipartite(g) is not None
        if self.kind is ClaimKind.MAX_DEGREE:
            return max_degree(g) <= self.bound
        if self.kind is ClaimKind.REGULAR:
            return is_d_regular(g, self.bound)
        return is_k_degenerate(g, self.bound) is not None

    def __str__(self) -> str:
        if self.kind is ClaimKind.MAX_DEGREE:
            return f"max_degree <= {self.bound}"
        if self.kind is ClaimKind.REGULAR:
            return f"{self.bound}-regular"
        if self.kind is ClaimKind.DEGENERATE:
            return f"{self.bound}-degenerate"
        return self.kind.value


def bipartite() -> Claim:
    return Claim(kind=ClaimKind.BIPARTITE)


def max_degree_at_most(bound: int) -> Claim:
    return Claim(kind=ClaimKind.MAX_DEGREE, bound=bound)


def regular(d: int) -> Claim:
    return Claim(kind=ClaimKind.REGULAR, bound=d)


def degenerate(k: int) -> Claim:
    return Claim(kind=ClaimKind.DEGENERATE, bound=k)


@dataclass(frozen=True)
class ReductionOutput:
    construction: str
    source: Graph
    graph: Graph
    provenance: Tuple[Provenance, ...]
    claims: Tuple[Claim, ...]
    parameters: Dict[str, int] = field(default_factory=dict)

    def vertices_of(self, origin: Origin) -> List[int]:
        return [w for w, p in enumerate(self.provenance) if p.origin is origin]

    def tags(self) -> Tuple[VertexTag, ...]:
        return tuple(p.tag() for p in self.provenance)

    def sidecar(self) -> dict:
        return {
            "construction": self.construction,
            "parameters": dict(self.parameters),
            "source_hash": graph_hash(self.source),
            "claimed_properties": [str(c) for c in self.claims],
            "provenance": [p.model_dump(mode="json", exclude_defaults=True) for p in self.provenance],
            "tags": [t.model_dump(mode="json") for t in self.tags()],
        }


def verify_claims(output: ReductionOutput) -> List[Claim]:
    """Claims that fail on the output graph (empty when everything holds)."""
    return [c for c in output.claims if not c.holds(output.graph)]


def finish(construction: str, source: Graph, graph: Graph, provenance, claims,
           **parameters) -> ReductionOutput:
    if len(provenance) != graph.vertex_count:
        raise RuntimeError(f"{construction}: {len(provenance)} provenance entries for {graph.vertex_count} vertices")
    output = ReductionOutput(construction, source, graph, tuple(provenance), tuple(claims), parameters)
    failed = verify_claims(output)
    if failed:
        raise ClaimViolation(
            f"{construction} output violates {', '.join(str(c) for c in failed)}"
        )
    logger.info("%s: %r -> %r, claims %s hold", construction, source, graph,
                [str(c) for c in claims])
    return output
