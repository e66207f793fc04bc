from dataclasses import dataclass
from typing import Optional, Tuple

from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.verify import is_acyclic_colouring
from acyclic_lab.graph.core import Graph
from acyclic_lab.graph.tags import VertexTag


@dataclass(frozen=True)
class GadgetGraph:
    """A graph plus its terminals, one tag per vertex and an optional canonical colouring."""
    graph: Graph
    terminals: Tuple[int, ...]
    tags: Tuple[VertexTag, ...]
    canonical_colouring: Optional[Colouring] = None

    def __post_init__(self):
        n = self.graph.vertex_count
        if len(self.tags) != n:
            raise ValueError(f"{len(self.tags)} tags for {n} vertices")
        if len(set(self.terminals)) != len(self.terminals):
            raise ValueError("terminals must be pairwise distinct")
        if any(not 0 <= t < n for t in self.terminals):
            raise ValueError("terminal outside the vertex range")
        if self.canonical_colouring is not None and not is_acyclic_colouring(
            self.graph, self.canonical_colouring
        ):
            raise ValueError("canonical colouring is not acyclic")

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def label_index(self) -> dict:
        return {tag.label: v for v, tag in enumerate(self.tags)}

    def internal_vertices(self) -> Tuple[int, ...]:
        terminals = set(self.terminals)
        return tuple(v for v in self.graph.vertices() if v not in terminals)

    def sidecar(self) -> dict:
        return {
            "terminals": list(self.terminals),
            "tags": [tag.model_dump(mode="json") for tag in self.tags],
            "canonical_colouring": (
                None if self.canonical_colouring is None
                else {"k": self.canonical_colouring.palette_size,
                      "assignment": list(self.canonical_colouring.assignment)}
            ),
        }
