from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from acyclic_lab.errors import ColouringMismatch
from acyclic_lab.graph.core import Graph


@dataclass(frozen=True)
class Colouring:
    """Total map vertex -> colour in {0, ..., palette_size-1}."""
    palette_size: int
    assignment: Tuple[int, ...]

    def __post_init__(self):
        if self.palette_size < 0:
            raise ColouringMismatch("palette size must be non-negative")
        for v, c in enumerate(self.assignment):
            if not 0 <= c < self.palette_size:
                raise ColouringMismatch(
                    f"vertex {v} has colour {c} outside palette of size {self.palette_size}"
                )

    @classmethod
    def of(cls, palette_size: int, assignment: Sequence[int]) -> "Colouring":
        return cls(palette_size, tuple(int(c) for c in assignment))

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def check_covers(self, g: Graph) -> None:
        if len(self.assignment) != g.vertex_count:
            raise ColouringMismatch(
                f"colouring covers {len(self.assignment)} vertices, graph has {g.vertex_count}"
            )

    def colour_classes(self) -> Dict[int, List[int]]:
        classes: Dict[int, List[int]] = {}
        for v, c in enumerate(self.assignment):
            classes.setdefault(c, []).append(v)
        return classes

    def colours_used(self) -> int:
        return len(set(self.assignment))

    def relabelled(self, sigma: Sequence[int]) -> "Colouring":
        """Apply a colour permutation given as images sigma[c]."""
        return Colouring(self.palette_size, tuple(sigma[c] for c in self.assignment))

    def with_palette(self, palette_size: int) -> "Colouring":
        return Colouring(palette_size, self.assignment)


@dataclass(frozen=True)
class CycleWitness:
    """Closed vertex walk (first == last) whose vertices use exactly two colours."""
    vertices: Tuple[int, ...]
    colours: Tuple[int, int]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1
