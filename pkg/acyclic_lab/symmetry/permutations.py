from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import ColouringMismatch, PreconditionError
from acyclic_lab.graph.core import Graph


def _check_bijection(images: Sequence[int], what: str) -> None:
    if sorted(images) != list(range(len(images))):
        raise PreconditionError(f"{what} images {tuple(images)} are not a bijection")


@dataclass(frozen=True)
class ColourPermutation:
    """sigma on {0, ..., k-1}, stored as images[c] = sigma(c)."""
    images: Tuple[int, ...]

    def __post_init__(self):
        _check_bijection(self.images, "colour permutation")

    @classmethod
    def identity(cls, k: int) -> "ColourPermutation":
        return cls(tuple(range(k)))

    @property
    def k(self) -> int:
        return len(self.images)

    def apply(self, f: Colouring) -> Colouring:
        if f.palette_size != self.k:
            raise ColouringMismatch(f"permutation on {self.k} colours applied to palette {f.palette_size}")
        return f.relabelled(self.images)

    def compose(self, other: "ColourPermutation") -> "ColourPermutation":
        """self after other."""
        return ColourPermutation(tuple(self.images[c] for c in other.images))

    def inverse(self) -> "ColourPermutation":
        inv = [0] * self.k
        for c, image in enumerate(self.images):
            inv[image] = c
        return ColourPermutation(tuple(inv))


@dataclass(frozen=True)
class Automorphism:
    """psi on vertex indices, images[v] = psi(v). Not checked against a graph on construction."""
    images: Tuple[int, ...]

    def __post_init__(self):
        _check_bijection(self.images, "vertex permutation")

    @classmethod
    def identity(cls, n: int) -> "Automorphism":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        return Automorphism(tuple(self.images[v] for v in other.images))

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.images)
        for v, image in enumerate(self.images):
            inv[image] = v
        return Automorphism(tuple(inv))

    def act(self, f: Colouring) -> Colouring:
        """The colouring h with h(psi(v)) = f(v)."""
        if len(f) != len(self.images):
            raise ColouringMismatch(f"colouring of {len(f)} vertices moved by a permutation of {len(self.images)}")
        out = [0] * len(self.images)
        for v, image in enumerate(self.images):
            out[image] = f[v]
        return Colouring(f.palette_size, tuple(out))


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int8)
    if g.edges:
        idx = np.array(g.edges, dtype=np.intp)
        a[idx[:, 0], idx[:, 1]] = 1
        a[idx[:, 1], idx[:, 0]] = 1
    return a


def is_automorphism(g: Graph, psi: Automorphism, a: Optional[np.ndarray] = None) -> bool:
    """uv is an edge iff psi(u)psi(v) is: A[psi][:, psi] == A. Pass `a` to reuse one adjacency matrix."""
    if len(psi) != g.vertex_count:
        return False
    a = adjacency_matrix(g) if a is None else a
    p = np.array(psi.images, dtype=np.intp)
    return bool(np.array_equal(a[np.ix_(p, p)], a))
