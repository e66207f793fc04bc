from acyclic_lab.symmetry.automorphisms import automorphism_generators, automorphisms, group_order
from acyclic_lab.symmetry.classes import (
    ClassCount,
    Kind,
    Relation,
    Uniqueness,
    another_colouring,
    canonical_under_swaps,
    count_classes,
    is_unique,
    related,
)
from acyclic_lab.symmetry.permutations import Automorphism, ColourPermutation, is_automorphism

__all__ = [
    "Automorphism",
    "ClassCount",
    "ColourPermutation",
    "Kind",
    "Relation",
    "Uniqueness",
    "another_colouring",
    "automorphism_generators",
    "automorphisms",
    "canonical_under_swaps",
    "count_classes",
    "group_order",
    "is_automorphism",
    "is_unique",
    "related",
]
