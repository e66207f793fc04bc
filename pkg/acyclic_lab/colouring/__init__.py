from acyclic_lab.colouring.model import Colouring, CycleWitness
from acyclic_lab.colouring.verify import (
    find_bicoloured_cycle,
    is_acyclic_colouring,
    is_proper,
)

__all__ = [
    "Colouring",
    "CycleWitness",
    "find_bicoloured_cycle",
    "is_acyclic_colouring",
    "is_proper",
]
