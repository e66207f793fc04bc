"""Exception types shared across acyclic_lab."""


class PreconditionError(ValueError):
    """An input violates a documented contract (the message names the bound)."""


class ColouringMismatch(ValueError):
    """A colouring does not fit its graph, or is improper where that is required."""


class ParseError(ValueError):
    """Malformed DIMACS or colouring text."""


class CapExceeded(RuntimeError):
    """An enumeration or automorphism search produced more results than allowed."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap of {cap}")
        self.what = what
        self.cap = cap


class ClaimViolation(RuntimeError):
    """A reduction output fails one of its claimed structural properties."""


class BudgetExhausted(RuntimeError):
    """A node or wall-clock budget ran out inside a procedure that has no unknown outcome."""
