from acyclic_lab.solver.bounds import (
    BoundReport,
    Regime,
    bound_report,
    max_average_degree,
    npc_degree_bound,
    regular_regime,
    trivial_yes_threshold,
)
from acyclic_lab.solver.search import (
    EnumerationResult,
    NumberResult,
    SolveBudget,
    SolveResult,
    Verdict,
    acyclic_chromatic_number,
    chromatic_number,
    enumerate_acyclic_colourings,
    enumerate_colourings,
    is_k_acyclic_colourable,
    is_k_colourable,
)

__all__ = [
    "BoundReport",
    "EnumerationResult",
    "NumberResult",
    "Regime",
    "SolveBudget",
    "SolveResult",
    "Verdict",
    "acyclic_chromatic_number",
    "bound_report",
    "chromatic_number",
    "enumerate_acyclic_colourings",
    "enumerate_colourings",
    "is_k_acyclic_colourable",
    "is_k_colourable",
    "max_average_degree",
    "npc_degree_bound",
    "regular_regime",
    "trivial_yes_threshold",
]
