"""Dispatch from a construction name to its colouring lift and projection."""
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import PreconditionError
from acyclic_lab.reductions.base import ReductionOutput
from acyclic_lab.reductions.chains import lift_chains, project_chains
from acyclic_lab.reductions.edge_bicliques import lift_edge_biclique, restrict_to_sources
from acyclic_lab.reductions.joins import lift_join
from acyclic_lab.reductions.regular import lift_regular, restrict_to_first_copy

LIFTS = {
    "cc": lift_edge_biclique,
    "c4": lift_edge_biclique,
    "c2": lift_chains,
    "c5": lift_chains,
    "c3": lift_regular,
    "c6": lift_join,
    "universal": lift_join,
}

PROJECTIONS = {
    "cc": restrict_to_sources,
    "c4": restrict_to_sources,
    "c2": project_chains,
    "c5": project_chains,
    "c3": restrict_to_first_copy,
    "c6": restrict_to_sources,
    "universal": restrict_to_sources,
}


def lift(output: ReductionOutput, f: Colouring) -> Colouring:
    """Colouring of the output built from a colouring of the source."""
    fn = LIFTS.get(output.construction)
    if fn is None:
        raise PreconditionError(f"no lift for construction {output.construction!r}")
    return fn(output, f)


def project(output: ReductionOutput, f: Colouring) -> Colouring:
    """Colouring of the source read off a colouring of the output."""
    fn = PROJECTIONS.get(output.construction)
    if fn is None:
        raise PreconditionError(f"no projection for construction {output.construction!r}")
    return fn(output, f)
