from acyclic_lab.reductions.base import Claim, ClaimKind, Origin, Provenance, ReductionOutput, verify_claims
from acyclic_lab.reductions.chains import (
    construct_bipartite_delta_k_plus_1,
    construct_swap_auto,
    lift_chains,
    project_chains,
)
from acyclic_lab.reductions.edge_bicliques import (
    coleman_cai,
    construct_k23,
    lift_edge_biclique,
    restrict_to_sources,
)
from acyclic_lab.reductions.joins import add_universal, construct_universal, join_kq, lift_join
from acyclic_lab.reductions.lifts import lift, project
from acyclic_lab.reductions.regular import construct_regular, lift_regular, restrict_to_first_copy

__all__ = [
    "Claim",
    "ClaimKind",
    "Origin",
    "Provenance",
    "ReductionOutput",
    "add_universal",
    "coleman_cai",
    "construct_bipartite_delta_k_plus_1",
    "construct_k23",
    "construct_regular",
    "construct_swap_auto",
    "construct_universal",
    "join_kq",
    "lift",
    "lift_chains",
    "lift_edge_biclique",
    "lift_join",
    "lift_regular",
    "project",
    "project_chains",
    "restrict_to_first_copy",
    "restrict_to_sources",
    "verify_claims",
]
