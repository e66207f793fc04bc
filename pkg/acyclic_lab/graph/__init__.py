from acyclic_lab.graph.core import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    has_universal_vertex,
    identify_vertices,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_d_regular,
    is_k_degenerate,
    join,
    max_degree,
    path_graph,
    regular_degree,
)
from acyclic_lab.graph.tags import Role, VertexTag

__all__ = [
    "Graph",
    "Role",
    "VertexTag",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "has_universal_vertex",
    "identify_vertices",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_d_regular",
    "is_k_degenerate",
    "join",
    "max_degree",
    "path_graph",
    "regular_degree",
]
