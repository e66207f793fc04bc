"""Conversion to and from networkx, and access to its graph atlas."""
from typing import Iterator

import networkx as nx

from acyclic_lab.graph.core import Graph


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices())
    out.add_edges_from(g.edges)
    return out


def from_networkx(h: nx.Graph) -> Graph:
    """Relabel nodes by sorted order so the result does not depend on insertion order."""
    order = sorted(h.nodes())
    index = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(len(order), ((index[u], index[v]) for u, v in h.edges()))


def graph_atlas(max_vertices: int, connected_only: bool = False) -> Iterator[Graph]:
    """All graphs on at most `max_vertices` (<= 7) vertices, up to isomorphism."""
    if max_vertices > 7:
        raise ValueError("the networkx atlas only covers graphs on up to 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n > max_vertices:
            break
        if connected_only and (n == 0 or not nx.is_connected(h)):
            continue
        yield from_networkx(h)
