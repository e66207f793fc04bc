"""
Small named graphs used as examples, solver test cases and exceptional cases.
"""
import networkx as nx

from acyclic_lab.errors import PreconditionError
from acyclic_lab.graph.core import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from acyclic_lab.graph.nx_bridge import from_networkx


def petersen() -> Graph:
    return from_networkx(nx.petersen_graph())


def cube() -> Graph:
    """Q_3; vertices are the bit strings 000..111 in sorted order."""
    return from_networkx(nx.hypercube_graph(3))


def circular_ladder(n: int = 3) -> Graph:
    """Inner cycle 0..n-1, outer cycle n..2n-1, rungs i -- i+n."""
    return from_networkx(nx.circular_ladder_graph(n))


def zigzag_example() -> Graph:
    """
    Six-vertex graph whose colouring (0,1,2,0,1,2) is proper but not acyclic:
    the cycle 0-2-3-5 alternates colours 0 and 2.
    """
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
        (0, 2), (2, 4), (1, 3), (3, 5), (0, 5),
    ]
    return Graph.from_edges(6, edges)


def dual_p4_join_k2() -> Graph:
    """Cubic planar 3-connected graph on 8 vertices: two triangles bridged by a 6-cycle."""
    edges = [
        (0, 1), (0, 2), (1, 2),
        (1, 3), (2, 4), (3, 4),
        (0, 5), (3, 6), (4, 7),
        (5, 6), (6, 7), (5, 7),
    ]
    return Graph.from_edges(8, edges)


EXCEPTIONS = {
    "k4": lambda: complete_graph(4),
    "q3": cube,
    "dual-p4-join-k2": dual_p4_join_k2,
}


def exception_graph(name: str) -> Graph:
    """Cubic planar 3-connected graphs that are not 3-acyclic colourable."""
    try:
        return EXCEPTIONS[name]()
    except KeyError:
        raise PreconditionError(
            f"unknown exceptional graph {name!r}; choose from {sorted(EXCEPTIONS)}"
        ) from None


def named_graph(name: str) -> Graph:
    """Parse names like 'k4', 'c5', 'p3', 'k2,3', 'petersen', 'cl3', 'zigzag'."""
    key = name.lower().replace("_", "").replace(" ", "")
    if key in EXCEPTIONS:
        return EXCEPTIONS[key]()
    if key == "petersen":
        return petersen()
    if key == "zigzag":
        return zigzag_example()
    try:
        if key.startswith("cl"):
            return circular_ladder(int(key[2:]))
        if key.startswith("k") and "," in key:
            a, b = key[1:].split(",")
            return complete_bipartite(int(a), int(b))
        if key.startswith("k"):
            return complete_graph(int(key[1:]))
        if key.startswith("c"):
            return cycle_graph(int(key[1:]))
        if key.startswith("p"):
            return path_graph(int(key[1:]))
    except ValueError:
        pass
    raise PreconditionError(f"unknown graph name {name!r}")
