"""
DIMACS-col edge lists: `p edge <n> <m>` then `e <u+1> <v+1>` lines.

Comment lines start with `c`. The writer emits edges in sorted order so the
text of a graph is canonical (it is what graph hashes are taken over).
"""
import hashlib
import os
from typing import Iterable

from acyclic_lab.errors import ParseError
from acyclic_lab.graph.core import Graph


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_dimacs(lines: Iterable[str]) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1].lower() not in ("edge", "col"):
                raise ParseError(f"line {lineno}: unknown problem line {line!r}")
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            n, m = _int(tokens[2], lineno), _int(tokens[3], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise ParseError(f"line {lineno}: malformed edge {line!r}")
            edges.append((_int(tokens[1], lineno) - 1, _int(tokens[2], lineno) - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line format {line!r}")

    if n is None:
        raise ParseError("missing problem line")
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as e:
        raise ParseError(str(e)) from e
    if g.edge_count != m:
        raise ParseError(f"header declares {m} edges, found {g.edge_count} distinct edges")
    return g


def format_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p edge {g.vertex_count} {g.edge_count}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_dimacs(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        return parse_dimacs(f)


def write_dimacs(g: Graph, path: str, comments: Iterable[str] = ()) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_dimacs(g, comments))


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(format_dimacs(g).encode("utf-8")).hexdigest()
