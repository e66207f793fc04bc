"""
Colouring text format: `k <palette>` followed by `<vertex> <colour>` pairs,
whitespace separated, vertices 0-based.
"""
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.errors import ParseError


def parse_colouring(text: str) -> Colouring:
    tokens = text.split()
    if len(tokens) < 2 or tokens[0] != "k":
        raise ParseError("colouring text must start with 'k <palette>'")
    try:
        palette = int(tokens[1])
        values = [int(t) for t in tokens[2:]]
    except ValueError as e:
        raise ParseError(f"non-integer token in colouring: {e}") from e
    if len(values) % 2:
        raise ParseError("colouring body must consist of '<vertex> <colour>' pairs")

    pairs = dict()
    for v, c in zip(values[0::2], values[1::2]):
        if v in pairs:
            raise ParseError(f"vertex {v} coloured twice")
        pairs[v] = c
    n = len(pairs)
    if set(pairs) != set(range(n)):
        raise ParseError("colouring must assign every vertex 0..n-1 exactly once")
    try:
        return Colouring(palette, tuple(pairs[v] for v in range(n)))
    except ValueError as e:
        raise ParseError(str(e)) from e


def format_colouring(f: Colouring) -> str:
    lines = [f"k {f.palette_size}"]
    lines.extend(f"{v} {c}" for v, c in enumerate(f.assignment))
    return "\n".join(lines) + "\n"
