"""
File outputs: DIMACS edge list + `.meta.json` sidecar per graph, a
`.manifest.json` per command, and colouring text files.
"""
import json
import logging
import os
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from acyclic_lab import __version__
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.text import format_colouring, parse_colouring
from acyclic_lab.errors import ParseError
from acyclic_lab.graph.core import Graph
from acyclic_lab.graph.dimacs import graph_hash, read_dimacs, write_dimacs
from acyclic_lab.graph.families import named_graph

logger = logging.getLogger(__name__)

NAMED_PREFIX = "named:"


class Manifest(BaseModel):
    """What was run, on which inputs, and what came out."""
    model_config = ConfigDict(extra='forbid')

    command: str = Field(description="Subcommand and its main argument, e.g. 'reduce c2'")
    inputs: Dict[str, str] = Field(default_factory=dict, description="Input name -> SHA-256 of its DIMACS text")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="k, d, q, t, caps, budgets, seed")
    outcome: Dict[str, Any] = Field(default_factory=dict, description="Deterministic outcome summary")
    version: str = Field(default=__version__, description="acyclic-lab version that wrote the manifest")


def save_json(data: Any, filename: str) -> None:
    os.makedirs(os.path.dirname(filename) or ".", exist_ok=True)
    with open(filename, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, ensure_ascii=False)
    logger.info("Saved %s", filename)


def load_graph(source: str) -> Graph:
    """A DIMACS file path, or `named:<name>` for a built-in graph such as named:k2,3."""
    if source.startswith(NAMED_PREFIX):
        return named_graph(source[len(NAMED_PREFIX):])
    return read_dimacs(source)


def write_graph(stem: str, g: Graph, sidecar: Dict[str, Any], comments=()) -> Dict[str, str]:
    """Write <stem>.col and <stem>.meta.json; returns the paths written."""
    col_path = f"{stem}.col"
    meta_path = f"{stem}.meta.json"
    write_dimacs(g, col_path, comments)
    save_json({"graph_hash": graph_hash(g), **sidecar}, meta_path)
    return {"graph": col_path, "meta": meta_path}


def write_manifest(stem: str, manifest: Manifest) -> str:
    path = f"{stem}.manifest.json"
    save_json(manifest.model_dump(mode="json"), path)
    return path


def colouring_record(f: Optional[Colouring]) -> Optional[Dict[str, Any]]:
    if f is None:
        return None
    return {"k": f.palette_size, "assignment": list(f.assignment)}


def write_colouring(path: str, f: Colouring) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as out:
        out.write(format_colouring(f))
    logger.info("Saved colouring to %s", path)


def read_colouring(path: str) -> Colouring:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        return parse_colouring(text)
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from e
