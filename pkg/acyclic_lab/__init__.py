"""Exact acyclic colouring, hardness-reduction gadgets and colouring class counting."""

__version__ = "0.1.0"
