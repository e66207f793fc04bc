from acyclic_lab.gadgets.base import GadgetGraph
from acyclic_lab.gadgets.chain import chain_colouring, chain_gadget, terminal_colours_agree
from acyclic_lab.gadgets.filler import filler_colouring, filler_gadget
from acyclic_lab.gadgets.gd import g_d, g_even, g_odd

__all__ = [
    "GadgetGraph",
    "chain_colouring",
    "chain_gadget",
    "filler_colouring",
    "filler_gadget",
    "g_d",
    "g_even",
    "g_odd",
    "terminal_colours_agree",
]
