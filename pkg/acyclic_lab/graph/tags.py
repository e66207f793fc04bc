"""Per-vertex role metadata carried by gadget and reduction outputs."""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class Role(str, Enum):
    PLAIN = "plain"
    TERMINAL = "terminal"
    CONNECTOR = "connector"
    CHAIN_LEVEL = "chain-level"
    COPY = "copy"
    FILLER_INTERNAL = "filler-internal"


class VertexTag(BaseModel):
    """Exactly one role per vertex; `index` carries the chain level or copy number."""
    model_config = ConfigDict(extra='forbid', frozen=True)

    label: str = Field(description="Free-form vertex name, e.g. '(0,1)' or 'L3.2'")
    role: Role = Field(description="Role of the vertex inside its gadget")
    index: Optional[int] = Field(
        default=None,
        description="Chain level (chain-level, terminal) or copy number 1|2 (copy)",
    )
