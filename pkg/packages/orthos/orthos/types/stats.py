"""AutomatonStats: size figures for a compiled lexicon."""

from __future__ import annotations

from pydantic import Field, model_validator

from .base import Frozen


class AutomatonStats(Frozen):
    """Node, transition and terminal counts plus the serialized byte size."""

    nodes: int = Field(ge=0)
    transitions: int = Field(ge=0)
    terminals: int = Field(ge=0)
    bytes: int = Field(ge=0)

    @model_validator(mode="after")
    def _terminals_within_nodes(self) -> AutomatonStats:
        if self.terminals > self.nodes:
            msg = f"terminals ({self.terminals}) exceed nodes ({self.nodes})"
            raise ValueError(msg)
        return self

    def line(self) -> str:
        """The machine-readable form printed by `orthos build` and `orthos stats`."""
        return (
            f"nodes={self.nodes} transitions={self.transitions} "
            f"terminals={self.terminals} bytes={self.bytes}"
        )
