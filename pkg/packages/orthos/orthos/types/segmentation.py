"""Grapheme segmentation of a word against an equivalence-class table."""

from __future__ import annotations

from .base import Frozen


class Segment(Frozen):
    text: str
    # Index into the class table, or None for a character in no class.
    class_id: int | None = None


class Segmentation(Frozen):
    segments: tuple[Segment, ...] = ()

    @property
    def text(self) -> str:
        return "".join(s.text for s in self.segments)

    def __str__(self) -> str:
        return "".join(
            f"[{s.text}]" if s.class_id is not None else s.text for s in self.segments
        )
