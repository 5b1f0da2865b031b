"""Spelling suggestion value types."""

from __future__ import annotations

from enum import Enum

from pydantic import Field

from .base import Frozen


class SuggestionSource(Enum):
    """Which generator found a suggestion. Declaration order is priority order."""

    TYPOGRAPHIC = "typographic"
    PHONOGRAPHIC = "phonographic"
    # Typographic candidates expanded through the class table unfiltered.
    COMBINED = "combined"


class ErrorCategory(Enum):
    TYPOGRAPHIC = "typographic"
    MORPHOLOGICAL = "morphological"
    PRONUNCIATION = "pronunciation"
    # Needs syntax or semantics; declared for completeness, never produced.
    GRAMMATICAL = "grammatical"


class Suggestion(Frozen):
    word: str
    distance: int = Field(ge=0)
    source: SuggestionSource

    def tsv(self) -> str:
        return f"{self.word}\t{self.distance}\t{self.source.value}"


class TokenReport(Frozen):
    """One word of checked text. `offset` counts characters, not bytes."""

    token: str
    offset: int = Field(ge=0)
    known: bool
