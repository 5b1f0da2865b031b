from __future__ import annotations

from enum import Enum

from pydantic import Field, model_validator

from .base import Frozen


class HyphenationSource(Enum):
    EXCEPTION = "exception"
    RULES = "rules"
    UNSYLLABIFIABLE = "unsyllabifiable"


class Hyphenation(Frozen):
    """A word cut into syllables, and what decided the cuts."""

    syllables: tuple[str, ...]
    source: HyphenationSource = HyphenationSource.RULES

    @property
    def word(self) -> str:
        return "".join(self.syllables)

    @property
    def boundaries(self) -> tuple[int, ...]:
        """Character offsets where a new syllable starts (never 0)."""
        out: list[int] = []
        at = 0
        for syl in self.syllables[:-1]:
            at += len(syl)
            out.append(at)
        return tuple(out)

    def __str__(self) -> str:
        return "-".join(self.syllables)


class HyphenatedForm(Frozen):
    """One corpus line: the syllables of a word as a typesetter split it."""

    syllables: tuple[str, ...] = Field(min_length=1)

    @property
    def word(self) -> str:
        return "".join(self.syllables)

    @property
    def boundaries(self) -> frozenset[int]:
        out: set[int] = set()
        at = 0
        for syl in self.syllables[:-1]:
            at += len(syl)
            out.add(at)
        return frozenset(out)

    def __str__(self) -> str:
        return "-".join(self.syllables)


class AmbiguousBigram(Frozen):
    """Corpus counts for one vowel pair whose split depends on pronunciation."""

    bigram: str = Field(min_length=2, max_length=2)
    count: int = Field(default=0, ge=0)
    splits: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _splits_within_count(self) -> AmbiguousBigram:
        if self.splits > self.count:
            msg = f"{self.bigram}: {self.splits} splits out of {self.count} occurrences"
            raise ValueError(msg)
        return self

    @property
    def split_percent(self) -> float:
        return 100.0 * self.splits / self.count if self.count else 0.0

    @property
    def non_split_percent(self) -> float:
        return 100.0 * (self.count - self.splits) / self.count if self.count else 0.0


class AmbiguityReport(Frozen):
    bigrams: tuple[AmbiguousBigram, ...]
    forms: int = Field(ge=0)
    ambiguous_forms: int = Field(ge=0)

    @property
    def occurrences(self) -> int:
        return sum(b.count for b in self.bigrams)

    @property
    def splits(self) -> int:
        return sum(b.splits for b in self.bigrams)

    @property
    def ambiguous_fraction(self) -> float:
        """Share of corpus forms with at least one ambiguous bigram, in percent."""
        return 100.0 * self.ambiguous_forms / self.forms if self.forms else 0.0

    @property
    def split_percent(self) -> float:
        return 100.0 * self.splits / self.occurrences if self.occurrences else 0.0

    @property
    def non_split_percent(self) -> float:
        total = self.occurrences
        return 100.0 * (total - self.splits) / total if total else 0.0
