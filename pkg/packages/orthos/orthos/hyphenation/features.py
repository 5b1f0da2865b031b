"""Training patterns for the ambiguous vowel pairs.

A pattern describes one occurrence of a pair by its surrounding letters, the
accent marks of its two vowels, where it sits and how long the word is. All
feature values are strings so the trees treat them as categories.
"""

from __future__ import annotations

from collections.abc import Iterable

from ..types.base import Frozen
from ..types.hyphenation import HyphenatedForm
from ..utils.greek import is_accented
from .syllabify import lower

FEATURE_NAMES: tuple[str, ...] = (
    "c-3",
    "c-2",
    "c-1",
    "c+2",
    "c+3",
    "c+4",
    "acc1",
    "acc2",
    "pos",
    "len",
)

OUTSIDE = "#"

_OFFSETS = (-3, -2, -1, 2, 3, 4)


class Pattern(Frozen):
    features: tuple[str, ...]
    split: bool


def features_at(word: str, at: int) -> tuple[str, ...]:
    """Features of the pair word[at:at+2] in a lower-cased word."""
    n = len(word)
    letters = [word[at + k] if 0 <= at + k < n else OUTSIDE for k in _OFFSETS]
    return (
        *letters,
        "1" if is_accented(word[at]) else "0",
        "1" if is_accented(word[at + 1]) else "0",
        str(at),
        str(n),
    )


def occurrences(word: str, bigram: str) -> list[int]:
    """Every offset of `bigram` in `word`, overlapping ones included."""
    out: list[int] = []
    at = word.find(bigram)
    while at != -1:
        out.append(at)
        at = word.find(bigram, at + 1)
    return out


def extract_patterns(corpus: Iterable[HyphenatedForm], bigram: str) -> list[Pattern]:
    """One labelled pattern per occurrence of `bigram` in the corpus."""
    patterns: list[Pattern] = []
    for form in corpus:
        word = lower(form.word)
        cuts = form.boundaries
        for at in occurrences(word, bigram):
            patterns.append(Pattern(features=features_at(word, at), split=at + 1 in cuts))
    return patterns
