"""Correction suggestions for unknown words.

Three generators feed one ranked list:

1. typographic: single-edit candidates that are in the lexicon
2. phonographic: the word's class regex searched against the lexicon
3. combined: single-edit candidates, unfiltered, each expanded through the
   class table and searched (capped, shortest candidates first)

Results are ranked by edit distance to the input, ties alphabetical.
"""

from __future__ import annotations

from pydantic import Field

from ..fsa import Mdag, search_groups
from ..types.base import Frozen
from ..types.suggestion import ErrorCategory, Suggestion, SuggestionSource, TokenReport
from ..utils.greek import nfc
from .candidates import typographic_candidates
from .classes import EquivalenceClassTable
from .distance import levenshtein
from .segment import expansion_groups, spans
from .text import check_text

DEFAULT_COMBINED_CAP = 500


def suggest(
    word: str,
    lexicon: Mdag,
    table: EquivalenceClassTable,
    limit: int = 10,
    *,
    max_distance: int | None = None,
    combined_cap: int = DEFAULT_COMBINED_CAP,
    alphabet: frozenset[str] | None = None,
) -> list[Suggestion]:
    if limit < 1:
        msg = f"limit must be at least 1, got {limit}"
        raise ValueError(msg)
    word = nfc(word)
    if alphabet is None:
        alphabet = lexicon.alphabet

    source: dict[str, SuggestionSource] = {}

    def note(words: set[str], kind: SuggestionSource) -> None:
        for w in words:
            source.setdefault(w, kind)

    candidates = typographic_candidates(word, alphabet)
    note({c for c in candidates if lexicon.contains(c)}, SuggestionSource.TYPOGRAPHIC)

    own_groups = expansion_groups(word, table)
    note(search_groups(lexicon, own_groups), SuggestionSource.PHONOGRAPHIC)

    searched = {own_groups}
    for cand in sorted(candidates, key=lambda c: (len(c), c))[:combined_cap]:
        groups = expansion_groups(cand, table)
        if groups in searched:
            continue
        searched.add(groups)
        note(search_groups(lexicon, groups), SuggestionSource.COMBINED)

    ranked: list[tuple[int, str]] = []
    for w in source:
        d = levenshtein(word, w)
        if max_distance is None or d <= max_distance:
            ranked.append((d, w))
    ranked.sort()
    return [
        Suggestion(word=w, distance=d, source=source[w]) for d, w in ranked[:limit]
    ]


def classify_error(word: str, correction: str, table: EquivalenceClassTable) -> ErrorCategory:
    """Best guess at why `word` was typed instead of `correction`.

    One edit (or one swap of neighbours) reads as a typing slip. A spelling
    that differs only by same-class graphemes reads as a morphology error
    when the differences sit in the last two graphemes (the ending), and as
    a pronunciation error otherwise. Anything else is a typing slip mixed
    with a class substitution and is reported as typographic.
    """
    word, correction = nfc(word), nfc(correction)
    if levenshtein(word, correction) <= 1 or _is_transposition(word, correction):
        return ErrorCategory.TYPOGRAPHIC
    a = spans(word, table)
    b = spans(correction, table)
    if len(a) != len(b):
        return ErrorCategory.TYPOGRAPHIC
    differing: list[int] = []
    for i, ((ta, ca), (tb, cb)) in enumerate(zip(a, b)):
        if ta == tb:
            continue
        if ca is None or ca != cb:
            return ErrorCategory.TYPOGRAPHIC
        differing.append(i)
    if differing and min(differing) >= len(a) - 2:
        return ErrorCategory.MORPHOLOGICAL
    return ErrorCategory.PRONUNCIATION


def _is_transposition(a: str, b: str) -> bool:
    if len(a) != len(b):
        return False
    diff = [i for i, (x, y) in enumerate(zip(a, b)) if x != y]
    return (
        len(diff) == 2
        and diff[1] == diff[0] + 1
        and a[diff[0]] == b[diff[1]]
        and a[diff[1]] == b[diff[0]]
    )


class Speller(Frozen):
    """A lexicon and class table bundled with the lexicon's label alphabet."""

    lexicon: Mdag
    table: EquivalenceClassTable
    alphabet: frozenset[str]
    combined_cap: int = Field(default=DEFAULT_COMBINED_CAP, ge=0)
    extra_letters: str = ""

    @classmethod
    def create(
        cls,
        lexicon: Mdag,
        table: EquivalenceClassTable,
        *,
        combined_cap: int = DEFAULT_COMBINED_CAP,
        extra_letters: str = "",
    ) -> Speller:
        return cls(
            lexicon=lexicon,
            table=table,
            alphabet=lexicon.alphabet,
            combined_cap=combined_cap,
            extra_letters=extra_letters,
        )

    def contains(self, word: str) -> bool:
        return self.lexicon.contains(word)

    def suggest(
        self, word: str, limit: int = 10, *, max_distance: int | None = None
    ) -> list[Suggestion]:
        return suggest(
            word,
            self.lexicon,
            self.table,
            limit,
            max_distance=max_distance,
            combined_cap=self.combined_cap,
            alphabet=self.alphabet,
        )

    def check(self, text: str) -> list[TokenReport]:
        return check_text(text, self.lexicon, self.extra_letters)
