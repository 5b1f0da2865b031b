"""Hyphenated corpus files: one word per line, `-` at each syllable boundary."""

from __future__ import annotations

from pathlib import Path

from ..types.hyphenation import HyphenatedForm
from ..utils.greek import nfc
from .errors import CorpusFormatError
from .rules import SyllabificationRules
from .syllabify import lower


def parse_corpus(
    text: str, source: str = "<text>", rules: SyllabificationRules | None = None
) -> list[HyphenatedForm]:
    """Parse corpus text, skipping blank lines and `#` comments.

    A word may repeat. Heterophonic homographs repeat with different
    hyphenations, one line per pronunciation.
    """
    rules = rules or SyllabificationRules()
    letters = rules.vowels | rules.consonants
    forms: list[HyphenatedForm] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = nfc(raw.strip())
        if not line or line.startswith("#"):
            continue
        syllables = line.split("-")
        for syl in syllables:
            if not syl:
                raise CorpusFormatError(source, number, f"empty syllable in {line!r}")
            low = lower(syl)
            bad = next((ch for ch in low if ch not in letters), None)
            if bad is not None or len(low) != len(syl):
                raise CorpusFormatError(source, number, f"{line!r} has a non-Greek character")
            if not any(ch in rules.vowels for ch in low):
                raise CorpusFormatError(source, number, f"syllable {syl!r} has no vowel")
        forms.append(HyphenatedForm(syllables=tuple(syllables)))
    return forms


def read_corpus(path: Path, rules: SyllabificationRules | None = None) -> list[HyphenatedForm]:
    return parse_corpus(path.read_text(encoding="utf-8"), str(path), rules)
