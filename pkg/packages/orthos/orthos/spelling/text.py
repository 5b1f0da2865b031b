"""Tokenize running text and check every word against the lexicon."""

from __future__ import annotations

import re
from functools import lru_cache

from ..fsa import Mdag
from ..types.suggestion import TokenReport
from ..utils.greek import COMBINING_MARKS, GREEK_LETTERS


@lru_cache(maxsize=16)
def _token_pattern(extra_letters: str) -> re.Pattern[str]:
    letters = GREEK_LETTERS | COMBINING_MARKS | frozenset(extra_letters)
    body = "".join(re.escape(ch) for ch in sorted(letters))
    return re.compile(f"[{body}]+")


def tokenize(text: str, extra_letters: str = "") -> list[tuple[str, int]]:
    """Maximal letter runs with their character offsets."""
    return [(m.group(), m.start()) for m in _token_pattern(extra_letters).finditer(text)]


def check_text(text: str, lexicon: Mdag, extra_letters: str = "") -> list[TokenReport]:
    return [
        TokenReport(token=token, offset=offset, known=lexicon.contains(token))
        for token, offset in tokenize(text, extra_letters)
    ]
