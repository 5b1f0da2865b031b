"""Word-list files: UTF-8, one word per line, `#` comment lines."""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from ..utils.greek import nfc
from .errors import WordListError


def parse_wordlist(text: str, source: str = "<text>") -> list[str]:
    """Words in file order, NFC-normalized. Blank entries are rejected."""
    words: list[str] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            continue
        word = raw.strip()
        if not word:
            raise WordListError(source, number, "blank entry")
        words.append(nfc(word))
    return words


def read_wordlist(path: Path) -> list[str]:
    return parse_wordlist(path.read_text(encoding="utf-8"), str(path))


def prepare_words(words: Iterable[str]) -> list[str]:
    """Normalize, sort and de-duplicate for the MDAG builder."""
    return sorted({nfc(w) for w in words if w})
