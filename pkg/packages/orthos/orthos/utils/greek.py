"""Greek alphabet tables and text normalization. Pure functions, no DI."""

from __future__ import annotations

import unicodedata

# Monotonic vowels, including the dialytika forms that never join a digraph.
LOWER_VOWELS = frozenset("αάεέηήιίϊΐοόυύϋΰωώ")
LOWER_CONSONANTS = frozenset("βγδζθκλμνξπρσςτφχψ")

UPPER_VOWELS = frozenset("ΑΆΕΈΗΉΙΊΪΟΌΥΎΫΩΏ")
UPPER_CONSONANTS = frozenset("ΒΓΔΖΘΚΛΜΝΞΠΡΣΤΦΧΨ")

# Combining acute and diaeresis, so decomposed input still tokenizes as one run.
COMBINING_MARKS = frozenset("\u0301\u0308")

GREEK_LETTERS = LOWER_VOWELS | LOWER_CONSONANTS | UPPER_VOWELS | UPPER_CONSONANTS

_ACCENTED = frozenset("άέήίΐόύΰώΆΈΉΊΌΎΏ")


def nfc(text: str) -> str:
    """Return `text` in canonical composed form."""
    if unicodedata.is_normalized("NFC", text):
        return text
    return unicodedata.normalize("NFC", text)


def is_accented(ch: str) -> bool:
    """True if `ch` carries the tonos (acute) mark."""
    return ch in _ACCENTED
