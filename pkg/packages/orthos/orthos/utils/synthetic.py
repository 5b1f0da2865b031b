"""Seeded generator of inflected Greek-like lexicons for benchmarks.

Stems are random syllable strings; each stem takes every ending of one
paradigm, so the forms share suffixes the way a real morphological lexicon
does. Pure functions, no DI.
"""

from __future__ import annotations

import random
from collections.abc import Iterable

_ONSETS = (
    "", "β", "γ", "δ", "θ", "κ", "λ", "μ", "ν", "π",
    "ρ", "σ", "τ", "φ", "χ", "στ", "τρ", "πλ", "κρ", "μπ",
)  # fmt: skip
_NUCLEI = ("α", "ε", "ι", "ο", "ου", "αι", "ει")
_CODAS = ("κ", "λ", "μ", "ν", "ρ", "σ", "τ", "χ")

# Endings carry the accent so every stem stays unaccented.
PARADIGMS: tuple[tuple[str, ...], ...] = (
    tuple(
        "ώνω ώνεις ώνει ώνουμε ώνετε ώνουν ώσα ώσες ώσε ώσαμε ώσατε ώσαν "
        "ώνομαι ώνεσαι ώνεται ωνόμαστε ώνεστε ώνονται ώθηκα ώθηκες ώθηκε "
        "ωθήκαμε ωθήκατε ώθηκαν ωμένος ωμένη ωμένο".split()
    ),
    tuple("άω ώ άς ά άει άμε άτε άνε ούσα ούσες ούσε ήσα ήσες ήσε ήσαμε ήσατε ήσαν ήστε".split()),
    tuple("ός ή ό ού ής όν οί ές ά ών ούς ότερος ότερη ότερο ότατος ότατη ότατο".split()),
    tuple("ία ίας ίες ιών ιακός ιακή ιακό ιακού ιακής ιακοί ιακές ιακά ιακών".split()),
    tuple("ίζω ίζεις ίζει ίζουμε ίζετε ίζουν ίσα ίσες ίσε ίσαμε ίσατε ίσαν ιστής ιστές ισμός ισμού ισμοί".split()),
)

_LETTERS = "αβγδεζηθικλμνξοπρστυφχψωάέήίόύώ"
_MAX_ATTEMPTS_PER_WORD = 100


def _stem(rng: random.Random) -> str:
    syllables = rng.randint(2, 3)
    body = "".join(rng.choice(_ONSETS) + rng.choice(_NUCLEI) for _ in range(syllables))
    return body + rng.choice(_CODAS)


def synthetic_lexicon(size: int, *, seed: int = 0) -> list[str]:
    """At least `size` distinct forms, sorted. Same seed, same lexicon."""
    if size < 0:
        msg = f"size must be non-negative, got {size}"
        raise ValueError(msg)
    rng = random.Random(seed)
    forms: set[str] = set()
    stems: set[str] = set()
    while len(forms) < size:
        stem = _stem(rng)
        if stem in stems:
            continue
        stems.add(stem)
        forms.update(stem + ending for ending in rng.choice(PARADIGMS))
    return sorted(forms)


def misspell(word: str, rng: random.Random) -> str:
    """Apply one random insertion, deletion, substitution or transposition."""
    i = rng.randrange(len(word) + 1)
    match rng.randrange(4):
        case 0:
            return word[:i] + rng.choice(_LETTERS) + word[i:]
        case 1 if len(word) > 1:
            i = min(i, len(word) - 1)
            return word[:i] + word[i + 1 :]
        case 3 if len(word) > 1:
            i = min(i, len(word) - 2)
            return word[:i] + word[i + 1] + word[i] + word[i + 2 :]
        case _:
            i = min(i, len(word) - 1)
            return word[:i] + rng.choice(_LETTERS) + word[i + 1 :]


def unknown_words(lexicon: Iterable[str], count: int, *, seed: int = 0) -> list[str]:
    """Up to `count` distinct misspellings of lexicon words that are not in it.

    Fewer come back only when a tiny lexicon runs out of distinct typos.
    """
    words = sorted(set(lexicon))
    if not words:
        msg = "Cannot misspell an empty lexicon."
        raise ValueError(msg)
    known = set(words)
    rng = random.Random(seed)
    out: dict[str, None] = {}
    attempts = 0
    while len(out) < count and attempts < _MAX_ATTEMPTS_PER_WORD * count:
        attempts += 1
        typo = misspell(rng.choice(words), rng)
        if typo and typo not in known:
            out[typo] = None
    return list(out)
