"""The rule engine: cut a word into syllables. Pure functions, no DI.

Ambiguous vowel pairs are handed to a `Decide` callback, so the same scan
serves the trained model and the fixed-policy oracle.
"""

from __future__ import annotations

from collections.abc import Callable
from enum import Enum
from itertools import pairwise

from ..types.hyphenation import Hyphenation, HyphenationSource
from ..utils.greek import nfc
from .errors import AlphabetError, HyphenationError
from .rules import SyllabificationRules

# (lower-case word, offset of the pair's first vowel) -> split between the two?
Decide = Callable[[str, int], bool]


class Policy(Enum):
    ALWAYS_SPLIT = "always-split"
    NEVER_SPLIT = "never-split"


def check_alphabet(word: str, rules: SyllabificationRules) -> None:
    letters = rules.vowels | rules.consonants
    for i, ch in enumerate(word):
        low = ch.lower()
        if len(low) != 1 or low not in letters:
            raise AlphabetError(word, ch, i)


def lower(word: str) -> str:
    """Lower-case letter by letter so offsets line up with the input."""
    return "".join(ch.lower() for ch in word)


def boundaries(word: str, rules: SyllabificationRules, decide: Decide) -> tuple[int, ...] | None:
    """Syllable start offsets of an already lower-cased word, or None without vowels."""
    ambiguous = rules.ambiguous_set
    vowels = rules.vowels
    n = len(word)
    cuts: list[int] = []
    prev_end: int | None = None
    i = 0
    while i < n:
        if word[i] not in vowels:
            i += 1
            continue
        j = i
        while j < n and word[j] in vowels:
            j += 1
        if prev_end is not None:
            cuts.append(prev_end + rules.cluster_cut(word[prev_end:i]))
        at = i
        for left, _ in pairwise(rules.vowel_units(word[i:j])):
            at += len(left)
            if word[at - 1 : at + 1] not in ambiguous or decide(word, at - 1):
                cuts.append(at)
        prev_end = j
        i = j
    if prev_end is None:
        return None
    return tuple(cuts)


def cut(word: str, offsets: tuple[int, ...]) -> tuple[str, ...]:
    edges = (0, *offsets, len(word))
    return tuple(word[a:b] for a, b in pairwise(edges))


def syllabify(word: str, rules: SyllabificationRules, decide: Decide) -> Hyphenation:
    """Apply rules 1 to 4 to `word`; upper-case input is cut like its lower case."""
    word = nfc(word)
    if not word:
        msg = "Cannot hyphenate an empty word."
        raise HyphenationError(msg)
    check_alphabet(word, rules)
    offsets = boundaries(lower(word), rules, decide)
    if offsets is None:
        return Hyphenation(syllables=(word,), source=HyphenationSource.UNSYLLABIFIABLE)
    return Hyphenation(syllables=cut(word, offsets))


def deterministic_oracle(
    word: str, rules: SyllabificationRules, policy: Policy = Policy.NEVER_SPLIT
) -> Hyphenation:
    """Rules 1 to 4 with every ambiguous pair decided by a fixed policy."""
    split = policy is Policy.ALWAYS_SPLIT
    return syllabify(word, rules, lambda _word, _at: split)
