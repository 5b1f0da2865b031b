"""Single-edit typographic candidates. Pure functions, no DI."""

from __future__ import annotations

from collections.abc import Iterable


def typographic_candidates(word: str, alphabet: Iterable[str]) -> set[str]:
    """Every string one substitution, deletion, insertion or adjacent
    transposition away from `word`. The word itself is never included.
    """
    letters = sorted(set(alphabet))
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    out: set[str] = set()
    for left, right in splits:
        if right:
            out.add(left + right[1:])
            tail = right[1:]
            for ch in letters:
                out.add(left + ch + tail)
            if len(right) > 1:
                out.add(left + right[1] + right[0] + right[2:])
        for ch in letters:
            out.add(left + ch + right)
    out.discard(word)
    return out
