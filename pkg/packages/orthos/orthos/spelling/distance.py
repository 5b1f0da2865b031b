"""Unit-cost edit distance. Pure functions, no DI."""

from __future__ import annotations


def levenshtein(a: str, b: str) -> int:
    """Minimum insertions, deletions and substitutions turning `a` into `b`."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    # Two rows over the shorter string.
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]
