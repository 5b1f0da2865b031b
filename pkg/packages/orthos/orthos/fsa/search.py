"""Restricted regex search: walk the lexicon and the regex groups together."""

from __future__ import annotations

from collections.abc import Sequence

from ..types.regex import GraphemeRegex
from .automaton import Automaton


def regex_search(automaton: Automaton, regex: GraphemeRegex) -> list[str]:
    """Stored words matching one alternative per group, sorted, no repeats."""
    return sorted(search_groups(automaton, regex.groups))


def search_groups(automaton: Automaton, groups: Sequence[Sequence[str]]) -> set[str]:
    """Unsorted matches for raw alternative groups.

    The cross product of alternatives is never built; a branch dies as soon
    as an alternative leaves the automaton.
    """
    edges = automaton.edges
    final = automaton.final
    last = len(groups)
    found: set[str] = set()
    # Different alternative paths can land on the same (index, state, prefix).
    seen: set[tuple[int, int, str]] = set()
    stack: list[tuple[int, int, str]] = [(0, 0, "")]
    while stack:
        item = stack.pop()
        if item in seen:
            continue
        seen.add(item)
        index, state, prefix = item
        if index == last:
            if final[state]:
                found.add(prefix)
            continue
        for alt in groups[index]:
            target: int | None = state
            for ch in alt:
                target = edges[target].get(ch)
                if target is None:
                    break
            if target is not None:
                stack.append((index + 1, target, prefix + alt))
    return found
