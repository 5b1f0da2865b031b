"""Size statistics for compiled automata."""

from __future__ import annotations

from collections.abc import Iterable

from ..types.stats import AutomatonStats
from .automaton import Automaton
from .codec import encoded_size


def automaton_stats(automaton: Automaton) -> AutomatonStats:
    return AutomatonStats(
        nodes=automaton.node_count,
        transitions=automaton.transition_count,
        terminals=automaton.terminal_count,
        bytes=encoded_size(automaton),
    )


def source_size(words: Iterable[str]) -> int:
    """Bytes of the words as a UTF-8 list, one per line."""
    return sum(len(w.encode("utf-8")) + 1 for w in words)
