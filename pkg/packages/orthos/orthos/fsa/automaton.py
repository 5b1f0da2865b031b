"""Shared state-table layout for MDAG and TRIE lexicons."""

from __future__ import annotations

from ..types.base import Frozen


class Automaton(Frozen):
    """Flat state table. State 0 is the start state.

    `edges[s]` maps a one-character label to the target state, with keys in
    ascending label order. `final[s]` marks states where a stored word ends.
    Both tuples are filled once by a builder or decoder and never mutated.
    """

    edges: tuple[dict[str, int], ...] = ({},)
    final: tuple[bool, ...] = (False,)

    @property
    def node_count(self) -> int:
        return len(self.edges)

    @property
    def transition_count(self) -> int:
        return sum(len(e) for e in self.edges)

    @property
    def terminal_count(self) -> int:
        return sum(self.final)

    @property
    def alphabet(self) -> frozenset[str]:
        """Every label used on some transition."""
        labels: set[str] = set()
        for e in self.edges:
            labels.update(e)
        return frozenset(labels)

    def walk(self, word: str) -> int | None:
        """State reached by reading `word` from the start, or None."""
        edges = self.edges
        state: int | None = 0
        for ch in word:
            state = edges[state].get(ch)
            if state is None:
                return None
        return state

    def trace(self, word: str) -> list[int]:
        """States entered while reading `word`, stopping at the first miss.

        An accepted word enters exactly `len(word)` states.
        """
        edges = self.edges
        state = 0
        visited: list[int] = []
        for ch in word:
            nxt = edges[state].get(ch)
            if nxt is None:
                break
            visited.append(nxt)
            state = nxt
        return visited

    def words(self) -> list[str]:
        """Accepted strings in ascending code point order."""
        edges = self.edges
        final = self.final
        out: list[str] = []
        stack: list[tuple[int, str]] = [(0, "")]
        while stack:
            state, prefix = stack.pop()
            if final[state]:
                out.append(prefix)
            # Push in reverse so the smallest label is expanded first.
            for label, target in reversed(edges[state].items()):
                stack.append((target, prefix + label))
        return out
