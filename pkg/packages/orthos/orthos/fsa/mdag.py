"""MDAG: minimal deterministic acyclic automaton built from a sorted word list.

Construction is incremental. Each new word shares its longest common prefix
with the previous one; the tail of the previous word's path can no longer
change, so those states are minimized (replaced by an equivalent registered
state, or registered themselves) before the new suffix is appended. When the
last word is in, the remaining path is minimized down to the root and the
node graph is frozen into flat arrays.
"""

from __future__ import annotations

from collections.abc import Iterable

from ..utils.greek import nfc
from .automaton import Automaton
from .errors import EmptyKeyError, UnsortedInputError


class Mdag(Automaton):
    """Compiled spelling lexicon. Immutable; safe to share across threads."""

    def contains(self, word: str) -> bool:
        edges = self.edges
        state: int | None = 0
        for ch in nfc(word):
            state = edges[state].get(ch)
            if state is None:
                return False
        return self.final[state]


class _Node:
    __slots__ = ("edges", "final", "id")

    def __init__(self, node_id: int) -> None:
        self.id = node_id
        self.final = False
        self.edges: dict[str, _Node] = {}

    def signature(self) -> tuple[bool, tuple[tuple[str, int], ...]]:
        # Children are already minimized, so their ids identify their
        # right languages.
        return self.final, tuple((label, child.id) for label, child in self.edges.items())


class MdagBuilder:
    """Single-owner incremental builder. Feed words in ascending order."""

    def __init__(self) -> None:
        self._next_id = 0
        self.root = self._new_node()
        self._previous = ""
        self._count = 0
        # (parent, label, child) along the previous word's unminimized tail.
        self._unchecked: list[tuple[_Node, str, _Node]] = []
        self._register: dict[tuple[bool, tuple[tuple[str, int], ...]], _Node] = {}
        self._finished = False

    def _new_node(self) -> _Node:
        node = _Node(self._next_id)
        self._next_id += 1
        return node

    def add(self, word: str) -> None:
        if self._finished:
            msg = "MdagBuilder.add() called after finish()."
            raise RuntimeError(msg)
        word = nfc(word)
        if not word:
            raise EmptyKeyError(self._count)
        if self._count and word <= self._previous:
            raise UnsortedInputError(self._previous, word)

        common = 0
        for a, b in zip(word, self._previous):
            if a != b:
                break
            common += 1

        self._minimize(common)

        node = self._unchecked[-1][2] if self._unchecked else self.root
        for label in word[common:]:
            child = self._new_node()
            node.edges[label] = child
            self._unchecked.append((node, label, child))
            node = child
        node.final = True

        self._previous = word
        self._count += 1

    def _minimize(self, down_to: int) -> None:
        while len(self._unchecked) > down_to:
            parent, label, child = self._unchecked.pop()
            key = child.signature()
            existing = self._register.get(key)
            if existing is not None:
                parent.edges[label] = existing
            else:
                self._register[key] = child

    def finish(self) -> Mdag:
        self._minimize(0)
        self._finished = True
        return _freeze(self.root)


def _freeze(root: _Node) -> Mdag:
    """Number states in depth-first preorder and copy them into flat arrays."""
    order: dict[int, int] = {}
    nodes: list[_Node] = []
    stack = [root]
    while stack:
        node = stack.pop()
        if node.id in order:
            continue
        order[node.id] = len(nodes)
        nodes.append(node)
        for child in reversed(list(node.edges.values())):
            if child.id not in order:
                stack.append(child)
    edges = tuple(
        {label: order[child.id] for label, child in sorted(node.edges.items())}
        for node in nodes
    )
    final = tuple(node.final for node in nodes)
    # Arrays come straight from the builder; skip revalidation.
    return Mdag.model_construct(edges=edges, final=final)


def build_mdag(words: Iterable[str]) -> Mdag:
    """Build the minimal automaton for a sorted, duplicate-free word list."""
    builder = MdagBuilder()
    for word in words:
        builder.add(word)
    return builder.finish()
