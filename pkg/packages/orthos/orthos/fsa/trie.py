"""TRIE: prefix tree whose terminal states carry a record id."""

from __future__ import annotations

from collections.abc import Iterable

from ..utils.greek import nfc
from .automaton import Automaton
from .errors import DuplicateKeyError, EmptyKeyError, RecordRangeError

RECORD_MAX = 2**64 - 1


class Trie(Automaton):
    """Record index. `records[s]` is set exactly when `final[s]` is true."""

    records: tuple[int | None, ...] = (None,)

    def lookup(self, key: str) -> int | None:
        state = self.walk(nfc(key))
        if state is None:
            return None
        return self.records[state]

    def items(self) -> list[tuple[str, int]]:
        """(key, record) pairs in ascending key order."""
        edges = self.edges
        records = self.records
        out: list[tuple[str, int]] = []
        stack: list[tuple[int, str]] = [(0, "")]
        while stack:
            state, prefix = stack.pop()
            record = records[state]
            if record is not None:
                out.append((prefix, record))
            for label, target in reversed(edges[state].items()):
                stack.append((target, prefix + label))
        return out


def build_trie(entries: Iterable[tuple[str, int]]) -> Trie:
    """Build a record trie. Entries may come in any order."""
    # Mutable tree first: children dicts plus a parallel record list.
    children: list[dict[str, int]] = [{}]
    payload: list[int | None] = [None]
    for index, (raw_key, record) in enumerate(entries):
        key = nfc(raw_key)
        if not key:
            raise EmptyKeyError(index)
        if not 0 <= record <= RECORD_MAX:
            raise RecordRangeError(key, record)
        state = 0
        for ch in key:
            nxt = children[state].get(ch)
            if nxt is None:
                nxt = len(children)
                children[state][ch] = nxt
                children.append({})
                payload.append(None)
            state = nxt
        if payload[state] is not None:
            raise DuplicateKeyError(key)
        payload[state] = record

    # Renumber in depth-first preorder with sorted labels so equal key sets
    # always serialize to the same bytes.
    order: list[int] = []
    stack = [0]
    while stack:
        state = stack.pop()
        order.append(state)
        stack.extend(children[state][label] for label in sorted(children[state], reverse=True))
    new_id = {old: new for new, old in enumerate(order)}
    edges = tuple(
        {label: new_id[children[old][label]] for label in sorted(children[old])}
        for old in order
    )
    records = tuple(payload[old] for old in order)
    final = tuple(r is not None for r in records)
    return Trie.model_construct(edges=edges, final=final, records=records)
