"""Binary format for compiled automata.

    header   magic (4 bytes, b"MDG1" or b"TRI1")
             version (u32 LE)
             node count (u32 LE)
    per node terminal flag (u8, 0 or 1)
             transition count (u32 LE)
             (label code point u32 LE, target index u32 LE) * count
             record id (u64 LE), TRIE terminal nodes only

Nodes appear in state order; node 0 is the start state.
"""

from __future__ import annotations

import struct

from .automaton import Automaton
from .errors import (
    BadMagicError,
    CorruptPayloadError,
    TruncatedPayloadError,
    VersionMismatchError,
)
from .mdag import Mdag
from .trie import Trie

MDAG_MAGIC = b"MDG1"
TRIE_MAGIC = b"TRI1"
FORMAT_VERSION = 1

HEADER_SIZE = 12
NODE_SIZE = 5
TRANSITION_SIZE = 8
RECORD_SIZE = 8

_HEADER = struct.Struct("<4sII")
_NODE = struct.Struct("<BI")
_TRANSITION = struct.Struct("<II")
_RECORD = struct.Struct("<Q")

_MAX_CODE_POINT = 0x10FFFF


def encoded_size(automaton: Automaton) -> int:
    """Byte length of `serialize(automaton)` without building the bytes."""
    size = (
        HEADER_SIZE
        + NODE_SIZE * automaton.node_count
        + TRANSITION_SIZE * automaton.transition_count
    )
    if isinstance(automaton, Trie):
        size += RECORD_SIZE * automaton.terminal_count
    return size


def serialize(automaton: Mdag | Trie) -> bytes:
    records = automaton.records if isinstance(automaton, Trie) else None
    magic = MDAG_MAGIC if records is None else TRIE_MAGIC
    out = bytearray(_HEADER.pack(magic, FORMAT_VERSION, automaton.node_count))
    for state, edges in enumerate(automaton.edges):
        terminal = automaton.final[state]
        out += _NODE.pack(1 if terminal else 0, len(edges))
        for label, target in edges.items():
            out += _TRANSITION.pack(ord(label), target)
        if records is not None and terminal:
            out += _RECORD.pack(records[state])
    return bytes(out)


def deserialize(data: bytes) -> Mdag | Trie:
    """Decode either kind, dispatching on the magic bytes."""
    if len(data) < 4:
        raise BadMagicError(bytes(data[:4]))
    magic = bytes(data[:4])
    if magic not in (MDAG_MAGIC, TRIE_MAGIC):
        raise BadMagicError(magic)
    if len(data) < HEADER_SIZE:
        raise TruncatedPayloadError(len(data), HEADER_SIZE - len(data))
    _, version, node_count = _HEADER.unpack_from(data, 0)
    if version != FORMAT_VERSION:
        raise VersionMismatchError(version, FORMAT_VERSION)
    if node_count == 0:
        raise CorruptPayloadError(8, "node count is zero; the start state is missing")

    is_trie = magic == TRIE_MAGIC
    reader = _Reader(data, HEADER_SIZE)
    edges: list[dict[str, int]] = []
    final: list[bool] = []
    records: list[int | None] = []
    node_offsets: list[int] = []
    incoming = [0] * node_count
    for _ in range(node_count):
        flag_offset = reader.offset
        node_offsets.append(flag_offset)
        flag, count = reader.read(_NODE)
        if flag not in (0, 1):
            raise CorruptPayloadError(flag_offset, f"terminal flag is {flag}")
        out: dict[str, int] = {}
        previous = -1
        for _ in range(count):
            at = reader.offset
            code, target = reader.read(_TRANSITION)
            if code > _MAX_CODE_POINT or 0xD800 <= code <= 0xDFFF:
                raise CorruptPayloadError(at, f"label {code:#x} is not a code point")
            if code <= previous:
                raise CorruptPayloadError(at, "labels are not strictly ascending")
            if target >= node_count:
                raise CorruptPayloadError(at, f"target {target} is out of range")
            if is_trie:
                incoming[target] += 1
                if target == 0 or incoming[target] > 1:
                    raise CorruptPayloadError(at, f"state {target} has a second parent")
            previous = code
            out[chr(code)] = target
        edges.append(out)
        final.append(flag == 1)
        if is_trie:
            records.append(reader.read(_RECORD)[0] if flag else None)
    if reader.offset != len(data):
        raise CorruptPayloadError(reader.offset, "trailing bytes after the last node")
    if is_trie:
        orphan = next((s for s in range(1, node_count) if not incoming[s]), None)
        if orphan is not None:
            reason = f"state {orphan} has no parent"
            raise CorruptPayloadError(node_offsets[orphan], reason)
    _check_acyclic(edges, node_offsets)

    if is_trie:
        return Trie.model_construct(
            edges=tuple(edges), final=tuple(final), records=tuple(records)
        )
    return Mdag.model_construct(edges=tuple(edges), final=tuple(final))


def _check_acyclic(edges: list[dict[str, int]], node_offsets: list[int]) -> None:
    """Reject any cycle; lookups and enumeration assume a DAG."""
    indegree = [0] * len(edges)
    for out in edges:
        for target in out.values():
            indegree[target] += 1
    ready = [s for s, d in enumerate(indegree) if d == 0]
    removed = 0
    while ready:
        state = ready.pop()
        removed += 1
        for target in edges[state].values():
            indegree[target] -= 1
            if indegree[target] == 0:
                ready.append(target)
    if removed < len(edges):
        state = next(s for s, d in enumerate(indegree) if d > 0)
        reason = f"state {state} lies on or after a cycle"
        raise CorruptPayloadError(node_offsets[state], reason)


def deserialize_mdag(data: bytes) -> Mdag:
    automaton = deserialize(data)
    if not isinstance(automaton, Mdag):
        raise BadMagicError(TRIE_MAGIC, (MDAG_MAGIC,))
    return automaton


def deserialize_trie(data: bytes) -> Trie:
    automaton = deserialize(data)
    if not isinstance(automaton, Trie):
        raise BadMagicError(MDAG_MAGIC, (TRIE_MAGIC,))
    return automaton


class _Reader:
    __slots__ = ("data", "offset")

    def __init__(self, data: bytes, offset: int) -> None:
        self.data = data
        self.offset = offset

    def read(self, fmt: struct.Struct) -> tuple[int, ...]:
        end = self.offset + fmt.size
        if end > len(self.data):
            raise TruncatedPayloadError(len(self.data), end - len(self.data))
        values = fmt.unpack_from(self.data, self.offset)
        self.offset = end
        return values
