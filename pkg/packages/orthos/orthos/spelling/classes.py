"""EquivalenceClassTable: graphemes that are confused for one another.

Each class groups graphemes that sound alike (πσ and ψ, ει and ι) or look
alike (β and θ). The table is loaded from a text file, one class per line.
Classes that share a grapheme are merged so every grapheme belongs to at
most one class. All members are indexed in a record trie whose record is
the class id; segmentation walks that trie for the longest match.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from importlib import resources
from pathlib import Path

from pydantic import PrivateAttr, field_validator

from ..fsa import Trie, build_trie
from ..types.base import Frozen
from ..utils.greek import nfc
from .errors import ClassTableError


class EquivalenceClassTable(Frozen):
    classes: tuple[tuple[str, ...], ...] = ()

    _matcher: Trie = PrivateAttr()
    _class_of: dict[str, int] = PrivateAttr()

    @field_validator("classes")
    @classmethod
    def _check_partition(
        cls, classes: tuple[tuple[str, ...], ...]
    ) -> tuple[tuple[str, ...], ...]:
        owner: dict[str, int] = {}
        for i, members in enumerate(classes):
            if len(members) < 2:
                msg = f"class {i} needs at least two members, got {list(members)}"
                raise ValueError(msg)
            if len(set(members)) != len(members):
                msg = f"class {i} repeats a member: {list(members)}"
                raise ValueError(msg)
            for m in members:
                if not m:
                    msg = f"class {i} has an empty member"
                    raise ValueError(msg)
                if m in owner:
                    msg = f"grapheme {m!r} is in class {owner[m]} and class {i}"
                    raise ValueError(msg)
                owner[m] = i
        return classes

    def model_post_init(self, __context: object) -> None:
        self._class_of = {m: i for i, members in enumerate(self.classes) for m in members}
        self._matcher = build_trie(self._class_of.items())

    @property
    def matcher(self) -> Trie:
        """Member graphemes indexed by class id."""
        return self._matcher

    def class_of(self, grapheme: str) -> int | None:
        return self._class_of.get(grapheme)

    @property
    def graphemes(self) -> frozenset[str]:
        return frozenset(self._class_of)

    @classmethod
    def from_groups(cls, groups: Iterable[Sequence[str]]) -> EquivalenceClassTable:
        """Build a table, merging every pair of groups that share a grapheme."""
        return cls(classes=merge_classes(groups))


def merge_classes(groups: Iterable[Sequence[str]]) -> tuple[tuple[str, ...], ...]:
    """Union groups that share a member.

    A merged class sits where its earliest group sat and lists members in
    first-seen order.
    """
    groups = [tuple(dict.fromkeys(nfc(m) for m in g)) for g in groups]
    parent = list(range(len(groups)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    first_owner: dict[str, int] = {}
    for i, members in enumerate(groups):
        for m in members:
            j = first_owner.setdefault(m, i)
            if j != i:
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)

    merged: dict[int, dict[str, None]] = {}
    for i, members in enumerate(groups):
        bucket = merged.setdefault(find(i), {})
        for m in members:
            bucket[m] = None
    return tuple(tuple(merged[root]) for root in sorted(merged))


def parse_class_table(text: str, source: str = "<text>") -> EquivalenceClassTable:
    groups: list[list[str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        members = list(dict.fromkeys(nfc(m) for m in line.split()))
        if len(members) < 2:
            raise ClassTableError(source, number, "a class needs at least two distinct members")
        groups.append(members)
    return EquivalenceClassTable.from_groups(groups)


def load_class_table(path: Path) -> EquivalenceClassTable:
    return parse_class_table(path.read_text(encoding="utf-8"), str(path))


def default_class_table() -> EquivalenceClassTable:
    """The bundled Greek class table."""
    text = resources.files("orthos.data").joinpath("classes.txt").read_text(encoding="utf-8")
    return parse_class_table(text, "orthos/data/classes.txt")
