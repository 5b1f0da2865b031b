"""Split words into class graphemes and turn them into correction regexes."""

from __future__ import annotations

from ..types.regex import GraphemeRegex
from ..types.segmentation import Segment, Segmentation
from ..utils.greek import nfc
from .classes import EquivalenceClassTable


def spans(word: str, table: EquivalenceClassTable) -> list[tuple[str, int | None]]:
    """Left-to-right longest-match decomposition as (text, class id) pairs.

    Characters that start no class member become single-character spans
    with no class. `word` must already be NFC.
    """
    matcher = table.matcher
    edges = matcher.edges
    records = matcher.records
    out: list[tuple[str, int | None]] = []
    i = 0
    n = len(word)
    while i < n:
        state: int | None = 0
        best_end = -1
        best_class: int | None = None
        j = i
        while j < n:
            state = edges[state].get(word[j])
            if state is None:
                break
            j += 1
            if records[state] is not None:
                best_end, best_class = j, records[state]
        if best_end < 0:
            out.append((word[i], None))
            i += 1
        else:
            out.append((word[i:best_end], best_class))
            i = best_end
    return out


def expansion_groups(word: str, table: EquivalenceClassTable) -> tuple[tuple[str, ...], ...]:
    """Regex groups for `word` as plain tuples, for hot loops."""
    classes = table.classes
    return tuple(
        (text,) if class_id is None else classes[class_id]
        for text, class_id in spans(word, table)
    )


def segment(word: str, table: EquivalenceClassTable) -> Segmentation:
    return Segmentation(
        segments=tuple(
            Segment(text=text, class_id=class_id)
            for text, class_id in spans(nfc(word), table)
        )
    )


def expand(segmentation: Segmentation, table: EquivalenceClassTable) -> GraphemeRegex:
    """One group per segment: the whole class, or the literal segment."""
    groups: list[tuple[str, ...]] = []
    for seg in segmentation.segments:
        if seg.class_id is None:
            groups.append((seg.text,))
        else:
            groups.append(table.classes[seg.class_id])
    return GraphemeRegex(groups=tuple(groups))
