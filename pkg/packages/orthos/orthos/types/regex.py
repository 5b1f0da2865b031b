"""GraphemeRegex: a concatenation of alternations of literal graphemes.

The display notation is the one correction regexes are shown in:
`(πσ|ψ)(ι|η)χ`. A parenthesized group lists its alternatives separated by
`|`; a bare character outside parentheses is a group with one alternative.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from pydantic import field_validator

from ..utils.greek import nfc
from .base import Frozen


class GraphemeRegex(Frozen):
    groups: tuple[tuple[str, ...], ...] = ()

    @field_validator("groups")
    @classmethod
    def _check_groups(
        cls, groups: tuple[tuple[str, ...], ...]
    ) -> tuple[tuple[str, ...], ...]:
        cleaned: list[tuple[str, ...]] = []
        for i, group in enumerate(groups):
            if not group:
                msg = f"group {i} has no alternatives"
                raise ValueError(msg)
            if any(not alt for alt in group):
                msg = f"group {i} has an empty alternative"
                raise ValueError(msg)
            # Alternatives form a set; keep first-seen order for display.
            cleaned.append(tuple(dict.fromkeys(nfc(alt) for alt in group)))
        return tuple(cleaned)

    @classmethod
    def literal(cls, word: str) -> GraphemeRegex:
        """One singleton group per character of `word`."""
        return cls(groups=tuple((ch,) for ch in word))

    @classmethod
    def parse(cls, text: str) -> GraphemeRegex:
        """Parse the display notation. Whitespace is ignored."""
        groups: list[tuple[str, ...]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch == "(":
                end = text.find(")", i + 1)
                if end < 0:
                    msg = f"Unclosed group starting at offset {i} in {text!r}."
                    raise ValueError(msg)
                body = "".join(text[i + 1 : end].split())
                if "(" in body:
                    msg = f"Nested group at offset {i} in {text!r}."
                    raise ValueError(msg)
                groups.append(tuple(body.split("|")))
                i = end + 1
                continue
            if ch in ")|":
                msg = f"Unexpected {ch!r} at offset {i} in {text!r}."
                raise ValueError(msg)
            groups.append((ch,))
            i += 1
        return cls(groups=tuple(groups))

    def expansions(self) -> Iterator[str]:
        """Every string the regex matches, with repeats when alternatives collide."""
        for combo in itertools.product(*self.groups):
            yield "".join(combo)

    def __str__(self) -> str:
        parts: list[str] = []
        for group in self.groups:
            if len(group) == 1 and len(group[0]) == 1:
                parts.append(group[0])
            else:
                parts.append("(" + "|".join(group) + ")")
        return "".join(parts)
