"""Badge: padded one-word status token.

The word carries the meaning, so a badge still reads correctly with color
stripped. Every kind is padded to the widest one so badge columns align.
"""

from __future__ import annotations

from rich.text import Text


_STYLES: dict[str, str] = {
    "known": "orthos.ok",
    "unknown": "orthos.error",
    "rules": "orthos.plain",
    "exception": "orthos.changed",
    "unsplit": "orthos.error",
    "note": "orthos.changed",
    "violation": "orthos.error",
    "ok": "orthos.ok",
}

_WIDTH: int = max(len(k) for k in _STYLES)


def _style(kind: str) -> str:
    if kind not in _STYLES:
        msg = f"Unknown badge kind: {kind!r}. Known: {sorted(_STYLES)}"
        raise ValueError(msg)
    return _STYLES[kind]


def badge(kind: str) -> Text:
    return Text(f"{kind:<{_WIDTH}}", style=_style(kind))


def badge_markup(kind: str) -> str:
    """Markup form for table cells, e.g. `"[orthos.error]unknown  [/]"`."""
    return f"[{_style(kind)}]{kind:<{_WIDTH}}[/]"
