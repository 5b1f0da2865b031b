"""Shared Console and the named orthos theme.

Every other ui module prints through `console` (stdout) or `err_console`
(stderr). Use a named style instead of a literal color so the whole CLI can
be retuned in one place.
"""

from __future__ import annotations

from rich.console import Console
from rich.theme import Theme


THEME = Theme(
    {
        # Brand: section titles, commands to type, bars and spinners.
        "orthos.title": "bold bright_blue",
        "orthos.accent": "bright_blue",
        "orthos.cmd": "bright_blue",
        # Good news: word known, check passed, training finished.
        "orthos.ok": "green",
        # Look here, nothing broken: suggestions, form-level notes.
        "orthos.changed": "bright_yellow",
        # Act on this: unknown words, closure violations.
        "orthos.error": "red",
        "orthos.err": "bold red",
        # Names the tool tracks: words, lemmas, paths, sizes.
        "orthos.value": "cyan",
        "orthos.path": "cyan",
        # Chrome only, never content.
        "orthos.dim": "dim",
        "orthos.rule": "dim",
        "orthos.plain": "",
    }
)


# One Console per stream. A second stdout Console would fight the first over
# Live regions during spinners and progress bars.
console = Console(theme=THEME, highlight=False, soft_wrap=False)

err_console = Console(theme=THEME, highlight=False, soft_wrap=False, stderr=True)
