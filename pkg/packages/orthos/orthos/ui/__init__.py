"""orthos.ui: the terminal design system.

Commands import from here and never from `rich` directly, so titles, rules,
tables and status words look the same across the CLI. Machine-readable
output bypasses this package and goes through plain `print()`.
"""

from rich.markup import escape

from .badge import badge, badge_markup
from .console import THEME, console, err_console
from .error import error
from .heading import banner, section
from .hint import hint
from .kv import kv
from .progress import format_seconds, progress_lines
from .spinner import spinner, spinner_done
from .table import make_table, print_table


__all__ = [
    "THEME",
    "badge",
    "badge_markup",
    "banner",
    "console",
    "err_console",
    "error",
    "escape",
    "format_seconds",
    "hint",
    "kv",
    "make_table",
    "print_table",
    "progress_lines",
    "section",
    "spinner",
    "spinner_done",
]
