"""Hint: a closing line, optionally ending in a command the user can copy."""

from __future__ import annotations

import shlex
from collections.abc import Sequence

from rich.text import Text

from .console import console


def hint(text: str, command: Sequence[str] = ()) -> None:
    # Paths in `command` are shell-quoted so the line pastes as typed.
    line = Text(f"  {text}")
    if command:
        line.append(" ")
        line.append(shlex.join(command), style="orthos.cmd")
    console.print(line, soft_wrap=True)
