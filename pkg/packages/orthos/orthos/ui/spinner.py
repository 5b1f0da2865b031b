"""Spinner: ASCII `| / - \\` cycle for work with no measurable progress.

Compilation and training use it. Only one Live region may be active at a
time, so never nest a spinner inside `progress_lines`.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager

from rich.spinner import SPINNERS
from rich.status import Status

from .console import console


SPINNERS["orthos"] = {
    "interval": 80,
    "frames": ["|", "/", "-", "\\"],
}


@contextmanager
def spinner(label: str) -> Iterator[Status]:
    """Spin until the block exits. Yields the `Status` for live relabelling."""
    with console.status(label, spinner="orthos", spinner_style="orthos.accent") as status:
        yield status


def spinner_done(label: str, elapsed_ms: float | None = None) -> None:
    """The `[ok]` line that replaces a finished spinner."""
    if elapsed_ms is None:
        console.print(rf"[orthos.ok]\[ok][/] {label}")
        return
    console.print(rf"[orthos.ok]\[ok][/] {label}  {elapsed_ms:.0f}ms")
