"""ProgressLine: ten-cell ASCII bar (`|##---|`), label and elapsed time.

One task per unit of measured work; `bench` stacks one line per phase.
ASCII glyphs keep the bars legible in CI logs.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from typing import TYPE_CHECKING

from rich.progress import Progress, ProgressColumn, TextColumn
from rich.text import Text

from .console import console

if TYPE_CHECKING:
    from rich.progress import Task


class _AsciiBarColumn(ProgressColumn):
    # Pipes live in the same column as the bar; Rich puts a space between columns.

    def __init__(self, bar_width: int = 10) -> None:
        super().__init__()
        self.bar_width = bar_width

    def render(self, task: Task) -> Text:
        width = self.bar_width
        total = task.total or 0
        filled = 0 if total <= 0 else max(0, min(width, int(width * (task.completed / total))))
        bar = Text("  |")
        bar.append("#" * filled, style="orthos.accent")
        bar.append("-" * (width - filled), style="orthos.dim")
        bar.append("|")
        return bar


class _SmallElapsedColumn(ProgressColumn):
    """Elapsed time as `57us`, `9ms` or `1.2s`."""

    def render(self, task: Task) -> Text:
        elapsed = task.finished_time if task.finished else task.elapsed
        if elapsed is None:
            return Text("--")
        return Text(format_seconds(elapsed))


def format_seconds(seconds: float) -> str:
    if seconds < 1e-3:
        return f"{seconds * 1e6:.0f}us"
    if seconds < 1:
        return f"{seconds * 1e3:.0f}ms"
    return f"{seconds:.1f}s"


@contextmanager
def progress_lines() -> Iterator[Progress]:
    """Stacked progress lines sharing one Live region.

    Use `add_task` and `advance` as `rich.progress.Progress` documents.
    """
    columns: list[ProgressColumn] = [
        _AsciiBarColumn(bar_width=10),
        TextColumn("{task.description}"),
        _SmallElapsedColumn(),
    ]
    with Progress(*columns, console=console, transient=False) as p:
        yield p
