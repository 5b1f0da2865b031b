"""KV: labels in one column, values wrapping in the next.

A sequence value is joined with commas and an empty one drops its row, so
`thes lookup` can pass a meaning's antonyms without checking for them.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from rich.padding import Padding
from rich.table import Table
from rich.text import Text

from .console import console

Value = str | Sequence[str]


def kv(pairs: Mapping[str, Value]) -> None:
    rows = [
        (key, value if isinstance(value, str) else ", ".join(value))
        for key, value in pairs.items()
        if isinstance(value, str) or value
    ]
    if not rows:
        return
    grid = Table.grid(padding=(0, 2, 0, 0))
    grid.add_column(no_wrap=True)
    grid.add_column()
    for key, value in rows:
        grid.add_row(Text(key), Text(value))
    console.print(Padding(grid, (0, 0, 0, 2)))
