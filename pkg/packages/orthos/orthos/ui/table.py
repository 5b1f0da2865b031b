"""Table: box-less, dim upper-case headers, space-padded columns.

`print_table(..., tsv=True)` drops the styling and writes one
TAB-separated line per row for scripts.
"""

from __future__ import annotations

from collections.abc import Iterable

from rich.table import Table
from rich.text import Text

from .console import console


def make_table(*headers: str) -> Table:
    t = Table(
        box=None,
        pad_edge=False,
        show_edge=False,
        header_style="orthos.dim",
        padding=(0, 2),
    )
    for h in headers:
        t.add_column(h.upper())
    return t


def print_table(
    headers: Iterable[str],
    rows: Iterable[Iterable[str]],
    *,
    tsv: bool = False,
) -> None:
    """Build and print a table. Cells may hold Rich markup unless `tsv`."""
    if tsv:
        for row in rows:
            print("\t".join(Text.from_markup(cell).plain.strip() for cell in row))
        return
    t = make_table(*headers)
    for row in rows:
        t.add_row(*list(row))
    console.print(t)
