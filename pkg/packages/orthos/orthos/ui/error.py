"""ErrorBlock: `error:` summary, aligned detail rows and an optional Fix section.

For failures the user can act on (bad input files, missing paths, usage
mistakes). Always written to stderr.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from rich.markup import escape

from .console import err_console as console


def error(
    summary: str,
    *,
    detail: Mapping[str, str] | None = None,
    fixes: Sequence[str] | None = None,
) -> None:
    """Print an error block.

    `detail` renders as indented key/value pairs (e.g. `{"file": ..., "line":
    ...}`); `fixes` lists commands to try, under a `Fix` header.
    """
    console.print(f"[orthos.err]error:[/] {escape(summary)}", soft_wrap=True)
    if detail:
        w = max(len(k) for k in detail)
        for k, v in detail.items():
            console.print(f"  {k:<{w}}  {v}", markup=False, soft_wrap=True)
    if fixes:
        console.print()
        # ui.section writes to stdout; errors stay on stderr.
        console.print("Fix", style="orthos.title")
        console.print("---", style="orthos.rule")
        for cmd in fixes:
            console.print(f"  {cmd}", markup=False, soft_wrap=True)
