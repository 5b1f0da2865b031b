"""Headings: the banner over root help and the titled rule over each block."""

from __future__ import annotations

from collections.abc import Sequence

from rich.text import Text

from .console import console

TAGLINE = "Proofing tools for Greek"


def banner(version: str) -> None:
    console.print(f"[orthos.title]orthos[/] [orthos.value]{version}[/] [orthos.dim]/[/] {TAGLINE}")


def section(title: str, labels: Sequence[str] = ()) -> None:
    """Title, then dim usage labels such as `[formal, medical]`, over a hyphen rule.

    The title is literal text, so lemma headwords and brackets need no escaping.
    The rule matches the heading's cell width, not its code point count.
    """
    heading = Text(title, style="orthos.title")
    if labels:
        heading.append(f"  [{', '.join(labels)}]", style="orthos.dim")
    console.print(heading)
    console.print("-" * heading.cell_len, style="orthos.rule")
