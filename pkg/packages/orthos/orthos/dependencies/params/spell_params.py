"""SpellParams: words and files for `orthos spell`."""

from __future__ import annotations

from pathlib import Path

from diny import singleton

from ...types.base import Frozen


@singleton
class SpellParams(Frozen):
    words: tuple[str, ...] = ()
    # `-` reads standard input; no files also means standard input.
    files: tuple[Path, ...] = ()
    why: bool = False
