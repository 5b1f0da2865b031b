"""HyphParams: words, corpus and output path for `orthos hyph`."""

from __future__ import annotations

from pathlib import Path

from diny import singleton

from ...types.base import Frozen


@singleton
class HyphParams(Frozen):
    words: tuple[str, ...] = ()
    corpus: Path | None = None
    out: Path | None = None
