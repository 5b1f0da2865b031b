"""OutputFormat: human text or TAB-separated lines."""

from __future__ import annotations

from enum import Enum


class OutputFormat(Enum):
    TEXT = "text"
    TSV = "tsv"
