"""CLI entry points."""

from ._cli import cli

__all__ = ["cli"]
