"""ParsedArgs: the raw argparse namespace, seeded by the CLI."""

from __future__ import annotations

from typing import Any

from diny import singleton
from pydantic import Field

from ...types.base import Frozen


@singleton
class ParsedArgs(Frozen):
    """Parsed CLI arguments as a flat dict.

    `command` is the top-level command; `subcommand` the second word for the
    `spell`, `hyph` and `thes` groups. `resource` is the config key the
    first of `operands` names when no flag or config file sets it.
    """

    values: dict[str, Any] = Field(default_factory=dict)
    command: str = ""
    subcommand: str = ""
    resource: str = ""
    operands: tuple[str, ...] = ()
