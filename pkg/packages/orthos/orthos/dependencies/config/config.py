"""Config: resource paths and defaults, layered from TOML files and flags.

Lowest to highest precedence:

1. built-in defaults
2. `[tool.orthos]` in `./pyproject.toml`
3. `[orthos]` in the file named by `--config` or `$ORTHOS_CONFIG`
4. command-line flags

Relative paths in a file resolve against that file's directory; relative
paths on the command line resolve against the working directory.
"""

from __future__ import annotations

import os
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

import tomlkit
from diny import provider, singleton
from pydantic import Field, ValidationError
from tomlkit.exceptions import TOMLKitError

from ...hyphenation.id3 import DEFAULT_MIN_PATTERNS
from ...spelling.suggest import DEFAULT_COMBINED_CAP
from ...types.base import Frozen
from ..params.output_format import OutputFormat
from ..params.parsed_args import ParsedArgs

CONFIG_ENV = "ORTHOS_CONFIG"

PATH_KEYS = ("lexicon", "classes", "model", "thesaurus", "homographs")

# Resources a command runs without; a leading operand names one only when it
# is an existing file with more operands after it.
OPTIONAL_RESOURCES = ("model",)

# Flag dests that override the config key of the same name.
_FLAG_KEYS = (
    *PATH_KEYS,
    "limit",
    "max_distance",
    "format",
    "extra_letters",
    "combined_cap",
    "min_patterns",
)


class ConfigError(ValueError):
    """Bad config file, bad value, or a required path that is missing."""

    def __init__(self, source: str, reason: str, *, fix: str = "") -> None:
        super().__init__(f"{source}: {reason}")
        self.source = source
        self.reason = reason
        self.fix = fix


class OrthosTable(Frozen, extra="forbid"):
    """`[tool.orthos]` in pyproject.toml, or `[orthos]` in a config file."""

    lexicon: str | None = None
    classes: str | None = None
    model: str | None = None
    thesaurus: str | None = None
    homographs: str | None = None
    limit: int | None = Field(default=None, ge=1)
    max_distance: int | None = Field(default=None, ge=0, alias="max-distance")
    format: OutputFormat | None = None
    extra_letters: str | None = Field(default=None, alias="extra-letters")
    combined_cap: int | None = Field(default=None, ge=0, alias="combined-cap")
    min_patterns: int | None = Field(default=None, ge=1, alias="min-patterns")


@singleton
class Config(Frozen):
    """Effective settings for one invocation. Unset paths are None."""

    lexicon: Path | None = None
    classes: Path | None = None
    model: Path | None = None
    thesaurus: Path | None = None
    homographs: Path | None = None
    limit: int = Field(default=10, ge=1)
    max_distance: int | None = Field(default=None, ge=0)
    format: OutputFormat = OutputFormat.TEXT
    extra_letters: str = ""
    combined_cap: int = Field(default=DEFAULT_COMBINED_CAP, ge=0)
    min_patterns: int = Field(default=DEFAULT_MIN_PATTERNS, ge=1)
    # The first operand named a resource rather than a word or file.
    operand_resource: bool = False
    # Files that contributed, lowest precedence first.
    sources: tuple[Path, ...] = ()

    @property
    def tsv(self) -> bool:
        return self.format is OutputFormat.TSV

    def require(self, key: str, flag: str) -> Path:
        """The configured path for `key`, which must name an existing file."""
        path = getattr(self, key)
        if path is None:
            raise ConfigError(
                "config",
                f"no {key} given",
                fix=f"pass {flag} PATH or set `{key}` under [tool.orthos] in pyproject.toml",
            )
        if not path.is_file():
            raise ConfigError(str(path), f"{key} file not found")
        return path


def _first_problem(e: ValidationError) -> str:
    err = e.errors()[0]
    where = ".".join(str(p) for p in err["loc"])
    return f"{where}: {err['msg']}" if where else err["msg"]


def read_table(path: Path, keys: tuple[str, ...]) -> dict[str, Any]:
    """Config values from the table at `keys` in a TOML file, paths resolved."""
    try:
        doc = tomlkit.loads(path.read_text(encoding="utf-8")).unwrap()
    except TOMLKitError as e:
        raise ConfigError(str(path), f"invalid TOML: {e}") from e
    table: Any = doc
    for key in keys:
        table = table.get(key, {}) if isinstance(table, dict) else None
    if not isinstance(table, dict):
        raise ConfigError(str(path), f"[{'.'.join(keys)}] is not a table")
    try:
        parsed = OrthosTable.model_validate(table)
    except ValidationError as e:
        raise ConfigError(str(path), _first_problem(e)) from e
    values = parsed.model_dump(exclude_none=True)
    for key in PATH_KEYS:
        if key in values:
            values[key] = path.parent / values[key]
    return values


def load_config(
    cwd: Path,
    *,
    explicit: Path | None = None,
    overrides: Mapping[str, Any] | None = None,
    resource: str = "",
    operands: Sequence[str] = (),
) -> Config:
    """Merge the config layers. `overrides` holds flag values; None means unset.

    When neither a flag nor a file sets `resource`, the first of `operands`
    names it, so `spell check words.txt doc.txt` needs no config.
    """
    overrides = overrides or {}
    values: dict[str, Any] = {}
    sources: list[Path] = []

    pyproject = cwd / "pyproject.toml"
    if pyproject.is_file():
        layer = read_table(pyproject, ("tool", "orthos"))
        if layer:
            values.update(layer)
            sources.append(pyproject)

    if explicit is not None:
        if not explicit.is_file():
            raise ConfigError(str(explicit), "config file not found")
        values.update(read_table(explicit, ("orthos",)))
        sources.append(explicit)

    operand_resource = False
    unset = overrides.get(resource) is None and resource not in values
    if resource and operands and unset:
        leading = cwd / operands[0]
        optional = resource in OPTIONAL_RESOURCES
        if not optional or (len(operands) > 1 and leading.is_file()):
            values[resource] = leading
            operand_resource = True

    for key, value in overrides.items():
        if value is None:
            continue
        values[key] = cwd / value if key in PATH_KEYS else value

    try:
        return Config.model_validate(
            {**values, "operand_resource": operand_resource, "sources": tuple(sources)}
        )
    except ValidationError as e:
        raise ConfigError("command line", _first_problem(e)) from e


@provider(Config)
def provide_config(args: ParsedArgs) -> Config:
    explicit = args.values.get("config") or os.environ.get(CONFIG_ENV) or None
    return load_config(
        Path.cwd(),
        explicit=Path(explicit) if explicit else None,
        overrides={key: args.values.get(key) for key in _FLAG_KEYS},
        resource=args.resource,
        operands=args.operands,
    )
