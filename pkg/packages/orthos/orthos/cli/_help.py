"""ArgumentParser subclass that renders help and usage errors through orthos.ui.

The parser, not the formatter, is subclassed so the whole layout is ours:
banner for the root parser, usage line for subcommands, then a Commands
table and an Options table.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Any

from .. import ui


class OrthosArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that prints --help and errors via the ui design system."""

    def print_help(self, file: Any = None) -> None:
        if file is not None and file is not sys.stdout:
            super().print_help(file)
            return
        render_help(self)

    def error(self, message: str) -> Any:
        ui.error(_humanize_argparse_error(self, message), fixes=[f"{self.prog} --help"])
        sys.exit(2)


def render_help(parser: argparse.ArgumentParser) -> None:
    if parser.prog == "orthos":
        ui.banner(version())
        ui.console.print()
    else:
        usage = parser.format_usage().strip().removeprefix("usage: ")
        ui.console.print("usage:", style="orthos.dim", end=" ")
        ui.console.print(usage, markup=False)
        ui.console.print()
        if parser.description:
            ui.console.print(parser.description, markup=False)
            ui.console.print()

    sub = _find_subparsers(parser)
    if sub is not None:
        ui.section("Commands")
        rows = [[name, ui.escape(text)] for name, text in _subcommands(sub)]
        ui.print_table(["command", "description"], rows)
        ui.console.print()

    positionals = _positionals(parser)
    if positionals:
        ui.section("Arguments")
        rows = [[ui.escape(name), ui.escape(text)] for name, text in positionals]
        ui.print_table(["argument", "description"], rows)
        ui.console.print()

    options = _options(parser)
    if options:
        ui.section("Options")
        rows = [[ui.escape(flags), ui.escape(text)] for flags, text in options]
        ui.print_table(["flag", "description"], rows)
        ui.console.print()


def _find_subparsers(
    parser: argparse.ArgumentParser,
) -> argparse._SubParsersAction[Any] | None:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action
    return None


def _subcommands(sub: argparse._SubParsersAction[Any]) -> list[tuple[str, str]]:
    helps = {ca.dest: ca.help or "" for ca in sub._choices_actions}
    return [(name, helps.get(name, "")) for name in sub.choices]


def _positionals(parser: argparse.ArgumentParser) -> list[tuple[str, str]]:
    out: list[tuple[str, str]] = []
    for action in parser._actions:
        if action.option_strings or isinstance(action, argparse._SubParsersAction):
            continue
        if action.help is argparse.SUPPRESS:
            continue
        name = action.metavar if isinstance(action.metavar, str) else action.dest.upper()
        if action.nargs in ("?", "*"):
            name = f"[{name}]"
        out.append((name, action.help or ""))
    return out


def _options(parser: argparse.ArgumentParser) -> list[tuple[str, str]]:
    """Flag-style actions; `argparse.SUPPRESS` hides one."""
    out: list[tuple[str, str]] = []
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction) or not action.option_strings:
            continue
        if action.help is argparse.SUPPRESS:
            continue
        flags = ", ".join(action.option_strings)
        # store_true, store_const and --help take no value.
        if action.nargs != 0:
            flags = f"{flags} {_format_metavar(action)}"
        out.append((flags, action.help or ""))
    return out


_INVALID_CHOICE_RE = re.compile(
    r"^argument (?P<arg>[\w/-]+): invalid choice: ['\"](?P<bad>[^'\"]+)['\"]\s*"
    r"\(choose from (?P<choices>.+)\)$"
)


def _humanize_argparse_error(parser: argparse.ArgumentParser, message: str) -> str:
    """One-line summary for argparse's raw error; unknown shapes pass through."""
    m = _INVALID_CHOICE_RE.match(message)
    if m is not None:
        bad = m.group("bad")
        sub = _find_subparsers(parser)
        if sub is not None and sub.dest == m.group("arg"):
            return f"Unknown command {bad!r} for `{parser.prog}`."
        return f"{m.group('arg')}: {bad!r} is not a valid value."
    return message


def version() -> str:
    """Installed orthos version, or '?' when running from a bare checkout."""
    from importlib.metadata import PackageNotFoundError
    from importlib.metadata import version as dist_version

    try:
        return dist_version("orthos")
    except PackageNotFoundError:
        return "?"


def _format_metavar(action: argparse.Action) -> str:
    if action.choices is not None:
        return "{" + ",".join(str(c) for c in action.choices) + "}"
    if isinstance(action.metavar, tuple):
        return " ".join(action.metavar)
    if action.metavar is not None:
        return str(action.metavar)
    return action.dest.upper()
