"""CLI entry point and argument parsing."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from diny import inject, provider

from ..dependencies.config.config import PATH_KEYS, Config, ConfigError
from ..dependencies.params.bench_params import BenchParams
from ..dependencies.params.build_params import AutomatonKind, BuildParams
from ..dependencies.params.hyph_params import HyphParams
from ..dependencies.params.parsed_args import ParsedArgs
from ..dependencies.params.search_params import SearchParams
from ..dependencies.params.spell_params import SpellParams
from ..dependencies.params.thes_params import ThesParams
from ._help import OrthosArgumentParser


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps an unset flag out of the namespace, so a subcommand's
    # copy never clobbers a value given before the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        default=argparse.SUPPRESS,
        metavar="PATH",
        help="Read [orthos] settings from this TOML file (default: $ORTHOS_CONFIG).",
    )
    common.add_argument(
        "--format",
        choices=["text", "tsv"],
        default=argparse.SUPPRESS,
        help="Human text or TAB-separated lines (default: text).",
    )
    return common


def _add_lexicon_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--lexicon",
        metavar="PATH",
        help="Compiled MDAG or word list (default: `lexicon` from the config).",
    )


def _add_suggest_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--limit", type=int, help="Most suggestions per word (default: 10).")
    p.add_argument(
        "--max-distance",
        type=int,
        metavar="N",
        help="Drop suggestions further than N edits from the word.",
    )
    p.add_argument("--classes", metavar="PATH", help="Equivalence class table.")
    p.add_argument(
        "--combined-cap",
        type=int,
        metavar="N",
        help="Most single-edit candidates expanded through the class table (default: 500).",
    )


def build_parser() -> OrthosArgumentParser:
    common = _common_options()
    parser = OrthosArgumentParser(prog="orthos", parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=OrthosArgumentParser)

    # -- lexicon --
    build_p = sub.add_parser(
        "build", parents=[common], help="Compile a word list into an MDAG or TRIE file."
    )
    build_p.add_argument("wordlist", metavar="WORDLIST", help="UTF-8 word list, one per line.")
    build_p.add_argument("out", metavar="OUT", help="Where to write the compiled automaton.")
    build_p.add_argument(
        "--kind",
        choices=[k.value for k in AutomatonKind],
        default=AutomatonKind.MDAG.value,
        help="mdag (default) or trie with record id = rank in the sorted list.",
    )

    stats_p = sub.add_parser(
        "stats", parents=[common], help="Print node, transition and byte counts."
    )
    stats_p.add_argument("lexicon", metavar="LEXICON", nargs="?", help="Compiled file or word list.")

    words_p = sub.add_parser("words", parents=[common], help="List every stored word.")
    words_p.add_argument("lexicon", metavar="LEXICON", nargs="?", help="Compiled file or word list.")

    search_p = sub.add_parser(
        "search", parents=[common], help="Find words matching a grapheme pattern like (πσ|ψ)(ι|η)χ."
    )
    search_p.add_argument("pattern", metavar="PATTERN", help="Groups of |-separated graphemes.")
    search_p.add_argument("lexicon", metavar="LEXICON", nargs="?", help="Compiled file or word list.")

    bench_p = sub.add_parser(
        "bench", parents=[common], help="Measure lookup throughput and suggestion latency."
    )
    _add_lexicon_flag(bench_p)
    bench_p.add_argument("--queries", metavar="PATH", help="Words to look up (default: the lexicon).")
    bench_p.add_argument("--iterations", type=int, default=5, help="Timed passes (default: 5).")
    bench_p.add_argument(
        "--synthetic",
        type=int,
        metavar="N",
        help="Benchmark a generated lexicon of at least N forms instead.",
    )
    bench_p.add_argument(
        "--threads", type=int, default=1, help="Also measure aggregate throughput on N threads."
    )
    bench_p.add_argument(
        "--unknown",
        type=int,
        default=100,
        metavar="N",
        help="Unknown words to time suggestions for (default: 100).",
    )
    bench_p.add_argument("--seed", type=int, default=0, help="Seed for generated words.")

    # -- spell --
    spell_p = sub.add_parser("spell", parents=[common], help="Check text and suggest corrections.")
    spell_sub = spell_p.add_subparsers(
        dest="spell_command", parser_class=OrthosArgumentParser, required=True
    )
    check_p = spell_sub.add_parser(
        "check", parents=[common], help="Report unknown words in files (exit 1 if any)."
    )
    check_p.add_argument(
        "files",
        metavar="FILE",
        nargs="*",
        help="The lexicon unless --lexicon or the config names one, then text files; "
        "`-` or none reads stdin.",
    )
    _add_lexicon_flag(check_p)
    check_p.add_argument(
        "--extra-letters",
        metavar="CHARS",
        help="Characters, besides Greek letters, that belong inside words.",
    )
    suggest_p = spell_sub.add_parser(
        "suggest", parents=[common], help="Ranked corrections for each word."
    )
    suggest_p.add_argument(
        "words",
        metavar="WORD",
        nargs="+",
        help="The lexicon unless --lexicon or the config names one, then words to correct.",
    )
    _add_lexicon_flag(suggest_p)
    _add_suggest_flags(suggest_p)
    suggest_p.add_argument(
        "--why", action="store_true", help="Show the likely kind of error for each suggestion."
    )

    # -- hyph --
    hyph_p = sub.add_parser("hyph", parents=[common], help="Hyphenate words and train models.")
    hyph_sub = hyph_p.add_subparsers(
        dest="hyph_command", parser_class=OrthosArgumentParser, required=True
    )
    split_p = hyph_sub.add_parser("split", parents=[common], help="Hyphenate words.")
    split_p.add_argument(
        "words",
        metavar="WORD",
        nargs="+",
        help="Words, or text files whose words are hyphenated. A leading existing "
        "file followed by more operands is the model when none is configured.",
    )
    split_p.add_argument("--model", metavar="PATH", help="Trained model (default: rules only).")
    train_p = hyph_sub.add_parser(
        "train", parents=[common], help="Train one decision tree per ambiguous vowel pair."
    )
    train_p.add_argument("corpus", metavar="CORPUS", help="Hyphenated corpus, one form per line.")
    train_p.add_argument(
        "-o", "--out", metavar="PATH", required=True, help="Where to write the model."
    )
    train_p.add_argument(
        "--min-patterns",
        type=int,
        metavar="N",
        help="Stop splitting nodes with fewer patterns (default: 2).",
    )
    exc_p = hyph_sub.add_parser(
        "exceptions", parents=[common], help="Add corpus forms the trees miss to a model."
    )
    exc_p.add_argument("corpus", metavar="CORPUS", help="Hyphenated corpus, one form per line.")
    exc_p.add_argument(
        "model_operand", metavar="MODEL", nargs="?", help="Trained model to complete."
    )
    exc_p.add_argument("--model", metavar="PATH", help="Same as MODEL.")
    exc_p.add_argument(
        "-o", "--out", metavar="PATH", help="Where to write it (default: in place)."
    )
    exc_p.add_argument(
        "--homographs", metavar="PATH", help="Words kept unsplit (default: bundled list)."
    )
    hstats_p = hyph_sub.add_parser(
        "stats", parents=[common], help="How often each ambiguous vowel pair splits."
    )
    hstats_p.add_argument("corpus", metavar="CORPUS", help="Hyphenated corpus, one form per line.")

    # -- thes --
    thes_p = sub.add_parser("thes", parents=[common], help="Query and check a thesaurus.")
    thes_sub = thes_p.add_subparsers(
        dest="thes_command", parser_class=OrthosArgumentParser, required=True
    )
    lookup_p = thes_sub.add_parser(
        "lookup", parents=[common], help="Synonyms and antonyms for word forms."
    )
    lookup_p.add_argument(
        "words",
        metavar="WORD",
        nargs="+",
        help="The thesaurus unless --thesaurus or the config names one, then any "
        "inflected forms.",
    )
    tcheck_p = thes_sub.add_parser(
        "check", parents=[common], help="Report synonyms and antonyms that are not lemmas."
    )
    tstats_p = thes_sub.add_parser("stats", parents=[common], help="Lemma, form and index counts.")
    for p in (tcheck_p, tstats_p):
        p.add_argument(
            "thesaurus_operand", metavar="THESAURUS", nargs="?", help="Thesaurus JSON file."
        )
    for p in (lookup_p, tcheck_p, tstats_p):
        p.add_argument("--thesaurus", metavar="PATH", help="Thesaurus JSON file.")

    return parser


# Commands whose first operand may name a resource: operand dest, config key.
_LEADING_RESOURCE = {
    ("spell", "check"): ("files", "lexicon"),
    ("spell", "suggest"): ("words", "lexicon"),
    ("hyph", "split"): ("words", "model"),
    ("thes", "lookup"): ("words", "thesaurus"),
}


@provider(ParsedArgs)
def parse_args() -> ParsedArgs:
    ns = parse(sys.argv[1:])
    values = vars(ns)
    # A resource positional like `hyph exceptions CORPUS MODEL` acts as its flag.
    for key in PATH_KEYS:
        operand = values.pop(f"{key}_operand", None)
        if operand is not None and values.get(key) is None:
            values[key] = operand
    command = values.get("command") or ""
    subcommand = values.get(f"{command}_command") or ""
    dest, resource = _LEADING_RESOURCE.get((command, subcommand), ("", ""))
    return ParsedArgs(
        values=values,
        command=command,
        subcommand=subcommand,
        resource=resource,
        operands=tuple(values.get(dest) or ()) if dest else (),
    )


def parse(argv: list[str]) -> argparse.Namespace:
    return build_parser().parse_args(argv)


# --- Providers: derive focused singletons from ParsedArgs ---


@provider(BuildParams)
def provide_build_params(args: ParsedArgs) -> BuildParams:
    return BuildParams(
        wordlist=Path(args.values["wordlist"]),
        out=Path(args.values["out"]),
        kind=AutomatonKind(args.values.get("kind", "mdag")),
    )


@provider(SearchParams)
def provide_search_params(args: ParsedArgs) -> SearchParams:
    return SearchParams(pattern=args.values.get("pattern", "") or "")


@provider(BenchParams)
def provide_bench_params(args: ParsedArgs) -> BenchParams:
    queries = args.values.get("queries")
    return BenchParams(
        queries=Path(queries) if queries else None,
        iterations=args.values.get("iterations", 5),
        synthetic=args.values.get("synthetic"),
        threads=args.values.get("threads", 1),
        unknown=args.values.get("unknown", 100),
        seed=args.values.get("seed", 0),
    )


def _operands(args: ParsedArgs, config: Config, dest: str) -> tuple[str, ...]:
    """Positionals left once a leading resource operand is taken."""
    operands = tuple(args.values.get(dest) or ())
    return operands[1:] if config.operand_resource else operands


@provider(SpellParams)
def provide_spell_params(args: ParsedArgs, config: Config) -> SpellParams:
    return SpellParams(
        words=_operands(args, config, "words"),
        files=tuple(Path(f) for f in _operands(args, config, "files")),
        why=args.values.get("why", False),
    )


@provider(HyphParams)
def provide_hyph_params(args: ParsedArgs, config: Config) -> HyphParams:
    corpus = args.values.get("corpus")
    out = args.values.get("out")
    return HyphParams(
        words=_operands(args, config, "words"),
        corpus=Path(corpus) if corpus else None,
        out=Path(out) if out else None,
    )


@provider(ThesParams)
def provide_thes_params(args: ParsedArgs, config: Config) -> ThesParams:
    return ThesParams(words=_operands(args, config, "words"))


@inject
def cli(args: ParsedArgs) -> None:
    try:
        match args.command:
            case "build":
                from .build import cmd_build

                cmd_build()
            case "stats":
                from .stats import cmd_stats

                cmd_stats()
            case "words":
                from .words import cmd_words

                cmd_words()
            case "search":
                from .search import cmd_search

                cmd_search()
            case "bench":
                from .bench import cmd_bench

                cmd_bench()
            case "spell":
                from .spell import cmd_spell

                cmd_spell()
            case "hyph":
                from .hyph import cmd_hyph

                cmd_hyph()
            case "thes":
                from .thes import cmd_thes

                cmd_thes()
            case _:
                build_parser().print_help()
                sys.exit(2)
    except ConfigError as exc:
        from .. import ui

        ui.error(exc.reason, detail={"source": exc.source}, fixes=[exc.fix] if exc.fix else None)
        sys.exit(2)
    except (ValueError, OSError) as exc:
        from .. import ui

        ui.error(str(exc), detail=_detail(exc))
        sys.exit(2)


# Structured fields the library errors carry, in display order.
_DETAIL_FIELDS = ("path", "line", "location", "offset", "index", "filename")


def _detail(exc: BaseException) -> dict[str, str]:
    detail: dict[str, str] = {}
    for name in _DETAIL_FIELDS:
        value = getattr(exc, name, None)
        if value is not None and value != "":
            detail[name] = str(value)
    return detail
