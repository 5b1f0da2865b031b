"""Tests for the pure parts of `orthos.ui`.

progress_lines is exercised through the CLI tests; here we pin wrapping
and alignment, where a slip silently misaligns output.
"""

from __future__ import annotations

import pytest
from rich.console import Console

from orthos.ui.badge import _STYLES, _WIDTH, badge, badge_markup


class TestBadge:
    def test_known_kinds_pad_to_widest(self) -> None:
        for kind in _STYLES:
            assert len(badge(kind).plain) == _WIDTH

    def test_unknown_kind_raises(self) -> None:
        with pytest.raises(ValueError, match="Unknown badge kind"):
            badge("nope")

    def test_markup_pads_and_styles(self) -> None:
        assert badge_markup("unknown") == f"[orthos.error]{'unknown':<{_WIDTH}}[/]"

    def test_markup_unknown_raises(self) -> None:
        with pytest.raises(ValueError, match="Unknown badge kind"):
            badge_markup("nope")


class TestKv:
    def test_aligns_keys_to_widest(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.kv import kv

        kv({"a": "1", "longer": "2", "mid": "3"})
        lines = [ln for ln in capsys.readouterr().out.splitlines() if ln.strip()]
        positions = [ln.index(str(i + 1)) for i, ln in enumerate(lines)]
        assert len(set(positions)) == 1

    def test_empty_is_noop(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.kv import kv

        kv({})
        assert capsys.readouterr().out == ""

    def test_sequences_join_and_empty_ones_drop(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        from orthos.ui.kv import kv

        kv({"synonyms": ("τσιμπάω", "κεντάω"), "antonyms": ()})
        assert capsys.readouterr().out.split() == ["synonyms", "τσιμπάω,", "κεντάω"]

    def test_long_value_wraps_under_its_column(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        import importlib

        kv_module = importlib.import_module("orthos.ui.kv")

        monkeypatch.setattr(kv_module, "console", Console(width=30))
        kv_module.kv({"example 1": "με αγκύλωσε ένα αγκάθι στο δάχτυλο το πρωί"})
        lines = [ln for ln in capsys.readouterr().out.splitlines() if ln.strip()]
        assert len(lines) > 1
        assert lines[0].startswith("  example 1  με ")
        indent = " " * len("  example 1  ")
        assert all(ln.startswith(indent) and ln[len(indent)] != " " for ln in lines[1:])

    def test_brackets_are_literal(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.kv import kv

        kv({"at": "[bold]x[/bold]"})
        assert "[bold]x[/bold]" in capsys.readouterr().out


class TestSection:
    def test_rule_matches_title(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.heading import section

        section("Trees")
        assert capsys.readouterr().out == "Trees\n-----\n"

    def test_labels_follow_title(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.heading import section

        section("θερμαίνω (1)", labels=("formal",))
        title, rule = capsys.readouterr().out.splitlines()
        assert title == "θερμαίνω (1)  [formal]"
        assert rule == "-" * len(title)


class TestHint:
    def test_command_is_shell_quoted(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.hint import hint

        hint("Next:", ["orthos", "hyph", "exceptions", "my corpus.txt", "m.json"])
        assert capsys.readouterr().out == "  Next: orthos hyph exceptions 'my corpus.txt' m.json\n"

    def test_text_only(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.hint import hint

        hint("Closed: [1] resolves.")
        assert capsys.readouterr().out == "  Closed: [1] resolves.\n"


class TestSpinner:
    def test_label_then_done_line(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.spinner import spinner, spinner_done

        with spinner("Compiling 6 words into a MDAG"):
            pass
        spinner_done("Wrote lexicon.mdag", 12.0)
        assert capsys.readouterr().out.splitlines()[-1] == "[ok] Wrote lexicon.mdag  12ms"


class TestErrorBlock:
    def test_goes_to_stderr(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.error import error

        error("bad input")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error: bad input" in captured.err

    def test_aligns_detail_keys(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.error import error

        error("summary", detail={"short": "a", "longer-key": "b"})
        lines = [ln for ln in capsys.readouterr().err.splitlines() if ln.strip()]
        assert lines[1].rindex("a") == lines[2].rindex("b")

    def test_detail_brackets_are_literal(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.error import error

        error("summary", detail={"at": "[3].forms"})
        assert "[3].forms" in capsys.readouterr().err

    def test_fixes_under_section_header(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.error import error

        error("x", fixes=["one", "two"])
        out = capsys.readouterr().err
        assert "Fix\n---" in out
        cmd_lines = [ln for ln in out.splitlines() if ln.startswith("  ")]
        assert "  one" in cmd_lines
        assert "  two" in cmd_lines


class TestTable:
    def test_tsv_rows(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.table import print_table

        print_table(["word", "distance"], [["ΨΥΧΗ", "4"], ["ΨΥΧΕΙ", "5"]], tsv=True)
        assert capsys.readouterr().out == "ΨΥΧΗ\t4\nΨΥΧΕΙ\t5\n"

    def test_tsv_strips_markup(self, capsys: pytest.CaptureFixture[str]) -> None:
        from orthos.ui.table import print_table

        print_table(["word", "status"], [["λέξη", badge_markup("known")]], tsv=True)
        assert capsys.readouterr().out == "λέξη\tknown\n"


class TestFormatSeconds:
    @pytest.mark.parametrize(
        ("seconds", "label"),
        [(0.000057, "57us"), (0.009, "9ms"), (1.25, "1.2s")],
    )
    def test_units(self, seconds: float, label: str) -> None:
        from orthos.ui.progress import format_seconds

        assert format_seconds(seconds) == label
