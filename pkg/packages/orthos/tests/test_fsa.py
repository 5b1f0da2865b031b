from __future__ import annotations

import itertools
import random
import struct
import unicodedata

import pytest

from orthos.fsa import (
    Mdag,
    MdagBuilder,
    automaton_stats,
    build_mdag,
    build_trie,
    deserialize,
    deserialize_mdag,
    deserialize_trie,
    regex_search,
    serialize,
)
from orthos.fsa.automaton import Automaton
from orthos.fsa.errors import (
    BadMagicError,
    CorruptPayloadError,
    DuplicateKeyError,
    EmptyKeyError,
    RecordRangeError,
    TruncatedPayloadError,
    UnsortedInputError,
    VersionMismatchError,
)
from orthos.types.regex import GraphemeRegex

from conftest import ISOMETRY_WORDS


def _random_words(rng: random.Random, alphabet: str, count: int, max_len: int) -> list[str]:
    words = {
        "".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))
        for _ in range(count)
    }
    return sorted(words)


def _right_language(a: Automaton, state: int) -> frozenset[str]:
    out: set[str] = set()
    stack = [(state, "")]
    while stack:
        s, prefix = stack.pop()
        if a.final[s]:
            out.add(prefix)
        for label, target in a.edges[s].items():
            stack.append((target, prefix + label))
    return frozenset(out)


def _minimal_state_count(words: list[str]) -> int:
    """Distinct right languages over all prefixes: the trie-then-merge size."""
    prefixes = {w[:i] for w in words for i in range(len(w) + 1)} | {""}
    return len(
        {frozenset(w[len(p) :] for w in words if w.startswith(p)) for p in prefixes}
    )


def _assert_is_quotient(a: Automaton, words: list[str]) -> None:
    """Every state has a distinct right language and edges follow derivatives."""
    languages = [_right_language(a, s) for s in range(a.node_count)]
    assert languages[0] == frozenset(words)
    assert len(set(languages)) == a.node_count
    for s, edges in enumerate(a.edges):
        for label, target in edges.items():
            derivative = {x[1:] for x in languages[s] if x[:1] == label}
            assert languages[target] == derivative


def _is_acyclic(a: Automaton) -> bool:
    indegree = [0] * a.node_count
    for edges in a.edges:
        for target in edges.values():
            indegree[target] += 1
    queue = [s for s, d in enumerate(indegree) if d == 0]
    seen = 0
    while queue:
        s = queue.pop()
        seen += 1
        for target in a.edges[s].values():
            indegree[target] -= 1
            if indegree[target] == 0:
                queue.append(target)
    return seen == a.node_count


class TestBuildMdag:
    def test_isometry_has_two_terminals(self, isometry_mdag: Mdag) -> None:
        assert isometry_mdag.terminal_count == 2

    def test_isometry_is_strictly_minimal(self, isometry_mdag: Mdag) -> None:
        # Strict minimization gives 13/14, inside the 14/15 the caption prints.
        assert isometry_mdag.node_count == 13
        assert isometry_mdag.transition_count == 14
        _assert_is_quotient(isometry_mdag, ISOMETRY_WORDS)

    def test_empty_list(self) -> None:
        a = build_mdag([])
        assert a.node_count == 1
        assert a.transition_count == 0
        assert not a.final[0]
        assert a.words() == []

    def test_single_word_is_a_chain(self) -> None:
        a = build_mdag(["λόγος"])
        assert a.node_count == 6
        assert a.transition_count == 5
        assert a.terminal_count == 1

    def test_rejects_unsorted_input(self) -> None:
        with pytest.raises(UnsortedInputError) as exc:
            build_mdag(["βάση", "άλφα"])
        assert exc.value.previous == "βάση"
        assert exc.value.word == "άλφα"

    def test_rejects_duplicates(self) -> None:
        with pytest.raises(UnsortedInputError, match="Duplicate"):
            build_mdag(["α", "β", "β"])

    def test_rejects_empty_word(self) -> None:
        with pytest.raises(EmptyKeyError):
            build_mdag(["", "α"])

    def test_normalizes_decomposed_input(self) -> None:
        decomposed = unicodedata.normalize("NFD", "θέλω")
        a = build_mdag([decomposed])
        assert a.contains("θέλω")
        assert a.node_count == 5

    def test_builder_closed_after_finish(self) -> None:
        builder = MdagBuilder()
        builder.add("α")
        builder.finish()
        with pytest.raises(RuntimeError):
            builder.add("β")

    def test_labels_sorted_and_graph_acyclic(self) -> None:
        rng = random.Random(7)
        words = _random_words(rng, "αβγδεζ", 300, 7)
        a = build_mdag(words)
        for edges in a.edges:
            labels = list(edges)
            assert labels == sorted(labels)
        assert _is_acyclic(a)


class TestMinimality:
    def test_exhaustive_two_letter_universe(self) -> None:
        universe = ["a", "b", "aa", "ab", "ba", "bb"]
        for size in range(len(universe) + 1):
            for subset in itertools.combinations(universe, size):
                words = sorted(subset)
                a = build_mdag(words)
                assert a.node_count == _minimal_state_count(words), words
                _assert_is_quotient(a, words)

    def test_random_sets_over_four_letters(self) -> None:
        rng = random.Random(20240601)
        for _ in range(500):
            words = _random_words(rng, "abcd", rng.randint(0, 8), 4)
            a = build_mdag(words)
            assert a.node_count == _minimal_state_count(words), words
            _assert_is_quotient(a, words)

    def test_never_larger_than_trie(self) -> None:
        rng = random.Random(3)
        for _ in range(100):
            words = _random_words(rng, "abcde", 30, 6)
            mdag = build_mdag(words)
            trie = build_trie((w, i) for i, w in enumerate(words))
            assert mdag.node_count <= trie.node_count
            assert mdag.terminal_count <= trie.terminal_count


class TestContains:
    def test_stored_word(self, isometry_mdag: Mdag) -> None:
        assert isometry_mdag.contains("ισομοιρίες")

    def test_proper_prefix(self, isometry_mdag: Mdag) -> None:
        assert not isometry_mdag.contains("ισομ")

    def test_empty_string(self, isometry_mdag: Mdag) -> None:
        assert not isometry_mdag.contains("")

    def test_agrees_with_enumeration(self) -> None:
        rng = random.Random(11)
        words = _random_words(rng, "αβγδε", 400, 6)
        a = build_mdag(words)
        stored = set(a.words())
        for w in words:
            assert a.contains(w)
        for _ in range(1000):
            query = "".join(rng.choice("αβγδεζ") for _ in range(rng.randint(1, 7)))
            assert a.contains(query) == (query in stored)

    def test_lookup_cost_is_word_length(self) -> None:
        rng = random.Random(5)
        words = _random_words(rng, "abcdef", 2000, 10)
        a = build_mdag(words)
        for w in words[:200]:
            assert len(a.trace(w)) == len(w)
        for _ in range(200):
            query = "".join(rng.choice("abcdefg") for _ in range(rng.randint(1, 10)))
            if not a.contains(query):
                assert len(a.trace(query)) <= len(query)


class TestEnumerate:
    def test_isometry_sorted(self, isometry_mdag: Mdag) -> None:
        assert isometry_mdag.words() == sorted(ISOMETRY_WORDS)

    def test_round_trip_identity(self) -> None:
        rng = random.Random(42)
        for _ in range(50):
            words = _random_words(rng, "αάβγεέ", rng.randint(0, 60), 6)
            assert build_mdag(words).words() == words

    def test_alphabet(self, isometry_mdag: Mdag) -> None:
        assert isometry_mdag.alphabet == frozenset("".join(ISOMETRY_WORDS))


class TestRegexSearch:
    def test_psyche_example(self) -> None:
        a = build_mdag(["ΨΑΡΙ", "ΨΥΧΕΙ", "ΨΥΧΗ", "ΨΥΧΟΙ"])
        regex = GraphemeRegex.parse("(ΠΣ|Ψ)(Ι|Η|Υ|ΕΙ|ΟΙ)Χ(Ι|Η|Υ|ΕΙ|ΟΙ)")
        assert regex_search(a, regex) == ["ΨΥΧΕΙ", "ΨΥΧΗ", "ΨΥΧΟΙ"]

    def test_literal_regex(self, isometry_mdag: Mdag) -> None:
        for w in ["ισομετρία", "ισομετρ", "ισομετρίαα"]:
            expected = [w] if isometry_mdag.contains(w) else []
            assert regex_search(isometry_mdag, GraphemeRegex.literal(w)) == expected

    def test_colliding_alternatives_reported_once(self) -> None:
        a = build_mdag(["αια"])
        regex = GraphemeRegex.parse("(α|αι)(ια|α)")
        assert regex_search(a, regex) == ["αια"]

    def test_matches_expansion_oracle(self) -> None:
        rng = random.Random(99)
        alphabet = "abcd"
        for _ in range(200):
            words = _random_words(rng, alphabet, 40, 5)
            a = build_mdag(words)
            groups = []
            for _ in range(rng.randint(1, 4)):
                alts = {
                    "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 2)))
                    for _ in range(rng.randint(1, 3))
                }
                groups.append(tuple(sorted(alts)))
            regex = GraphemeRegex(groups=tuple(groups))
            stored = set(words)
            oracle = sorted({x for x in regex.expansions() if x in stored})
            assert regex_search(a, regex) == oracle


class TestGraphemeRegex:
    def test_parse_and_render(self) -> None:
        regex = GraphemeRegex.parse("(πσ | ψ)(ι|η)χ")
        assert regex.groups == (("πσ", "ψ"), ("ι", "η"), ("χ",))
        assert str(regex) == "(πσ|ψ)(ι|η)χ"

    def test_render_keeps_multichar_singletons_grouped(self) -> None:
        regex = GraphemeRegex(groups=(("ου",), ("ς",)))
        assert str(regex) == "(ου)ς"
        assert GraphemeRegex.parse(str(regex)) == regex

    def test_rejects_empty_alternative(self) -> None:
        with pytest.raises(ValueError):
            GraphemeRegex.parse("(α||β)")

    def test_rejects_unclosed_group(self) -> None:
        with pytest.raises(ValueError, match="Unclosed"):
            GraphemeRegex.parse("(αβ")


class TestBuildTrie:
    def test_isometry_counts(self) -> None:
        t = build_trie((w, i) for i, w in enumerate(ISOMETRY_WORDS, start=1))
        s = automaton_stats(t)
        assert (s.nodes, s.transitions, s.terminals) == (21, 20, 6)

    def test_empty_entries(self) -> None:
        t = build_trie([])
        assert t.node_count == 1
        assert t.items() == []

    def test_node_count_is_prefix_count(self) -> None:
        rng = random.Random(17)
        for _ in range(50):
            words = _random_words(rng, "abcde", 40, 6)
            t = build_trie((w, i) for i, w in enumerate(words))
            prefixes = {w[:i] for w in words for i in range(1, len(w) + 1)}
            assert t.node_count == 1 + len(prefixes)

    def test_tree_shaped(self) -> None:
        t = build_trie((w, i) for i, w in enumerate(ISOMETRY_WORDS))
        parents = [0] * t.node_count
        for edges in t.edges:
            for target in edges.values():
                parents[target] += 1
        assert parents[0] == 0
        assert all(p == 1 for p in parents[1:])

    def test_rejects_duplicate_key(self) -> None:
        with pytest.raises(DuplicateKeyError) as exc:
            build_trie([("λέξη", 1), ("λέξη", 2)])
        assert exc.value.key == "λέξη"

    def test_rejects_empty_key(self) -> None:
        with pytest.raises(EmptyKeyError):
            build_trie([("", 1)])

    def test_rejects_negative_record(self) -> None:
        with pytest.raises(RecordRangeError):
            build_trie([("α", -1)])

    def test_items_sorted(self) -> None:
        t = build_trie([("γ", 3), ("α", 1), ("αβ", 2)])
        assert t.items() == [("α", 1), ("αβ", 2), ("γ", 3)]


class TestTrieLookup:
    def test_stored_key(self) -> None:
        t = build_trie((w, i) for i, w in enumerate(ISOMETRY_WORDS, start=1))
        assert t.lookup("ισομοιρία") == 4

    def test_unstored_key(self) -> None:
        t = build_trie((w, i) for i, w in enumerate(ISOMETRY_WORDS, start=1))
        assert t.lookup("ισομ") is None
        assert t.lookup("") is None

    def test_agrees_with_linear_scan(self) -> None:
        rng = random.Random(23)
        words = _random_words(rng, "αβγδ", 300, 6)
        entries = [(w, rng.randrange(2**40)) for w in words]
        t = build_trie(entries)
        for key, record in entries:
            assert t.lookup(key) == record
        table = dict(entries)
        for _ in range(1000):
            query = "".join(rng.choice("αβγδε") for _ in range(rng.randint(1, 7)))
            assert t.lookup(query) == table.get(query)


class TestStats:
    def test_isometry_mdag(self, isometry_mdag: Mdag) -> None:
        s = automaton_stats(isometry_mdag)
        assert s.terminals == 2
        assert s.nodes <= 14
        assert s.transitions <= 15
        assert s.line() == "nodes=13 transitions=14 terminals=2 bytes=189"

    def test_isometry_trie_bytes(self) -> None:
        t = build_trie((w, i) for i, w in enumerate(ISOMETRY_WORDS, start=1))
        assert automaton_stats(t).bytes == 325

    def test_empty(self) -> None:
        s = automaton_stats(build_mdag([]))
        assert (s.nodes, s.transitions, s.terminals) == (1, 0, 0)

    def test_size_matches_encoding(self) -> None:
        rng = random.Random(1)
        words = _random_words(rng, "αβγδεζη", 200, 8)
        for a in (build_mdag(words), build_trie((w, i) for i, w in enumerate(words))):
            assert automaton_stats(a).bytes == len(serialize(a))


class TestCodec:
    def test_round_trip_isometry(self, isometry_mdag: Mdag) -> None:
        back = deserialize_mdag(serialize(isometry_mdag))
        assert back.words() == isometry_mdag.words()
        assert automaton_stats(back) == automaton_stats(isometry_mdag)

    def test_round_trip_trie_records(self) -> None:
        t = build_trie([("α", 2**63), ("αβ", 0), ("γ", 7)])
        back = deserialize_trie(serialize(t))
        assert back.items() == t.items()

    def test_random_round_trips(self) -> None:
        rng = random.Random(100)
        for _ in range(100):
            words = _random_words(rng, "αβγδεάέ", rng.randint(0, 50), 6)
            a = build_mdag(words)
            back = deserialize(serialize(a))
            assert isinstance(back, Mdag)
            assert set(back.words()) == set(words)
            assert automaton_stats(back) == automaton_stats(a)

    def test_empty_input(self) -> None:
        with pytest.raises(BadMagicError):
            deserialize(b"")

    def test_bad_magic(self) -> None:
        with pytest.raises(BadMagicError):
            deserialize(b"XXXX\x01\x00\x00\x00\x01\x00\x00\x00")

    def test_version_mismatch(self, isometry_mdag: Mdag) -> None:
        data = bytearray(serialize(isometry_mdag))
        data[4] = 9
        with pytest.raises(VersionMismatchError) as exc:
            deserialize(bytes(data))
        assert exc.value.found == 9

    def test_truncated(self, isometry_mdag: Mdag) -> None:
        data = serialize(isometry_mdag)
        with pytest.raises(TruncatedPayloadError):
            deserialize(data[:-3])
        with pytest.raises(TruncatedPayloadError):
            deserialize(data[:8])

    def test_trailing_bytes(self, isometry_mdag: Mdag) -> None:
        with pytest.raises(CorruptPayloadError, match="trailing"):
            deserialize(serialize(isometry_mdag) + b"\x00")

    def test_target_out_of_range(self) -> None:
        data = bytearray(serialize(build_mdag(["α"])))
        # First transition target of node 0 sits after header, node head, label.
        data[12 + 5 + 4] = 0xFF
        with pytest.raises(CorruptPayloadError, match="out of range"):
            deserialize(bytes(data))

    def test_wrong_kind(self, isometry_mdag: Mdag) -> None:
        with pytest.raises(BadMagicError):
            deserialize_trie(serialize(isometry_mdag))

    def test_mdag_cycle(self) -> None:
        data = (
            struct.pack("<4sII", b"MDG1", 1, 1)
            + struct.pack("<BI", 1, 1)
            + struct.pack("<II", ord("α"), 0)
        )
        with pytest.raises(CorruptPayloadError, match="cycle") as exc:
            deserialize(data)
        assert exc.value.offset == 12

    def test_mdag_shared_states_accepted(self) -> None:
        # Both root edges lead to the same terminal state.
        data = (
            struct.pack("<4sII", b"MDG1", 1, 2)
            + struct.pack("<BI", 0, 2)
            + struct.pack("<II", ord("α"), 1)
            + struct.pack("<II", ord("β"), 1)
            + struct.pack("<BI", 1, 0)
        )
        assert deserialize_mdag(data).words() == ["α", "β"]

    def test_trie_state_with_two_parents(self) -> None:
        data = (
            struct.pack("<4sII", b"TRI1", 1, 2)
            + struct.pack("<BI", 0, 2)
            + struct.pack("<II", ord("α"), 1)
            + struct.pack("<II", ord("β"), 1)
            + struct.pack("<BI", 1, 0)
            + struct.pack("<Q", 4)
        )
        with pytest.raises(CorruptPayloadError, match="second parent") as exc:
            deserialize(data)
        assert exc.value.offset == 12 + 5 + 8

    def test_trie_edge_back_to_root(self) -> None:
        data = (
            struct.pack("<4sII", b"TRI1", 1, 1)
            + struct.pack("<BI", 1, 1)
            + struct.pack("<II", ord("α"), 0)
            + struct.pack("<Q", 0)
        )
        with pytest.raises(CorruptPayloadError, match="second parent"):
            deserialize(data)

    def test_trie_orphan_state(self) -> None:
        data = (
            struct.pack("<4sII", b"TRI1", 1, 2)
            + struct.pack("<BI", 0, 0)
            + struct.pack("<BI", 1, 0)
            + struct.pack("<Q", 0)
        )
        with pytest.raises(CorruptPayloadError, match="no parent"):
            deserialize(data)
