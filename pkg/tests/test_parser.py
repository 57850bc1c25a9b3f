"""Theory-file parsing: documents, diagnostics, limits and malformed input."""

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from theorykit.core.errors import TheorySyntaxError
from theorykit.dsl.parser import MAX_NUMERAL_LENGTH, parse_formula, parse_theory, parse_theory_file
from theorykit.models.diagnostic import Severity
from theorykit.models.formula import format_formula
from theorykit.models.language import CarrierKind

BOOL_HEADER = "type T = bool\natom P, Q : T\n"


def messages(result):
    return [d.message for d in result.errors]


def assert_located(result):
    for d in result.diagnostics:
        if d.is_error:
            assert d.line is not None and d.column is not None, str(d)


class TestDocuments:
    def test_case_study(self, casestudy):
        lang = casestudy.language
        assert [u.name for u in lang.universes] == ["Scale", "Boolean", "Collaboration"]
        assert [u.kind for u in lang.universes] == [CarrierKind.REAL, CarrierKind.BOOLEAN, CarrierKind.ENUM]
        assert [v.name for v in lang.variables] == ["OS", "RD", "SI", "CM", "CL"]
        assert casestudy.labels() == ["P1", "P2", "P6", "P10"]
        assert format_formula(casestudy.hypothesis("P2").formula) == "CL > (Eventual, Low) -> !(SI = True)"

    def test_explicit_lists_override_defaults(self, casestudy):
        lang = casestudy.language
        assert [r.name for r in lang.relations_of(0)] == ["=", ">"]
        assert lang.functions_of(0) == []
        assert lang.universe(2).greater(("Daily", "High"), ("Eventual", "Low"))

    def test_constructs(self, casestudy):
        team, silo, interaction = casestudy.constructs
        assert team.multidimensional and not silo.multidimensional
        assert [d.variable for d in team.dimensions] == ["OS", "RD"]
        assert team.dimensions[0].note == "0 is null sharing, 10 is full sharing"
        assert interaction.derived_from == ("Collaboration", "Communication")
        assert interaction.dimensions[0].shape == "collection"

    def test_locations(self, casestudy):
        assert casestudy.location("Scale", "type") == (4, 6)
        assert casestudy.location("P1")[1] == 6
        assert casestudy.location("missing") is None

    def test_propositional_file(self, implications):
        assert implications.labels() == ["h1", "h2", "h3", "h4"]
        assert format_formula(implications.hypothesis("h4").formula) == "!S -> !P"

    def test_empty_file(self, fixtures_dir):
        result = parse_theory_file(fixtures_dir / "empty.thy")
        assert result.ok
        assert result.document.hypotheses == ()

    def test_dimensionality_mismatch_is_a_warning(self):
        text = "type T = bool\nvar x : T\nconstruct C { dimensionality multi; dim x from data shape scalar; }\n"
        result = parse_theory(text)
        assert result.ok
        [warning] = result.diagnostics
        assert warning.severity is Severity.WARNING
        assert result.document.constructs[0].multidimensional


class TestDiagnostics:
    def test_broken_file(self, fixtures_dir):
        result = parse_theory_file(fixtures_dir / "broken.thy")
        assert result.document is None
        located = [(d.line, d.column) for d in result.errors]
        assert located == [(3, 10), (4, 15), (6, 1), (6, 20)]
        assert messages(result)[0] == "unknown type Flag"
        assert messages(result)[1].startswith("type mismatch")
        assert messages(result)[2] == "expected a term, found 'prop'"
        assert messages(result)[3] == "unknown variable SI2"

    def test_duplicate_hypothesis(self):
        result = parse_theory(BOOL_HEADER + "prop h: P\nprop h: Q\n")
        assert messages(result) == ["duplicate hypothesis identifier h"]
        assert result.errors[0].line == 4

    def test_keyword_as_name(self):
        result = parse_theory("type T = bool\nvar type : T\n")
        assert messages(result)[0] == "keyword 'type' cannot be used as a variable name"

    def test_order_relation_needs_an_order(self):
        result = parse_theory("type E = {a, b} relations { =, > }\n")
        assert not result.ok
        assert result.errors[0].line == 1

    def test_unknown_character(self):
        result = parse_theory(BOOL_HEADER + "prop h: P $ Q\n")
        assert not result.ok
        assert (result.errors[0].line, result.errors[0].column) == (3, 11)

    def test_variable_named_like_a_value(self):
        result = parse_theory("type T = {a, b}\nvar a : T\nprop p: a = b\n")
        assert messages(result) == ["ambiguous name a: both a variable and a value of type T"]
        assert (result.errors[0].line, result.errors[0].column) == (3, 9)

    def test_variable_named_like_a_value_of_another_type(self):
        result = parse_theory("type T = {a, b}\ntype U = {c, d}\nvar a : U\nprop p: a = c\n")
        assert result.ok


class TestEncoding:
    def test_byte_order_mark(self):
        result = parse_theory(("\ufeff" + BOOL_HEADER + "prop h: P -> Q\n").encode("utf-8"))
        assert result.ok

    def test_invalid_utf8(self):
        result = parse_theory(b"type T = bool\n\xff\n")
        assert not result.ok
        first = result.errors[0]
        assert first.message == "input is not valid UTF-8"
        assert (first.line, first.column) == (2, 1)


class TestLimits:
    def test_parentheses_nesting(self):
        text = BOOL_HEADER + "prop h: " + "(" * 60 + "P" + ")" * 60 + "\n"
        assert parse_theory(text).ok
        result = parse_theory(text, max_depth=50)
        assert any("deeper than 50 levels" in m for m in messages(result))

    def test_consecutive_negations(self):
        result = parse_theory(BOOL_HEADER + "prop h: " + "!" * 101 + "P\n")
        assert messages(result) == ["more than 100 consecutive negations"]

    def test_long_implication_chain(self):
        chain = " -> ".join(["P"] * 120)
        result = parse_theory(BOOL_HEADER + f"prop h: {chain}\n")
        assert messages(result) == ["formula nests deeper than 100 levels"]
        assert result.errors[0].line == 3

    def test_depth_from_settings(self, monkeypatch):
        monkeypatch.setenv("THEORYKIT_PARSER_MAX_DEPTH", "8")
        result = parse_theory(BOOL_HEADER + "prop h: " + "(" * 10 + "P" + ")" * 10 + "\n")
        assert not result.ok

    def test_numeral_length(self):
        digits = "9" * (MAX_NUMERAL_LENGTH + 1)
        result = parse_theory(f"type S = real[0, {digits}]\n")
        assert messages(result) == [f"numeral longer than {MAX_NUMERAL_LENGTH} characters"]
        assert parse_theory(f"type S = real[0, {digits[:-1]}]\n").ok


class TestSingleFormula:
    def test_parses_against_a_language(self, casestudy):
        formula = parse_formula("OS > 5 -> !(SI = True)", casestudy.language)
        assert formula == casestudy.hypothesis("P10").formula

    def test_raises_with_diagnostics(self, casestudy):
        with pytest.raises(TheorySyntaxError) as info:
            parse_formula("OS > 5 ->", casestudy.language)
        assert info.value.diagnostics[0].line == 1

    def test_trailing_input(self, casestudy):
        with pytest.raises(TheorySyntaxError):
            parse_formula("RD = True RD", casestudy.language)


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=300))
def test_arbitrary_bytes_never_crash(data):
    result = parse_theory(data)
    assert_located(result)


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="typeatomvarprop:=->!&|(){}[],;#\"\\ \n\t0123456789.PQTxbolreal", max_size=200))
def test_grammar_soup_never_crashes(text):
    result = parse_theory(text)
    assert_located(result)
    assert result.ok == (not result.errors)


def test_mutated_files_never_crash(rng, fixtures_dir):
    """Random edits of a valid file give a document or located errors."""
    source = (fixtures_dir / "implications.thy").read_text(encoding="utf-8")
    alphabet = "()!&|->=<{}[],;:#\"\\ \n0123456789PQRSTxy"
    for _ in range(10_000):
        text = list(source)
        for _ in range(rng.randint(1, 4)):
            position = rng.randrange(len(text) + 1)
            action = rng.random()
            if action < 0.4 and text:
                del text[min(position, len(text) - 1)]
            elif action < 0.8:
                text.insert(position, rng.choice(alphabet))
            elif text:
                text[min(position, len(text) - 1)] = rng.choice(alphabet)
        result = parse_theory("".join(text))
        assert_located(result)
