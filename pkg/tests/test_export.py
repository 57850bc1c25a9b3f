"""DOT, knowledge-base and JSON exports."""

import json
import re

import pytest
from theory_factory import random_implication_theory

from theorykit.core.config import get_settings
from theorykit.core.errors import NotHornError
from theorykit.dsl.document import dump_document
from theorykit.dsl.export import (
    DOT_KEYWORDS,
    dot_id,
    dot_node_ids,
    export_dot,
    export_horn_kb,
    export_json,
    mangle,
    unique_names,
)
from theorykit.models.formula import symbol
from theorykit.services.deduction.clauses import to_clausal
from theorykit.services.graphs.closure import transitive_closure
from theorykit.services.graphs.implication import as_implication_theory, build_graph
from theorykit.services.graphs.reduction import transitive_reduction

P1, P2, Q = symbol("P1"), symbol("P2"), symbol("Q")

DOT_ID = r"[A-Za-z_][A-Za-z0-9_]*"
DOT_STRING = r'"(?:[^"\\\n]|\\.)*"'
DOT_HEADER = re.compile(rf"digraph ({DOT_ID}) \{{")
DOT_NODE = re.compile(rf"  ({DOT_ID}) \[label={DOT_STRING}\];")
DOT_EDGE = re.compile(rf"  ({DOT_ID}) -> ({DOT_ID})(?: \[label={DOT_STRING}\])?;")


def assert_valid_dot(text):
    """Line grammar of the exported subset of DOT, with keywords barred from identifiers."""
    lines = text.splitlines()
    assert text.endswith("\n")
    header = DOT_HEADER.fullmatch(lines[0])
    assert header, lines[0]
    assert lines[-1] == "}"
    ids = [header.group(1)]
    declared = set()
    for line in lines[1:-1]:
        node = DOT_NODE.fullmatch(line)
        if node:
            assert node.group(1) not in declared, line
            declared.add(node.group(1))
            ids.append(node.group(1))
            continue
        edge = DOT_EDGE.fullmatch(line)
        assert edge, line
        assert {edge.group(1), edge.group(2)} <= declared, line
        ids.extend(edge.groups())
    assert not any(name.lower() in DOT_KEYWORDS for name in ids)


@pytest.fixture
def four_graph(implications):
    atoms = [symbol(name).atom for name in "PQRS"]
    return build_graph(as_implication_theory(implications.theory(), atoms=atoms, labels=implications.labels()))


class TestNames:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("OS > 5", "OS_5"),
            ("CL > (Eventual, Low)", "CL_Eventual_Low"),
            ("5 < x", "n_5_x"),
            ("!!", "atom"),
            ("plain", "plain"),
        ],
    )
    def test_mangle(self, text, expected):
        assert mangle(text) == expected

    def test_lowercase(self):
        assert mangle("RD = True", lowercase=True) == "rd_true"

    def test_unique_names(self):
        assert unique_names(["a", "b", "a", "a_2", "a"]) == ["a", "b", "a_2", "a_2_2", "a_3"]

    def test_colliding_atoms(self):
        g = build_graph(as_implication_theory([symbol("a b").implies(symbol("a_b"))]))
        assert dot_node_ids(g) == ["a_b", "a_b_2", "not_a_b", "not_a_b_2"]


class TestDot:
    def test_four_graph(self, four_graph):
        lines = export_dot(four_graph).splitlines()
        assert lines[0] == "digraph theory {"
        assert lines[-1] == "}"
        assert '  not_P [label="!P"];' in lines
        assert '  P -> R [label="h2"];' in lines
        assert '  not_S -> not_P [label="h4"];' in lines
        assert '  not_R -> not_Q [label="h1"];' in lines
        assert sum("->" in line for line in lines) == len(four_graph.edges)

    def test_edges_follow_node_order(self, four_graph):
        edges = [line for line in export_dot(four_graph).splitlines() if "->" in line]
        assert edges[0].startswith("  P -> R")

    def test_without_labels_and_custom_name(self, four_graph):
        text = export_dot(four_graph, name="my graph", edge_labels=False)
        assert text.startswith("digraph my_graph {\n")
        assert "label=\"h" not in text
        assert text.endswith("}\n")

    def test_graph_name_from_settings(self, four_graph, monkeypatch):
        monkeypatch.setenv("THEORYKIT_DOT_GRAPH_NAME", "hypotheses")
        get_settings.cache_clear()
        assert export_dot(four_graph).startswith("digraph hypotheses {")

    @pytest.mark.parametrize(
        "text, expected",
        [("node", "node_"), ("Graph", "Graph_"), ("STRICT", "STRICT_"), ("nodes", "nodes"), ("sub graph", "sub_graph")],
    )
    def test_keywords_are_suffixed(self, text, expected):
        assert dot_id(text) == expected

    def test_keyword_atoms_stay_nodes(self):
        g = build_graph(as_implication_theory([symbol("node").implies(symbol("edge"))], labels=["h1"]))
        text = export_dot(g, name="graph")
        lines = text.splitlines()
        assert lines[0] == "digraph graph_ {"
        assert '  node_ [label="node"];' in lines
        assert '  node_ -> edge_ [label="h1"];' in lines
        assert '  not_edge_ -> not_node_ [label="h1"];' in lines
        assert_valid_dot(text)

    def test_exports_follow_the_dot_grammar(self, four_graph, rng):
        assert_valid_dot(export_dot(four_graph))
        for _ in range(200):
            g = build_graph(as_implication_theory(random_implication_theory(rng, max_atoms=6)))
            for graph in (g, transitive_closure(g), transitive_reduction(g)):
                assert_valid_dot(export_dot(graph))


class TestKnowledgeBase:
    def test_rule(self):
        assert export_horn_kb([(P1 & P2).implies(Q)]) == "q :- p1, p2."

    def test_facts_and_rules(self):
        text = export_horn_kb([P1, P1.implies(Q)])
        assert text.splitlines() == ["p1.", "q :- p1."]

    def test_four_atom_theory(self, implications):
        lines = export_horn_kb(implications.theory()).splitlines()
        assert sorted(lines) == ["q :- s.", "r :- p.", "r :- q.", "s :- p."]

    def test_accepts_clausal_theories(self):
        assert export_horn_kb(to_clausal([P1])) == "p1."

    def test_goal_clause_is_rejected(self, casestudy):
        with pytest.raises(NotHornError) as info:
            export_horn_kb(casestudy.theory())
        assert "goal clause" in str(info.value)

    def test_non_horn_clause_is_rejected(self):
        with pytest.raises(NotHornError) as info:
            export_horn_kb([P1 | P2])
        assert str(info.value) == "clause 1 {P1, P2} is a non-horn clause, not a definite clause or fact"


class TestJson:
    def test_document_dump(self, casestudy):
        dump = json.loads(export_json(casestudy))
        assert [u["name"] for u in dump["language"]["universes"]] == ["Scale", "Boolean", "Collaboration"]
        assert dump["language"]["universes"][0]["relations"] == ["=", ">"]
        assert [c["name"] for c in dump["constructs"]] == ["Team", "Silo", "Interaction"]
        assert [d["universe"] for d in dump["constructs"][0]["dimensions"]] == ["Scale", "Boolean"]
        first = dump["hypotheses"][0]
        assert first["id"] == "P1"
        assert first["formula"] == "OS > 5 -> CL > (Eventual, Low)"
        assert first["atoms"] == ["OS > 5", "CL > (Eventual, Low)"]
        assert first["line"] is not None

    def test_propositional_symbols(self, implications):
        dump = json.loads(export_json(implications))
        assert dump["language"]["universes"][0]["propositions"] == ["P", "Q", "R", "S"]
        assert dump["language"]["variables"] == []

    def test_dump_model_matches_json(self, determinant):
        dump = dump_document(determinant)
        assert json.loads(export_json(determinant)) == json.loads(dump.model_dump_json())
        assert len(dump.hypotheses) == len(determinant.hypotheses)
