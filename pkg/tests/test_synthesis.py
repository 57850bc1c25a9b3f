"""Canonical set synthesis on implication theories."""

from theory_factory import random_implication_theory

from theorykit.models.diagnostic import Severity
from theorykit.models.formula import format_formula, symbol
from theorykit.services.deduction.oracle import equivalent
from theorykit.services.deduction.resolution import entails
from theorykit.services.graphs.synthesis import DERIVABLE, TAUTOLOGY, canonical_set, self_refuting_literals

P, Q, R = symbol("P"), symbol("Q"), symbol("R")


class TestCaseStudy:
    def test_derived_implication(self, casestudy):
        result = canonical_set(casestudy.theory(), labels=casestudy.labels())
        assert [format_formula(f) for f in result.derived] == ["OS > 5 -> !(RD = True)"]

    def test_redundant_hypothesis_is_removed(self, casestudy):
        result = canonical_set(casestudy.theory(), labels=casestudy.labels())
        assert result.kept == ["P1", "P2", "P6"]
        assert result.removed == [("P10", DERIVABLE)]
        assert result.diagnostics == []

    def test_canonical_set_is_equivalent_to_the_kept_hypotheses(self, casestudy):
        result = canonical_set(casestudy.theory(), labels=casestudy.labels())
        kept = [casestudy.hypothesis(label).formula for label in result.kept]
        assert len(result.minimal) == 3
        assert equivalent(result.minimal, kept)
        assert equivalent(result.closure_theory, casestudy.theory())

    def test_unpacks_as_minimal_and_closure(self, casestudy):
        minimal, closure = canonical_set(casestudy.theory())
        assert len(minimal) == 3
        assert len(closure) > len(minimal)


def test_tautologies_are_reported():
    result = canonical_set([P.implies(P), P.implies(Q)], labels=["t", "h"])
    assert result.kept == ["h"]
    assert result.removed == [("t", TAUTOLOGY)]


def test_self_refuting_literal_warns():
    result = canonical_set([P.implies(Q), Q.implies(~P)])
    assert self_refuting_literals(result.closure) == [0]
    [warning] = result.diagnostics
    assert warning.severity is Severity.WARNING
    assert warning.element == "P"


def test_cycle_keeps_every_member_of_the_ring():
    result = canonical_set([P.implies(Q), Q.implies(R), R.implies(P), P.implies(R)], labels=["a", "b", "c", "d"])
    assert result.kept == ["a", "b", "c"]
    assert result.removed == [("d", DERIVABLE)]


def test_ring_out_of_sorted_order_keeps_every_needed_hypothesis():
    labels = ["a", "b", "c", "d"]
    theory = [P.implies(Q), Q.implies(P), Q.implies(R), R.implies(Q)]
    result = canonical_set(theory, labels=labels)
    assert result.kept == labels
    assert result.removed == []
    assert len(result.reduction.edges) == 6


def test_removed_hypotheses_follow_from_the_kept_ones(rng):
    for _ in range(200):
        theory = random_implication_theory(rng, max_atoms=5)
        labels = [f"h{i}" for i in range(len(theory))]
        result = canonical_set(theory, labels=labels)
        by_label = dict(zip(labels, theory))
        kept = [by_label[label] for label in result.kept]
        assert equivalent(kept, theory)
        for label, reason in result.removed:
            if reason == DERIVABLE:
                assert entails(kept, by_label[label])
        for label in result.kept:
            assert not entails([by_label[k] for k in result.kept if k != label], by_label[label])


def test_random_theories(rng):
    """Closure and canonical theories are equivalent to the input; every derived implication is entailed."""
    for _ in range(200):
        theory = random_implication_theory(rng, max_atoms=6)
        result = canonical_set(theory)
        assert equivalent(result.minimal, theory)
        assert equivalent(result.closure_theory, theory)
        for f in result.derived:
            assert entails(theory, f)
