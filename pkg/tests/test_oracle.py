"""Truth-table oracle and its agreement with resolution."""

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings
from theory_factory import atom_names, random_formula, random_theory

from theorykit.core.errors import TooManyAtomsError
from theorykit.models.formula import And, Iff, Implies, Not, Or, evaluate_formula, symbol
from theorykit.models.language import Language
from theorykit.services.deduction.oracle import (
    TruthTable,
    brute_force_entails,
    brute_force_satisfiable,
    equivalent,
)
from theorykit.services.deduction.clauses import ClausalTheory, SignedAtom, to_clausal
from theorykit.services.deduction.resolution import davis_putnam, entails, resolve_step

NAMES = atom_names(4)
LANG = Language.propositional(NAMES)


def formulas():
    leaves = st.sampled_from(NAMES).map(symbol)
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            inner.map(Not),
            st.tuples(inner, inner).map(lambda p: And(*p)),
            st.tuples(inner, inner).map(lambda p: Or(*p)),
            st.tuples(inner, inner).map(lambda p: Implies(*p)),
            st.tuples(inner, inner).map(lambda p: Iff(*p)),
        ),
        max_leaves=8,
    )


@settings(deadline=None)
@given(formulas(), st.data())
def test_table_matches_evaluation(f, data):
    table = TruthTable([symbol(name).atom for name in NAMES])
    row = data.draw(st.integers(min_value=0, max_value=table.rows - 1))
    model = {name: bool(row >> i & 1) for i, name in enumerate(NAMES)}
    assert bool(table.of(f) >> row & 1) == evaluate_formula(f, model, LANG)


@settings(max_examples=200, deadline=None)
@given(formulas(), formulas())
def test_entailment_agrees_on_small_formulas(premise, query):
    assert bool(entails([premise], query)) == brute_force_entails([premise], query)


def test_entailment_agrees_with_truth_tables(rng):
    """Resolution and exhaustive enumeration decide the same queries."""
    for _ in range(1000):
        names = atom_names(rng.randint(1, 12))
        theory = random_theory(rng, max_formulas=12, depth=2, names=names)
        query = random_formula(rng, names, depth=2)
        assert bool(entails(theory, query)) == brute_force_entails(theory, query), (theory, query)


def test_models_and_counts():
    p, q = symbol("P"), symbol("Q")
    table = TruthTable([p.atom, q.atom])
    conj = table.of(p & q)
    assert TruthTable.count(conj) == 1
    assert list(table.models(conj)) == [{p.atom: True, q.atom: True}]
    assert TruthTable.count(table.of(p | q)) == 3


def test_satisfiability_and_equivalence():
    p, q = symbol("P"), symbol("Q")
    assert brute_force_satisfiable([p, p.implies(q)])
    assert not brute_force_satisfiable([p, ~p])
    assert equivalent([p.implies(q)], [(~q).implies(~p)])
    assert not equivalent([p.implies(q)], [q.implies(p)])


def test_atom_cap():
    theory = [symbol(f"x{i}") for i in range(5)]
    with pytest.raises(TooManyAtomsError):
        brute_force_satisfiable(theory, max_atoms=4)
    assert brute_force_satisfiable(theory, max_atoms=5)


def test_resolvents_follow_from_their_parents(rng):
    checked = 0
    for _ in range(300):
        ct = to_clausal(random_theory(rng, max_atoms=6, max_formulas=6))
        table = TruthTable(ct.atoms)
        for c1 in ct.clauses:
            for c2 in ct.clauses:
                for lit in c1.positives:
                    if SignedAtom(lit.atom, False) not in c2:
                        continue
                    resolvent = resolve_step(c1, c2, lit.atom)
                    parents = table.of_clause(c1, ct) & table.of_clause(c2, ct)
                    assert (parents & (table.mask ^ table.of_clause(resolvent, ct))) == 0
                    checked += 1
    assert checked > 0


def test_clause_order_does_not_change_the_verdict(rng):
    for _ in range(300):
        ct = to_clausal(random_theory(rng, max_atoms=6, max_formulas=8))
        clauses = list(ct.clauses)
        rng.shuffle(clauses)
        shuffled = ClausalTheory(atoms=ct.atoms, clauses=tuple(clauses))
        expected = brute_force_satisfiable(ct)
        assert davis_putnam(ct).satisfiable == expected
        assert davis_putnam(shuffled).satisfiable == expected
