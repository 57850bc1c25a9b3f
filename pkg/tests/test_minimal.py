"""Minimal sub-theories: equivalence, irredundancy and order dependence."""

import pytest
from theory_factory import random_theory

from theorykit.models.formula import symbol
from theorykit.services.deduction.minimal import minimal_theory, minimal_theory_indices
from theorykit.services.deduction.oracle import brute_force_entails, equivalent

P, Q = symbol("P"), symbol("Q")


def test_case_study_keeps_the_first_three(casestudy):
    kept = minimal_theory_indices(casestudy.theory())
    assert [casestudy.labels()[i] for i in kept] == ["P1", "P2", "P6"]


def test_visiting_order_changes_the_result():
    theory = [P.implies(Q), Q.implies(P), P.iff(Q)]
    assert minimal_theory(theory) == [P.iff(Q)]
    assert minimal_theory(theory, order=[2, 0, 1]) == [P.implies(Q), Q.implies(P)]


def test_order_must_be_a_permutation():
    with pytest.raises(ValueError):
        minimal_theory_indices([P, Q], order=[0, 0])


def test_duplicates_collapse():
    assert minimal_theory([P, P, P.implies(Q)]) == [P, P.implies(Q)]


def test_minimal_theory_contract(rng):
    """The result is equivalent to its input and no member follows from the others."""
    for _ in range(300):
        theory = random_theory(rng, max_atoms=8, max_formulas=8, depth=2)
        result = minimal_theory(theory)
        assert equivalent(theory, result)
        for i, f in enumerate(result):
            rest = result[:i] + result[i + 1:]
            assert not brute_force_entails(rest, f)
