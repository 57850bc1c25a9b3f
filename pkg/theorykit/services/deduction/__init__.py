"""Clausal form, resolution, Horn chaining, truth tables and minimal theories."""

from theorykit.services.deduction.base import (
    DavisPutnamChecker,
    HornChecker,
    SatisfiabilityChecker,
    TruthTableChecker,
    get_checker,
)
from theorykit.services.deduction.clauses import (
    ClausalTheory,
    Clause,
    ClauseKind,
    SignedAtom,
    classify_clause,
    is_horn,
    to_clausal,
)
from theorykit.services.deduction.horn import HornResult, horn_satisfiable
from theorykit.services.deduction.minimal import minimal_theory, minimal_theory_indices
from theorykit.services.deduction.oracle import (
    TruthTable,
    brute_force_entails,
    brute_force_satisfiable,
    equivalent,
)
from theorykit.services.deduction.resolution import (
    EntailmentResult,
    ResolutionStep,
    SatResult,
    davis_putnam,
    entails,
    resolve_step,
)

__all__ = [
    "SignedAtom",
    "Clause",
    "ClauseKind",
    "ClausalTheory",
    "classify_clause",
    "is_horn",
    "to_clausal",
    "resolve_step",
    "ResolutionStep",
    "SatResult",
    "EntailmentResult",
    "davis_putnam",
    "entails",
    "TruthTable",
    "brute_force_entails",
    "brute_force_satisfiable",
    "equivalent",
    "minimal_theory",
    "minimal_theory_indices",
    "HornResult",
    "horn_satisfiable",
    "SatisfiabilityChecker",
    "DavisPutnamChecker",
    "HornChecker",
    "TruthTableChecker",
    "get_checker",
]
