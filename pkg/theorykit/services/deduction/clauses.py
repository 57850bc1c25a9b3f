"""Signed atoms, clauses and conversion of theories to clausal form."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from theorykit.models.formula import (
    And,
    Atom,
    AtomRef,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Theory,
    atoms_of,
    format_atom,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SignedAtom:
    """An interned atom index with a polarity."""

    atom: int
    positive: bool = True

    def negate(self) -> "SignedAtom":
        return SignedAtom(self.atom, not self.positive)

    def to_int(self) -> int:
        """Signed integer encoding: atom index + 1, negated for negative literals."""
        return self.atom + 1 if self.positive else -(self.atom + 1)

    @classmethod
    def from_int(cls, lit: int) -> "SignedAtom":
        return cls(abs(lit) - 1, lit > 0)


def _sort_key(lit: SignedAtom) -> Tuple[int, int]:
    return lit.atom, 0 if lit.positive else 1


@dataclass(frozen=True)
class Clause:
    """A disjunction of signed atoms; the empty clause is a contradiction."""

    literals: FrozenSet[SignedAtom] = field(default_factory=frozenset)

    @classmethod
    def of(cls, *literals: SignedAtom) -> "Clause":
        return cls(frozenset(literals))

    @classmethod
    def from_ints(cls, lits: Iterable[int]) -> "Clause":
        return cls(frozenset(SignedAtom.from_int(lit) for lit in lits))

    def to_ints(self) -> FrozenSet[int]:
        return frozenset(lit.to_int() for lit in self.literals)

    def __iter__(self) -> Iterator[SignedAtom]:
        return iter(sorted(self.literals, key=_sort_key))

    def __len__(self) -> int:
        return len(self.literals)

    def __contains__(self, lit: object) -> bool:
        return lit in self.literals

    @property
    def is_empty(self) -> bool:
        return not self.literals

    @property
    def positives(self) -> Tuple[SignedAtom, ...]:
        return tuple(lit for lit in self if lit.positive)

    @property
    def negatives(self) -> Tuple[SignedAtom, ...]:
        return tuple(lit for lit in self if not lit.positive)

    @property
    def is_tautology(self) -> bool:
        """True when some atom occurs with both polarities."""
        return any(lit.negate() in self.literals for lit in self.literals if lit.positive)


class ClauseKind(str, Enum):
    """Horn classification of a clause."""

    EMPTY = "empty"
    FACT = "fact"
    DEFINITE = "definite"
    GOAL = "goal"
    NON_HORN = "non_horn"


def classify_clause(clause: Clause) -> ClauseKind:
    positives = len(clause.positives)
    negatives = len(clause) - positives
    if positives == 0:
        return ClauseKind.EMPTY if negatives == 0 else ClauseKind.GOAL
    if positives == 1:
        return ClauseKind.FACT if negatives == 0 else ClauseKind.DEFINITE
    return ClauseKind.NON_HORN


@dataclass(frozen=True)
class ClausalTheory:
    """A deduplicated clause set together with its atom interning table."""

    atoms: Tuple[Atom, ...]
    clauses: Tuple[Clause, ...]

    def index_of(self, atom: Atom) -> int:
        return self.atoms.index(atom)

    def literal(self, atom: Atom, positive: bool = True) -> SignedAtom:
        return SignedAtom(self.index_of(atom), positive)

    def literal_text(self, lit: SignedAtom) -> str:
        text = format_atom(self.atoms[lit.atom])
        if lit.positive:
            return text
        return f"!{text}" if not self.atoms[lit.atom].args else f"!({text})"

    def clause_texts(self, clause: Clause) -> List[str]:
        return [self.literal_text(lit) for lit in clause]

    def clause_text(self, clause: Clause) -> str:
        if clause.is_empty:
            return "{}"
        return "{" + ", ".join(self.clause_texts(clause)) + "}"

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __contains__(self, clause: object) -> bool:
        return clause in self.clauses


def is_horn(ct: ClausalTheory) -> bool:
    """Every clause has at most one positive literal."""
    return all(classify_clause(c) is not ClauseKind.NON_HORN for c in ct.clauses)


# ============================================================================
# Conversion
# ============================================================================

_CNF = List[FrozenSet[int]]


def _dedupe(clauses: Iterable[FrozenSet[int]]) -> _CNF:
    return list(dict.fromkeys(clauses))


def _product(left: _CNF, right: _CNF) -> _CNF:
    return _dedupe(a | b for a in left for b in right)


def _cnf(f: Formula, positive: bool, index: Dict[Atom, int]) -> _CNF:
    """Clauses (signed-int literals) of f, or of its negation when positive is False."""
    if isinstance(f, AtomRef):
        lit = index[f.atom] + 1
        return [frozenset({lit if positive else -lit})]
    if isinstance(f, Not):
        return _cnf(f.operand, not positive, index)
    if isinstance(f, And):
        if positive:
            return _dedupe(_cnf(f.left, True, index) + _cnf(f.right, True, index))
        return _product(_cnf(f.left, False, index), _cnf(f.right, False, index))
    if isinstance(f, Or):
        if positive:
            return _product(_cnf(f.left, True, index), _cnf(f.right, True, index))
        return _dedupe(_cnf(f.left, False, index) + _cnf(f.right, False, index))
    if isinstance(f, Implies):
        if positive:
            return _product(_cnf(f.left, False, index), _cnf(f.right, True, index))
        return _dedupe(_cnf(f.left, True, index) + _cnf(f.right, False, index))
    if isinstance(f, Iff):
        if positive:
            return _dedupe(
                _product(_cnf(f.left, False, index), _cnf(f.right, True, index))
                + _product(_cnf(f.left, True, index), _cnf(f.right, False, index))
            )
        return _dedupe(
            _product(_cnf(f.left, True, index), _cnf(f.right, True, index))
            + _product(_cnf(f.left, False, index), _cnf(f.right, False, index))
        )
    raise TypeError(f"not a formula: {f!r}")


def to_clausal(t: Union[Theory, Formula], atoms: Optional[Sequence[Atom]] = None) -> ClausalTheory:
    """
    Convert a theory to conjunctive normal form.

    Implications and biconditionals are eliminated, negations pushed onto atoms
    and disjunction distributed over conjunction. Clauses are deduplicated
    under set equality in first-derivation order; tautological clauses are
    kept and can be recognised through `Clause.is_tautology`.

    Args:
        t: Theory (or a single formula)
        atoms: Interning order; defaults to first occurrence in t. Atoms of t
            missing from this order are appended.

    Returns:
        ClausalTheory logically equivalent to t
    """
    formulas = [t] if isinstance(t, Formula) else list(t)
    table: List[Atom] = list(atoms) if atoms is not None else []
    for atom in atoms_of(formulas):
        if atom not in table:
            table.append(atom)
    index = {atom: i for i, atom in enumerate(table)}

    collected: Dict[FrozenSet[int], None] = {}
    for f in formulas:
        for clause in _cnf(f, True, index):
            collected.setdefault(clause, None)

    clauses = tuple(Clause.from_ints(c) for c in collected)
    logger.debug(f"Clausal form: {len(formulas)} formula(s) -> {len(clauses)} clause(s) over {len(table)} atom(s)")
    return ClausalTheory(atoms=tuple(table), clauses=clauses)
