"""Terms, atoms, formulas, models and their truth-valuation semantics."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from theorykit.core.errors import (
    ArityMismatchError,
    DomainError,
    TypeMismatchError,
    UnboundVariableError,
    UnknownNameError,
)
from theorykit.models.language import (
    CarrierKind,
    Language,
    RelationKind,
    Universe,
    Value,
    format_value,
    same_value,
    value_key,
)

logger = logging.getLogger(__name__)


# ============================================================================
# Terms
# ============================================================================

@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True, eq=False)
class Constant:
    """A carrier value of one universe; `True` and `1` are different constants."""

    value: Value
    universe: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Constant):
            return NotImplemented
        return self.universe == other.universe and same_value(self.value, other.value)

    def __hash__(self) -> int:
        return hash((value_key(self.value), self.universe))


@dataclass(frozen=True)
class Application:
    function: str
    args: Tuple["Term", ...]


Term = Union[Variable, Constant, Application]


@dataclass(frozen=True)
class Atom:
    """An applied relation R(t1, ..., tn); 0-ary relations are propositional symbols."""

    relation: str
    args: Tuple[Term, ...] = ()
    universe: int = 0


# ============================================================================
# Formulas
# ============================================================================

class Formula:
    """Base class for formulas; supports `&`, `|`, `~`, `.implies()` and `.iff()`."""

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __invert__(self) -> "Formula":
        return Not(self)

    def implies(self, other: "Formula") -> "Formula":
        return Implies(self, other)

    def iff(self, other: "Formula") -> "Formula":
        return Iff(self, other)

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class AtomRef(Formula):
    atom: Atom


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


Theory = Sequence[Formula]
Model = Mapping[str, object]

BINARY = (And, Or, Implies, Iff)


def symbol(name: str, universe: int = 0) -> AtomRef:
    """Propositional symbol as a formula."""
    return AtomRef(Atom(name, (), universe))


def conjunction(formulas: Iterable[Formula]) -> Formula:
    """Left-nested conjunction of a non-empty sequence."""
    items = list(formulas)
    if not items:
        raise ValueError("conjunction of an empty sequence")
    result = items[0]
    for item in items[1:]:
        result = And(result, item)
    return result


# ============================================================================
# Construct metadata
# ============================================================================

@dataclass(frozen=True)
class Dimension:
    variable: str
    source: str = "data"  # data | abductive
    shape: str = "scalar"  # scalar | collection
    note: str = ""


@dataclass(frozen=True)
class ConstructRecord:
    """Traceability record for a construct; never read by deduction."""

    name: str
    derived_from: Tuple[str, ...] = ()
    definition: str = ""
    multidimensional: bool = False
    dimensions: Tuple[Dimension, ...] = ()

    def universe_of(self, dimension: Dimension, lang: Language) -> int:
        decl = lang.variable(dimension.variable)
        if decl is None:
            raise UnknownNameError(f"construct {self.name}: unknown variable {dimension.variable}")
        return decl.universe


# ============================================================================
# Typing and evaluation
# ============================================================================

def typecheck_term(t: Term, lang: Language) -> int:
    """Return the universe index of a term, following the recursive typing rules."""
    if isinstance(t, Variable):
        decl = lang.variable(t.name)
        if decl is None:
            raise UnknownNameError(f"unknown variable {t.name}")
        return decl.universe
    if isinstance(t, Constant):
        universe = lang.universe(t.universe)
        if not universe.contains(t.value):
            raise TypeMismatchError(f"constant {format_value(t.value)} is not in universe {universe.name}")
        return t.universe
    if isinstance(t, Application):
        if not t.args:
            raise ArityMismatchError(f"function {t.function} applied to no arguments")
        kinds = [typecheck_term(arg, lang) for arg in t.args]
        owner = kinds[0]
        if any(k != owner for k in kinds[1:]):
            raise TypeMismatchError(f"arguments of {t.function} live in different universes")
        decl = lang.function(t.function, owner)
        if decl is None:
            raise UnknownNameError(
                f"function {t.function} is not declared on universe {lang.universe(owner).name}")
        if decl.arity != len(t.args):
            raise ArityMismatchError(
                f"function {t.function} expects {decl.arity} argument(s), got {len(t.args)}")
        return owner
    raise TypeError(f"not a term: {t!r}")


def typecheck_atom(atom: Atom, lang: Language) -> int:
    """Check an atom against the language and return its universe."""
    decl = lang.relation(atom.relation, atom.universe)
    if decl is None:
        raise UnknownNameError(f"relation {atom.relation} is not declared on universe index {atom.universe}")
    if decl.arity != len(atom.args):
        raise ArityMismatchError(
            f"relation {atom.relation} expects {decl.arity} argument(s), got {len(atom.args)}")
    for arg in atom.args:
        if typecheck_term(arg, lang) != atom.universe:
            raise TypeMismatchError(f"argument of {atom.relation} is not in universe index {atom.universe}")
    return atom.universe


def _apply(function: str, universe: Universe, args: List[Fraction]) -> Fraction:
    if function == "+":
        result = args[0] + args[1]
    elif function == "-":
        result = args[0] - args[1]
    elif function == "*":
        result = args[0] * args[1]
    elif function == "/":
        if args[1] == 0:
            raise DomainError("division by zero")
        result = args[0] / args[1]
    elif function == "neg":
        result = -args[0]
    else:
        raise UnknownNameError(f"function {function} has no interpretation")
    if not universe.contains(result):
        raise DomainError(
            f"{function} yields {format_value(result)}, outside universe {universe.name} {universe.describe()}")
    return result


def evaluate_term(t: Term, m: Model, lang: Language) -> Value:
    """Structural evaluation of a term under a model."""
    if isinstance(t, Variable):
        decl = lang.variable(t.name)
        if decl is None:
            raise UnknownNameError(f"unknown variable {t.name}")
        if t.name not in m:
            raise UnboundVariableError(f"model assigns no value to {t.name}")
        return lang.universe(decl.universe).coerce(m[t.name])
    if isinstance(t, Constant):
        return lang.universe(t.universe).coerce(t.value)
    if isinstance(t, Application):
        owner = typecheck_term(t, lang)
        universe = lang.universe(owner)
        if universe.kind is not CarrierKind.REAL:
            raise DomainError(f"function {t.function} has no interpretation on universe {universe.name}")
        args = [evaluate_term(arg, m, lang) for arg in t.args]
        return _apply(t.function, universe, args)  # type: ignore[arg-type]
    raise TypeError(f"not a term: {t!r}")


def _holds(atom: Atom, m: Model, lang: Language) -> bool:
    decl = lang.relation(atom.relation, atom.universe)
    if decl is None:
        raise UnknownNameError(f"relation {atom.relation} is not declared on universe index {atom.universe}")
    universe = lang.universe(atom.universe)
    kind = decl.interpretation

    if kind is RelationKind.PROPOSITION:
        if atom.relation not in m:
            raise UnboundVariableError(f"model assigns no truth value to {atom.relation}")
        value = m[atom.relation]
        if not isinstance(value, bool):
            raise DomainError(f"propositional symbol {atom.relation} needs a boolean, got {value!r}")
        return value

    if len(atom.args) != 2:
        raise ArityMismatchError(f"relation {atom.relation} expects 2 arguments")
    a, b = (evaluate_term(arg, m, lang) for arg in atom.args)
    if kind is RelationKind.EQ:
        return same_value(a, b)
    if universe.kind is CarrierKind.REAL:
        if kind is RelationKind.GT:
            return a > b  # type: ignore[operator]
        if kind is RelationKind.LT:
            return a < b  # type: ignore[operator]
        if kind is RelationKind.GE:
            return a >= b  # type: ignore[operator]
        return a <= b  # type: ignore[operator]
    if universe.kind is CarrierKind.ENUM:
        if kind is RelationKind.GT:
            return universe.greater(a, b)
        if kind is RelationKind.LT:
            return universe.greater(b, a)
        if kind is RelationKind.GE:
            return same_value(a, b) or universe.greater(a, b)
        return same_value(a, b) or universe.greater(b, a)
    raise TypeMismatchError(f"relation {atom.relation} is not defined on universe {universe.name}")


def evaluate_formula(f: Formula, m: Model, lang: Language) -> bool:
    """Truth value of a formula under the valuation induced by a model."""
    if isinstance(f, AtomRef):
        return _holds(f.atom, m, lang)
    if isinstance(f, Not):
        return not evaluate_formula(f.operand, m, lang)
    if isinstance(f, And):
        return evaluate_formula(f.left, m, lang) and evaluate_formula(f.right, m, lang)
    if isinstance(f, Or):
        return evaluate_formula(f.left, m, lang) or evaluate_formula(f.right, m, lang)
    if isinstance(f, Implies):
        return (not evaluate_formula(f.left, m, lang)) or evaluate_formula(f.right, m, lang)
    if isinstance(f, Iff):
        return evaluate_formula(f.left, m, lang) == evaluate_formula(f.right, m, lang)
    raise TypeError(f"not a formula: {f!r}")


def _collect_atoms(f: Formula, out: Dict[Atom, None]) -> None:
    if isinstance(f, AtomRef):
        out.setdefault(f.atom, None)
    elif isinstance(f, Not):
        _collect_atoms(f.operand, out)
    elif isinstance(f, BINARY):
        _collect_atoms(f.left, out)
        _collect_atoms(f.right, out)
    else:
        raise TypeError(f"not a formula: {f!r}")


def atoms_of(x: Union[Formula, Theory]) -> Tuple[Atom, ...]:
    """Atoms in first-occurrence order, syntactic duplicates removed."""
    seen: Dict[Atom, None] = {}
    formulas = [x] if isinstance(x, Formula) else list(x)
    for f in formulas:
        _collect_atoms(f, seen)
    return tuple(seen)


def _term_variables(t: Term, out: Dict[str, None]) -> None:
    if isinstance(t, Variable):
        out.setdefault(t.name, None)
    elif isinstance(t, Application):
        for arg in t.args:
            _term_variables(arg, out)


def variables_of(x: Union[Formula, Theory]) -> Tuple[str, ...]:
    """Variable names mentioned by the atoms of a formula or theory."""
    seen: Dict[str, None] = {}
    for atom in atoms_of(x):
        for arg in atom.args:
            _term_variables(arg, seen)
    return tuple(seen)


# ============================================================================
# Text form
# ============================================================================

_TERM_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_ATOMIC_TERM = 4


def _term_prec(t: Term) -> int:
    if isinstance(t, Application) and t.function in _TERM_PREC and len(t.args) == 2:
        return _TERM_PREC[t.function]
    return _ATOMIC_TERM


def format_term(t: Term, min_prec: int = 0) -> str:
    """Render a term in theory-file syntax with minimal parentheses."""
    if isinstance(t, Variable):
        return t.name
    if isinstance(t, Constant):
        return format_value(t.value)
    if isinstance(t, Application):
        if t.function in _TERM_PREC and len(t.args) == 2:
            prec = _TERM_PREC[t.function]
            text = f"{format_term(t.args[0], prec)} {t.function} {format_term(t.args[1], prec + 1)}"
            return f"({text})" if prec < min_prec else text
        if t.function == "neg" and len(t.args) == 1:
            return f"-({format_term(t.args[0])})"
        return f"{t.function}(" + ", ".join(format_term(a) for a in t.args) + ")"
    raise TypeError(f"not a term: {t!r}")


def format_atom(atom: Atom) -> str:
    if not atom.args:
        return atom.relation
    if len(atom.args) == 2:
        return f"{format_term(atom.args[0])} {atom.relation} {format_term(atom.args[1])}"
    return f"{atom.relation}(" + ", ".join(format_term(a) for a in atom.args) + ")"


_IFF, _IMPLIES, _OR, _AND, _NOT = 1, 2, 3, 4, 5


def format_formula(f: Formula, min_prec: int = 0) -> str:
    """Render a formula in theory-file syntax (`! & | -> <->`)."""
    if isinstance(f, AtomRef):
        return format_atom(f.atom)
    if isinstance(f, Not):
        inner = f.operand
        if isinstance(inner, AtomRef) and inner.atom.args:
            return f"!({format_atom(inner.atom)})"
        return "!" + format_formula(inner, _NOT)
    if isinstance(f, And):
        prec, text = _AND, f"{format_formula(f.left, _AND)} & {format_formula(f.right, _AND + 1)}"
    elif isinstance(f, Or):
        prec, text = _OR, f"{format_formula(f.left, _OR)} | {format_formula(f.right, _OR + 1)}"
    elif isinstance(f, Implies):
        prec, text = _IMPLIES, f"{format_formula(f.left, _IMPLIES + 1)} -> {format_formula(f.right, _IMPLIES)}"
    elif isinstance(f, Iff):
        prec, text = _IFF, f"{format_formula(f.left, _IFF)} <-> {format_formula(f.right, _IFF + 1)}"
    else:
        raise TypeError(f"not a formula: {f!r}")
    return f"({text})" if prec < min_prec else text
