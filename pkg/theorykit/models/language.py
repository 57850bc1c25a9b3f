"""Typed language L = (U, V, F, R): universes, variables, functions, relations."""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from theorykit.core.errors import DomainError, UnknownNameError
from theorykit.models.diagnostic import Diagnostic

logger = logging.getLogger(__name__)

# Carrier values: exact reals, booleans, enumeration tokens (possibly tuples).
Value = Union[Fraction, bool, str, Tuple["Value", ...]]


class CarrierKind(str, Enum):
    REAL = "real"
    BOOLEAN = "bool"
    ENUM = "enum"


class RelationKind(str, Enum):
    EQ = "="
    GT = ">"
    LT = "<"
    GE = ">="
    LE = "<="
    PROPOSITION = "prop"


COMPARISONS: Tuple[str, ...] = ("=", ">", "<", ">=", "<=")
ORDER_COMPARISONS = frozenset({">", "<", ">=", "<="})

# name -> arity; interpreted on real universes only
ARITHMETIC_FUNCTIONS: Dict[str, int] = {"+": 2, "-": 2, "*": 2, "/": 2, "neg": 1}

# Words with a fixed meaning in theory files; never usable as names.
RESERVED_WORDS = frozenset({"type", "var", "atom", "construct", "prop", "real", "bool", "True", "False"})

_IDENTIFIER = re.compile(r"[^\W\d]\w*\Z")


def to_fraction(value: object) -> Optional[Fraction]:
    """Convert a numeric value to an exact fraction, or None."""
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            return None
    return None


def normalize_token(value: object) -> object:
    """Lists become tuples so enumeration tokens stay hashable."""
    if isinstance(value, (list, tuple)):
        return tuple(normalize_token(v) for v in value)
    return value


def value_key(value: object) -> Tuple[str, object]:
    """Hashable identity of a carrier value; booleans, numbers and names never coincide."""
    if isinstance(value, bool):
        return ("bool", value)
    if isinstance(value, (list, tuple)):
        return ("tuple", tuple(value_key(v) for v in value))
    if isinstance(value, (int, float, Fraction)):
        return ("number", to_fraction(value))
    return ("name", value)


def same_value(a: object, b: object) -> bool:
    return value_key(a) == value_key(b)


def format_number(value: Fraction) -> str:
    """Render a fraction as an exact decimal when it has one."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    digits = 0
    while digits < 64 and (10 ** digits) % den:
        digits += 1
    if (10 ** digits) % den:
        return f"{value.numerator}/{den}"
    scaled = abs(value.numerator) * (10 ** digits // den)
    text = str(scaled).rjust(digits + 1, "0")
    whole, frac = text[:-digits], text[-digits:].rstrip("0")
    sign = "-" if value < 0 else ""
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def format_value(value: Value) -> str:
    """Render a carrier value the way theory files spell it."""
    if isinstance(value, bool):
        return "True" if value else "False"
    if isinstance(value, Fraction) or isinstance(value, int):
        return format_number(Fraction(value))
    if isinstance(value, tuple):
        if len(value) == 1:
            return f"({format_value(value[0])},)"
        return "(" + ", ".join(format_value(v) for v in value) + ")"
    text = str(value)
    if is_identifier(text):
        return text
    escaped = text.replace("\\", "\\\\").replace("\"", "\\\"").replace("\n", "\\n").replace("\t", "\\t")
    return f"\"{escaped}\""


def is_identifier(text: str) -> bool:
    """A bare name in theory files: a letter or underscore first, not a reserved word."""
    return bool(_IDENTIFIER.match(text)) and text not in RESERVED_WORDS


@dataclass(frozen=True)
class Universe:
    """A type: real interval, boolean, or finite enumeration with optional order."""

    name: str
    kind: CarrierKind
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    values: Tuple[Value, ...] = ()
    order: Tuple[Tuple[Value, Value], ...] = ()

    @classmethod
    def real(cls, name: str, lo: object, hi: object) -> "Universe":
        return cls(name, CarrierKind.REAL, lo=to_fraction(lo), hi=to_fraction(hi))

    @classmethod
    def boolean(cls, name: str) -> "Universe":
        return cls(name, CarrierKind.BOOLEAN, values=(True, False))

    @classmethod
    def enumeration(
        cls,
        name: str,
        values: Iterable[object],
        order: Iterable[Tuple[object, object]] = (),
    ) -> "Universe":
        return cls(
            name,
            CarrierKind.ENUM,
            values=tuple(normalize_token(v) for v in values),
            order=tuple((normalize_token(a), normalize_token(b)) for a, b in order),
        )

    def contains(self, value: object) -> bool:
        """Check membership in the carrier."""
        if self.kind is CarrierKind.REAL:
            number = to_fraction(value)
            if number is None or self.lo is None or self.hi is None:
                return False
            return self.lo <= number <= self.hi
        if self.kind is CarrierKind.BOOLEAN:
            return isinstance(value, bool)
        return value_key(value) in self.value_keys

    def coerce(self, value: object) -> Value:
        """Normalize a model value into the carrier, raising DomainError outside it."""
        if not self.contains(value):
            raise DomainError(f"value {value!r} is not in universe {self.name}")
        if self.kind is CarrierKind.REAL:
            return to_fraction(value)  # type: ignore[return-value]
        return normalize_token(value)  # type: ignore[return-value]

    @cached_property
    def value_keys(self) -> FrozenSet[Tuple[str, object]]:
        return frozenset(value_key(v) for v in self.values)

    @cached_property
    def strict_order(self) -> FrozenSet[Tuple[object, object]]:
        """Transitive closure of the declared order pairs, over `value_key`s."""
        closure = {(value_key(a), value_key(b)) for a, b in self.order}
        changed = True
        while changed:
            changed = False
            for a, b in list(closure):
                for c, d in list(closure):
                    if b == c and (a, d) not in closure:
                        closure.add((a, d))
                        changed = True
        return frozenset(closure)

    def greater(self, a: Value, b: Value) -> bool:
        """`a > b` under the declared order; incomparable values give False."""
        return (value_key(a), value_key(b)) in self.strict_order

    def default_relations(self) -> Tuple[str, ...]:
        if self.kind is CarrierKind.REAL or (self.kind is CarrierKind.ENUM and self.order):
            return COMPARISONS
        return ("=",)

    def default_functions(self) -> Tuple[str, ...]:
        if self.kind is CarrierKind.REAL:
            return tuple(ARITHMETIC_FUNCTIONS)
        return ()

    def describe(self) -> str:
        if self.kind is CarrierKind.REAL:
            return f"[{format_value(self.lo)}, {format_value(self.hi)}]"
        return "{" + ", ".join(format_value(v) for v in self.values) + "}"


@dataclass(frozen=True)
class VariableDecl:
    name: str
    universe: int


@dataclass(frozen=True)
class FunctionDecl:
    name: str
    universe: int
    arity: int


@dataclass(frozen=True)
class RelationDecl:
    name: str
    universe: int
    arity: int
    interpretation: RelationKind


@dataclass(frozen=True)
class Language:
    """The language L = (U, V, F, R) fixing well-formed terms and literals."""

    universes: Tuple[Universe, ...] = ()
    variables: Tuple[VariableDecl, ...] = ()
    functions: Tuple[FunctionDecl, ...] = ()
    relations: Tuple[RelationDecl, ...] = ()

    @cached_property
    def _variable_index(self) -> Dict[str, VariableDecl]:
        index: Dict[str, VariableDecl] = {}
        for decl in self.variables:
            index.setdefault(decl.name, decl)
        return index

    @cached_property
    def _function_index(self) -> Dict[Tuple[str, int], FunctionDecl]:
        index: Dict[Tuple[str, int], FunctionDecl] = {}
        for decl in self.functions:
            index.setdefault((decl.name, decl.universe), decl)
        return index

    @cached_property
    def _relation_index(self) -> Dict[Tuple[str, int], RelationDecl]:
        index: Dict[Tuple[str, int], RelationDecl] = {}
        for decl in self.relations:
            index.setdefault((decl.name, decl.universe), decl)
        return index

    @cached_property
    def _proposition_index(self) -> Dict[str, RelationDecl]:
        index: Dict[str, RelationDecl] = {}
        for decl in self.relations:
            if decl.interpretation is RelationKind.PROPOSITION:
                index.setdefault(decl.name, decl)
        return index

    def variable(self, name: str) -> Optional[VariableDecl]:
        return self._variable_index.get(name)

    def function(self, name: str, universe: int) -> Optional[FunctionDecl]:
        return self._function_index.get((name, universe))

    def relation(self, name: str, universe: int) -> Optional[RelationDecl]:
        return self._relation_index.get((name, universe))

    def proposition(self, name: str) -> Optional[RelationDecl]:
        return self._proposition_index.get(name)

    def universe_index(self, name: str) -> Optional[int]:
        for i, universe in enumerate(self.universes):
            if universe.name == name:
                return i
        return None

    def universe(self, index: int) -> Universe:
        if not 0 <= index < len(self.universes):
            raise UnknownNameError(f"universe index {index} is out of range")
        return self.universes[index]

    def variables_of(self, universe: int) -> List[VariableDecl]:
        return [v for v in self.variables if v.universe == universe]

    def relations_of(self, universe: int) -> List[RelationDecl]:
        return [r for r in self.relations if r.universe == universe]

    def functions_of(self, universe: int) -> List[FunctionDecl]:
        return [f for f in self.functions if f.universe == universe]

    def summary(self) -> str:
        """Render the (U, V, F, R) tuple."""
        def group(names: Sequence[str]) -> str:
            return "{" + ", ".join(names) + "}"

        indices = range(len(self.universes))
        u = ", ".join(f"U{i + 1} = {self.universes[i].describe()}" for i in indices)
        v = ", ".join(group([d.name for d in self.variables_of(i)]) for i in indices)
        f = ", ".join(group([d.name for d in self.functions_of(i)]) for i in indices)
        r = ", ".join(group([d.name for d in self.relations_of(i)]) for i in indices)
        return f"U = ({u})\nV = ({v})\nF = ({f})\nR = ({r})"

    @classmethod
    def propositional(cls, names: Iterable[str], universe_name: str = "Prop") -> "Language":
        """A language with one boolean universe and 0-ary relation symbols."""
        builder = LanguageBuilder()
        index = builder.add_universe(Universe.boolean(universe_name))
        for name in names:
            builder.add_proposition(name, index)
        return builder.build()


class LanguageBuilder:
    """Accumulates declarations and fills in default relations and functions."""

    def __init__(self) -> None:
        self._universes: List[Universe] = []
        self._relation_names: List[Optional[Tuple[str, ...]]] = []
        self._function_names: List[Optional[Tuple[str, ...]]] = []
        self._variables: List[VariableDecl] = []
        self._propositions: List[Tuple[str, int]] = []

    def add_universe(
        self,
        universe: Universe,
        relations: Optional[Sequence[str]] = None,
        functions: Optional[Sequence[str]] = None,
    ) -> int:
        self._universes.append(universe)
        self._relation_names.append(tuple(relations) if relations is not None else None)
        self._function_names.append(tuple(functions) if functions is not None else None)
        return len(self._universes) - 1

    def add_variable(self, name: str, universe: int) -> None:
        self._variables.append(VariableDecl(name, universe))

    def add_proposition(self, name: str, universe: int) -> None:
        self._propositions.append((name, universe))

    def build(self) -> Language:
        relations: List[RelationDecl] = []
        functions: List[FunctionDecl] = []
        for i, universe in enumerate(self._universes):
            symbols = self._relation_names[i]
            for symbol in symbols if symbols is not None else universe.default_relations():
                relations.append(RelationDecl(symbol, i, 2, RelationKind(symbol)))
            for name, owner in self._propositions:
                if owner == i:
                    relations.append(RelationDecl(name, i, 0, RelationKind.PROPOSITION))
            names = self._function_names[i]
            for name in names if names is not None else universe.default_functions():
                if name not in ARITHMETIC_FUNCTIONS:
                    raise UnknownNameError(f"function {name} has no interpretation")
                functions.append(FunctionDecl(name, i, ARITHMETIC_FUNCTIONS[name]))
        return Language(
            universes=tuple(self._universes),
            variables=tuple(self._variables),
            functions=tuple(functions),
            relations=tuple(relations),
        )


def _validate_universe(universe: Universe) -> List[Diagnostic]:
    issues: List[Diagnostic] = []
    where = f"universe {universe.name}"
    if universe.kind is CarrierKind.REAL:
        if universe.lo is None or universe.hi is None:
            issues.append(Diagnostic.error(f"{where}: real interval needs numeric bounds", element=universe.name))
        elif universe.lo > universe.hi:
            issues.append(Diagnostic.error(
                f"{where}: lower bound {format_value(universe.lo)} exceeds upper bound "
                f"{format_value(universe.hi)}",
                element=universe.name,
            ))
    if universe.kind is CarrierKind.ENUM:
        if not universe.values:
            issues.append(Diagnostic.error(f"{where}: enumeration has no values", element=universe.name))
        seen = set()
        for value in universe.values:
            if value_key(value) in seen:
                issues.append(Diagnostic.error(
                    f"{where}: duplicate value {format_value(value)}", element=universe.name))
            seen.add(value_key(value))
    if universe.order:
        if universe.kind is not CarrierKind.ENUM:
            issues.append(Diagnostic.error(
                f"{where}: an order can only be declared on an enumeration", element=universe.name))
            return issues
        for a, b in universe.order:
            for value in (a, b):
                if not universe.contains(value):
                    issues.append(Diagnostic.error(
                        f"{where}: order mentions unknown value {format_value(value)}",
                        element=universe.name,
                    ))
            if same_value(a, b):
                issues.append(Diagnostic.error(
                    f"{where}: order pair ({format_value(a)}, {format_value(b)}) is reflexive",
                    element=universe.name,
                ))
        proper = Universe.enumeration(
            universe.name, universe.values, [(a, b) for a, b in universe.order if not same_value(a, b)])
        named = {value_key(v): v for pair in proper.order for v in pair}
        cyclic = sorted({format_value(named[a]) for a, b in proper.strict_order if a == b})
        if cyclic:
            issues.append(Diagnostic.error(
                f"{where}: order is not antisymmetric (cycle through {', '.join(cyclic)})",
                element=universe.name,
            ))
    return issues


def validate_language(lang: Language) -> List[Diagnostic]:
    """Check every Language invariant; an empty list means well-formed."""
    issues: List[Diagnostic] = []
    count = len(lang.universes)

    names = set()
    for universe in lang.universes:
        if universe.name in names:
            issues.append(Diagnostic.error(f"duplicate universe name {universe.name}", element=universe.name))
        names.add(universe.name)
        issues.extend(_validate_universe(universe))

    names = set()
    for decl in lang.variables:
        if decl.name in names:
            issues.append(Diagnostic.error(f"duplicate variable {decl.name}", element=decl.name))
        names.add(decl.name)
        if not 0 <= decl.universe < count:
            issues.append(Diagnostic.error(
                f"variable {decl.name} references missing universe index {decl.universe}", element=decl.name))

    keys = set()
    for fn in lang.functions:
        # Function and relation issues are reported against the owning universe.
        owner = lang.universes[fn.universe].name if 0 <= fn.universe < count else fn.name
        if (fn.name, fn.universe) in keys:
            issues.append(Diagnostic.error(f"duplicate function {fn.name} in universe {owner}", element=owner))
        keys.add((fn.name, fn.universe))
        if not 0 <= fn.universe < count:
            issues.append(Diagnostic.error(
                f"function {fn.name} references missing universe index {fn.universe}", element=fn.name))
            continue
        if fn.name not in ARITHMETIC_FUNCTIONS or lang.universes[fn.universe].kind is not CarrierKind.REAL:
            issues.append(Diagnostic.error(
                f"function {fn.name} has no interpretation on universe {owner}",
                element=owner,
            ))
        elif fn.arity != ARITHMETIC_FUNCTIONS[fn.name]:
            issues.append(Diagnostic.error(
                f"function {fn.name} must have arity {ARITHMETIC_FUNCTIONS[fn.name]}", element=owner))

    keys = set()
    propositions = set()
    for rel in lang.relations:
        owner = rel.name
        if 0 <= rel.universe < count and rel.interpretation is not RelationKind.PROPOSITION:
            owner = lang.universes[rel.universe].name
        if (rel.name, rel.universe) in keys:
            issues.append(Diagnostic.error(f"duplicate relation {rel.name} in universe {owner}", element=owner))
        keys.add((rel.name, rel.universe))
        if not 0 <= rel.universe < count:
            issues.append(Diagnostic.error(
                f"relation {rel.name} references missing universe index {rel.universe}", element=rel.name))
            continue
        universe = lang.universes[rel.universe]
        if rel.interpretation is RelationKind.PROPOSITION:
            if rel.name in propositions:
                issues.append(Diagnostic.error(f"duplicate propositional symbol {rel.name}", element=rel.name))
            propositions.add(rel.name)
            if rel.arity != 0:
                issues.append(Diagnostic.error(f"propositional symbol {rel.name} must have arity 0", element=rel.name))
            continue
        if rel.arity != 2:
            issues.append(Diagnostic.error(f"relation {rel.name} must have arity 2", element=owner))
        if rel.name != rel.interpretation.value:
            issues.append(Diagnostic.error(
                f"relation {rel.name} does not match its interpretation {rel.interpretation.value}",
                element=owner,
            ))
        if rel.interpretation.value in ORDER_COMPARISONS:
            ordered = universe.kind is CarrierKind.REAL or (universe.kind is CarrierKind.ENUM and universe.order)
            if not ordered:
                issues.append(Diagnostic.error(
                    f"relation {rel.name} needs an order on universe {universe.name}", element=owner))

    for i, universe in enumerate(lang.universes):
        if lang.relation("=", i) is None:
            issues.append(Diagnostic.error(
                f"universe {universe.name} lacks the equality relation", element=universe.name))

    if issues:
        logger.debug(f"Language validation found {len(issues)} issue(s)")
    return issues
