"""Recursive-descent parser for theory files.

Grammar (statements may end with an optional `;`)::

    type <Name> = real[<num>, <num>] | bool | { <value>, ... }
         [order { <value> > <value>; ... }] [relations { <op>, ... }] [functions { <fn>, ... }]
    atom <Name>, ... : <Type>
    var <Name>, ... : <Type>
    construct <Name> { derives "<text>", ...; def "<text>"; dimensionality uni|multi;
                       dim <Var> from data|abductive shape scalar|collection [note "<text>"]; }
    prop <Id> : <formula>

Formulas use `! & | -> <->` (tightest first, `->` associates to the right)
over comparisons `<term> <op> <term>` and propositional symbols; terms use
`+ - * /`, unary minus and tuple constants `(a, b)`.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from theorykit.core.config import get_settings
from theorykit.core.errors import TheoryError, TheorySyntaxError
from theorykit.dsl.document import Hypothesis, Location, ParseResult, TheoryDocument
from theorykit.dsl.lexer import Token, TokenKind, tokenize, unescape
from theorykit.models.diagnostic import Diagnostic, has_errors
from theorykit.models.formula import (
    And,
    Application,
    Atom,
    AtomRef,
    Constant,
    ConstructRecord,
    Dimension,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Term,
    Variable,
    typecheck_atom,
)
from theorykit.models.language import (
    ARITHMETIC_FUNCTIONS,
    COMPARISONS,
    Language,
    LanguageBuilder,
    Universe,
    Value,
    format_value,
    validate_language,
)

logger = logging.getLogger(__name__)

STATEMENT_KEYWORDS = ("type", "var", "atom", "construct", "prop")
ARITHMETIC_SYMBOLS = ("+", "-", "*", "/")
MAX_NUMERAL_LENGTH = 4000


class _ParseError(Exception):
    def __init__(self, diagnostic: Diagnostic):
        super().__init__(diagnostic.message)
        self.diagnostic = diagnostic


# Untyped terms; constants get their universe from the comparison they sit in.

@dataclass(frozen=True)
class _RawName:
    name: str
    token: Token


@dataclass(frozen=True)
class _RawLiteral:
    value: Value
    token: Token


@dataclass(frozen=True)
class _RawTuple:
    items: Tuple["_Raw", ...]
    token: Token


@dataclass(frozen=True)
class _RawApply:
    function: str
    args: Tuple["_Raw", ...]
    token: Token


_Raw = Union[_RawName, _RawLiteral, _RawTuple, _RawApply]


class TheoryParser:
    """Parses one theory text; with a fixed language it parses single formulas."""

    def __init__(self, text: str, language: Optional[Language] = None, max_depth: Optional[int] = None):
        self.tokens, self.diagnostics = tokenize(text)
        self.pos = 0
        self.depth = 0
        self.max_depth = max_depth if max_depth is not None else get_settings().parser_max_depth
        self._fixed_language = language
        self._language: Optional[Language] = language
        self.builder = LanguageBuilder()
        self.type_index: Dict[str, int] = {}
        self.declared: Dict[str, str] = {}
        self.constructs: List[ConstructRecord] = []
        self.hypotheses: List[Hypothesis] = []
        self.spans: Dict[str, Location] = {}

    # ------------------------------------------------------------------
    # Token helpers
    # ------------------------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def fail(self, message: str, token: Optional[Token] = None) -> _ParseError:
        token = token or self.peek()
        return _ParseError(Diagnostic.error(message, token.line, token.column))

    def accept(self, symbol: str) -> bool:
        if self.peek().is_symbol(symbol):
            self.advance()
            return True
        return False

    def expect(self, symbol: str, context: str) -> Token:
        token = self.peek()
        if not token.is_symbol(symbol):
            raise self.fail(f"expected '{symbol}' {context}, found {token.describe()}")
        return self.advance()

    def expect_name(self, what: str) -> Token:
        token = self.peek()
        if token.kind is TokenKind.KEYWORD:
            raise self.fail(f"keyword '{token.text}' cannot be used as {what}")
        if token.kind is not TokenKind.NAME:
            raise self.fail(f"expected {what}, found {token.describe()}")
        return self.advance()

    def expect_word(self, *words: str) -> Token:
        token = self.peek()
        if not token.is_word(*words):
            raise self.fail(f"expected {' or '.join(repr(w) for w in words)}, found {token.describe()}")
        return self.advance()

    def enter(self, token: Token) -> None:
        self.depth += 1
        if self.depth > self.max_depth:
            raise self.fail(f"nesting deeper than {self.max_depth} levels", token)

    def leave(self) -> None:
        self.depth -= 1

    def warn(self, message: str, token: Token) -> None:
        self.diagnostics.append(Diagnostic.warning(message, token.line, token.column))

    def report(self, message: str, token: Token) -> None:
        self.diagnostics.append(Diagnostic.error(message, token.line, token.column))

    def language(self) -> Language:
        if self._language is None:
            self._language = self.builder.build()
        return self._language

    def _declaration_changed(self) -> None:
        if self._fixed_language is None:
            self._language = None

    # ------------------------------------------------------------------
    # Documents
    # ------------------------------------------------------------------

    def parse_document(self) -> ParseResult:
        while self.peek().kind is not TokenKind.EOF:
            start = self.pos
            try:
                self.statement()
            except _ParseError as exc:
                self.diagnostics.append(exc.diagnostic)
                self.synchronize(start)
            except RecursionError:
                self.report("input nests too deeply to parse", self.tokens[start])
                self.synchronize(start)

        lang = self.language()
        for diagnostic in validate_language(lang):
            location = self._element_location(diagnostic.element)
            if location is not None:
                diagnostic = replace(diagnostic, line=location[0], column=location[1])
            self.diagnostics.append(diagnostic)

        self.diagnostics.sort(key=lambda d: (d.line or 0, d.column or 0))
        if has_errors(self.diagnostics):
            logger.debug(f"Parse failed with {len(self.diagnostics)} diagnostic(s)")
            return ParseResult(None, self.diagnostics)
        document = TheoryDocument(
            language=lang,
            constructs=tuple(self.constructs),
            hypotheses=tuple(self.hypotheses),
            spans=dict(self.spans),
            warnings=tuple(self.diagnostics),
        )
        logger.info(
            f"Parsed theory: {len(lang.universes)} type(s), {len(lang.variables)} variable(s), "
            f"{len(self.hypotheses)} hypothesis(es)")
        return ParseResult(document, self.diagnostics)

    def _element_location(self, element: Optional[str]) -> Optional[Location]:
        if element is None:
            return None
        for kind in ("type", "var", "atom"):
            if f"{kind}:{element}" in self.spans:
                return self.spans[f"{kind}:{element}"]
        return None

    def synchronize(self, start: int) -> None:
        """Skip to the next statement keyword after a syntax error."""
        self.depth = 0
        if self.pos == start:
            self.advance()
        while self.peek().kind is not TokenKind.EOF and not self.peek().is_keyword(*STATEMENT_KEYWORDS):
            self.advance()

    def statement(self) -> None:
        token = self.peek()
        if token.is_keyword("type"):
            self.type_declaration()
        elif token.is_keyword("var", "atom"):
            self.symbol_declaration()
        elif token.is_keyword("construct"):
            self.construct_declaration()
        elif token.is_keyword("prop"):
            self.proposition()
        else:
            raise self.fail(
                f"expected a declaration (type, atom, var, construct or prop), found {token.describe()}")
        self.accept(";")

    # ------------------------------------------------------------------
    # Types
    # ------------------------------------------------------------------

    def type_declaration(self) -> None:
        self.advance()
        name_token = self.expect_name("a type name")
        name = name_token.text
        self.expect("=", f"after type name {name}")
        token = self.peek()
        if token.is_keyword("real"):
            self.advance()
            self.expect("[", "to open the real interval")
            lo = self.number()
            self.expect(",", "between interval bounds")
            hi = self.number()
            self.expect("]", "to close the real interval")
            universe = Universe.real(name, lo, hi)
        elif token.is_keyword("bool"):
            self.advance()
            universe = Universe.boolean(name)
        elif token.is_symbol("{"):
            self.advance()
            values: List[Value] = []
            if not self.peek().is_symbol("}"):
                values.append(self.value())
                while self.accept(","):
                    values.append(self.value())
            self.expect("}", "to close the value list")
            universe = Universe.enumeration(name, values)
        else:
            raise self.fail(f"expected 'real', 'bool' or '{{' for type {name}, found {token.describe()}")

        relations: Optional[List[str]] = None
        functions: Optional[List[str]] = None
        seen = set()
        while self.peek().is_word("order", "relations", "functions"):
            clause = self.advance()
            if clause.text in seen:
                raise self.fail(f"duplicate '{clause.text}' clause for type {name}", clause)
            seen.add(clause.text)
            if clause.text == "order":
                universe = replace(universe, order=tuple(self.order_pairs()))
            elif clause.text == "relations":
                relations = self.symbol_list(COMPARISONS, "a comparison operator")
            else:
                functions = self.symbol_list(tuple(ARITHMETIC_FUNCTIONS), "a function (+, -, *, /, neg)")

        self.spans[f"type:{name}"] = (name_token.line, name_token.column)
        index = self.builder.add_universe(universe, relations, functions)
        self.type_index.setdefault(name, index)
        self._declaration_changed()

    def order_pairs(self) -> List[Tuple[Value, Value]]:
        self.expect("{", "to open the order")
        pairs = []
        while not self.peek().is_symbol("}"):
            greater = self.value()
            self.expect(">", "between ordered values")
            lesser = self.value()
            pairs.append((greater, lesser))
            if not (self.accept(";") or self.accept(",")):
                break
        self.expect("}", "to close the order")
        return pairs

    def symbol_list(self, allowed: Sequence[str], what: str) -> List[str]:
        self.expect("{", "to open the list")
        symbols: List[str] = []
        while not self.peek().is_symbol("}"):
            token = self.peek()
            if token.kind not in (TokenKind.SYMBOL, TokenKind.NAME) or token.text not in allowed:
                raise self.fail(f"expected {what}, found {token.describe()}")
            symbols.append(self.advance().text)
            if not self.accept(","):
                break
        self.expect("}", "to close the list")
        return symbols

    def numeral(self, token: Token) -> Fraction:
        if len(token.text) > MAX_NUMERAL_LENGTH:
            raise self.fail(f"numeral longer than {MAX_NUMERAL_LENGTH} characters", token)
        return Fraction(token.text)

    def number(self) -> Fraction:
        negative = self.accept("-")
        token = self.peek()
        if token.kind is not TokenKind.NUMBER:
            raise self.fail(f"expected a number, found {token.describe()}")
        self.advance()
        value = self.numeral(token)
        if self.accept("/"):
            denominator = self.peek()
            if denominator.kind is not TokenKind.NUMBER or self.numeral(denominator) == 0:
                raise self.fail("expected a non-zero denominator", denominator)
            self.advance()
            value /= self.numeral(denominator)
        return -value if negative else value

    def value(self) -> Value:
        """A carrier value as written in type declarations."""
        token = self.peek()
        if token.kind is TokenKind.NUMBER or token.is_symbol("-"):
            return self.number()
        if token.is_keyword("True", "False"):
            self.advance()
            return token.text == "True"
        if token.kind is TokenKind.NAME:
            return self.advance().text
        if token.kind is TokenKind.STRING:
            return unescape(self.advance().text)
        if token.is_symbol("("):
            self.advance()
            self.enter(token)
            items: List[Value] = []
            trailing = False
            while not self.peek().is_symbol(")"):
                items.append(self.value())
                trailing = self.accept(",")
                if not trailing:
                    break
            self.expect(")", "to close the tuple")
            self.leave()
            if len(items) == 1 and not trailing:
                return items[0]
            return tuple(items)
        raise self.fail(f"expected a value, found {token.describe()}")

    # ------------------------------------------------------------------
    # Variables, propositional symbols, constructs
    # ------------------------------------------------------------------

    def symbol_declaration(self) -> None:
        kind = self.advance().text
        what = "a variable name" if kind == "var" else "a propositional symbol"
        names = [self.expect_name(what)]
        while self.accept(","):
            names.append(self.expect_name(what))
        self.expect(":", "before the type name")
        type_token = self.expect_name("a type name")
        index = self.type_index.get(type_token.text)
        if index is None:
            raise self.fail(f"unknown type {type_token.text}", type_token)
        for token in names:
            previous = self.declared.get(token.text)
            if previous is not None and previous != kind:
                self.report(f"{token.text} is already declared as {previous}", token)
                continue
            self.declared[token.text] = kind
            self.spans[f"{kind}:{token.text}"] = (token.line, token.column)
            if kind == "var":
                self.builder.add_variable(token.text, index)
            else:
                self.builder.add_proposition(token.text, index)
        self._declaration_changed()

    def construct_declaration(self) -> None:
        self.advance()
        name_token = self.expect_name("a construct name")
        self.expect("{", f"to open construct {name_token.text}")
        derives: List[str] = []
        definition = ""
        flag: Optional[Tuple[bool, Token]] = None
        dimensions: List[Dimension] = []
        while not self.peek().is_symbol("}"):
            field_token = self.expect_word("derives", "def", "dimensionality", "dim")
            if field_token.text == "derives":
                derives.append(self.string())
                while self.accept(","):
                    derives.append(self.string())
            elif field_token.text == "def":
                definition = self.string()
            elif field_token.text == "dimensionality":
                flag = (self.expect_word("uni", "multi").text == "multi", field_token)
            else:
                variable = self.expect_name("a variable name")
                self.expect_word("from")
                source = self.expect_word("data", "abductive").text
                self.expect_word("shape")
                shape = self.expect_word("scalar", "collection").text
                note = ""
                if self.peek().is_word("note"):
                    self.advance()
                    note = self.string()
                if self.declared.get(variable.text) != "var":
                    self.report(f"construct {name_token.text}: unknown variable {variable.text}", variable)
                dimensions.append(Dimension(variable.text, source, shape, note))
            self.accept(";")
        self.expect("}", f"to close construct {name_token.text}")

        multidimensional = len(dimensions) >= 2
        if flag is not None:
            if flag[0] != multidimensional:
                self.warn(
                    f"construct {name_token.text} is declared {'multi' if flag[0] else 'uni'}dimensional "
                    f"but has {len(dimensions)} dimension(s)", flag[1])
            multidimensional = flag[0]
        if any(c.name == name_token.text for c in self.constructs):
            self.report(f"duplicate construct {name_token.text}", name_token)
            return
        self.spans[f"construct:{name_token.text}"] = (name_token.line, name_token.column)
        self.constructs.append(ConstructRecord(
            name=name_token.text,
            derived_from=tuple(derives),
            definition=definition,
            multidimensional=multidimensional,
            dimensions=tuple(dimensions),
        ))

    def string(self) -> str:
        token = self.peek()
        if token.kind is not TokenKind.STRING:
            raise self.fail(f"expected a quoted string, found {token.describe()}")
        return unescape(self.advance().text)

    # ------------------------------------------------------------------
    # Hypotheses and formulas
    # ------------------------------------------------------------------

    def proposition(self) -> None:
        self.advance()
        id_token = self.expect_name("a hypothesis identifier")
        self.expect(":", f"after hypothesis {id_token.text}")
        formula = self.formula()
        if formula_depth(formula) > self.max_depth:
            raise self.fail(f"formula nests deeper than {self.max_depth} levels", id_token)
        if any(h.id == id_token.text for h in self.hypotheses):
            self.report(f"duplicate hypothesis identifier {id_token.text}", id_token)
            return
        self.spans[f"prop:{id_token.text}"] = (id_token.line, id_token.column)
        self.hypotheses.append(Hypothesis(id_token.text, formula))

    def formula(self) -> Formula:
        left = self.implication()
        while self.accept("<->"):
            left = Iff(left, self.implication())
        return left

    def implication(self) -> Formula:
        operands = [self.disjunction()]
        while self.accept("->"):
            operands.append(self.disjunction())
        result = operands[-1]
        for operand in reversed(operands[:-1]):
            result = Implies(operand, result)
        return result

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.accept("|"):
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.negation()
        while self.accept("&"):
            left = And(left, self.negation())
        return left

    def negation(self) -> Formula:
        count = 0
        while self.peek().is_symbol("!"):
            token = self.advance()
            count += 1
            if count > self.max_depth:
                raise self.fail(f"more than {self.max_depth} consecutive negations", token)
        result = self.primary()
        for _ in range(count):
            result = Not(result)
        return result

    def primary(self) -> Formula:
        token = self.peek()
        if token.is_symbol("("):
            if self._opens_term():
                return self.comparison()
            self.advance()
            self.enter(token)
            inner = self.formula()
            self.expect(")", "to close the parenthesized formula")
            self.leave()
            return inner
        if token.kind is TokenKind.NAME:
            decl = self.language().proposition(token.text)
            follower = self.peek(1)
            if decl is not None and not follower.is_symbol(*COMPARISONS, *ARITHMETIC_SYMBOLS):
                self.advance()
                return AtomRef(Atom(token.text, (), decl.universe))
        return self.comparison()

    def _opens_term(self) -> bool:
        """Whether the '(' at the cursor starts a term, judged by what follows its match."""
        level = 0
        i = self.pos
        while i < len(self.tokens):
            token = self.tokens[i]
            if token.kind is TokenKind.EOF:
                return False
            if token.is_symbol("("):
                level += 1
            elif token.is_symbol(")"):
                level -= 1
                if level == 0:
                    follower = self.tokens[min(i + 1, len(self.tokens) - 1)]
                    return follower.is_symbol(*COMPARISONS, *ARITHMETIC_SYMBOLS)
            i += 1
        return False

    def comparison(self) -> AtomRef:
        start = self.peek()
        lhs = self.term()
        operator = self.peek()
        if not operator.is_symbol(*COMPARISONS):
            if isinstance(lhs, _RawName) and self.language().variable(lhs.name) is None:
                raise self.fail(f"unknown proposition or variable {lhs.name}", lhs.token)
            raise self.fail(f"expected a comparison operator (=, >, <, >=, <=), found {operator.describe()}")
        self.advance()
        rhs = self.term()
        return AtomRef(self.typed_atom(operator.text, lhs, rhs, start))

    def term(self) -> _Raw:
        left = self.product()
        while self.peek().is_symbol("+", "-"):
            token = self.advance()
            left = _RawApply(token.text, (left, self.product()), token)
        return left

    def product(self) -> _Raw:
        left = self.signed()
        while self.peek().is_symbol("*", "/"):
            token = self.advance()
            left = _RawApply(token.text, (left, self.signed()), token)
        return left

    def signed(self) -> _Raw:
        token = self.peek()
        if not token.is_symbol("-"):
            return self.term_primary()
        self.advance()
        if self.peek().kind is TokenKind.NUMBER:
            return _RawLiteral(-self.numeral(self.advance()), token)
        self.enter(token)
        operand = self.signed()
        self.leave()
        return _RawApply("neg", (operand,), token)

    def term_primary(self) -> _Raw:
        token = self.peek()
        if token.kind is TokenKind.NUMBER:
            self.advance()
            return _RawLiteral(self.numeral(token), token)
        if token.is_keyword("True", "False"):
            self.advance()
            return _RawLiteral(token.text == "True", token)
        if token.kind is TokenKind.STRING:
            self.advance()
            return _RawLiteral(unescape(token.text), token)
        if token.kind is TokenKind.NAME:
            self.advance()
            return _RawName(token.text, token)
        if token.is_symbol("("):
            self.advance()
            self.enter(token)
            if self.accept(")"):
                self.leave()
                return _RawTuple((), token)
            first = self.term()
            if not self.accept(","):
                self.expect(")", "to close the parenthesized term")
                self.leave()
                return first
            items = [first]
            while not self.peek().is_symbol(")"):
                items.append(self.term())
                if not self.accept(","):
                    break
            self.expect(")", "to close the tuple")
            self.leave()
            return _RawTuple(tuple(items), token)
        raise self.fail(f"expected a term, found {token.describe()}")

    # ------------------------------------------------------------------
    # Typing
    # ------------------------------------------------------------------

    def _universe_of(self, raw: _Raw, lang: Language) -> Optional[int]:
        if isinstance(raw, _RawName):
            decl = lang.variable(raw.name)
            return decl.universe if decl is not None else None
        if isinstance(raw, _RawApply):
            for arg in raw.args:
                index = self._universe_of(arg, lang)
                if index is not None:
                    return index
        return None

    def _value_of(self, raw: _Raw, lang: Language) -> Value:
        if isinstance(raw, _RawLiteral):
            return raw.value
        if isinstance(raw, _RawName) and lang.variable(raw.name) is None:
            return raw.name
        if isinstance(raw, _RawTuple):
            return tuple(self._value_of(item, lang) for item in raw.items)
        raise self.fail("tuple constants may only contain values", raw.token)

    def _build(self, raw: _Raw, index: int, lang: Language) -> Term:
        if isinstance(raw, _RawName) and lang.variable(raw.name) is not None:
            universe = lang.universe(index)
            if universe.contains(raw.name):
                raise self.fail(
                    f"ambiguous name {raw.name}: both a variable and a value of type {universe.name}", raw.token)
            return Variable(raw.name)
        if isinstance(raw, _RawApply):
            return Application(raw.function, tuple(self._build(arg, index, lang) for arg in raw.args))
        value = self._value_of(raw, lang)
        universe = lang.universe(index)
        if not universe.contains(value):
            if isinstance(raw, _RawName):
                raise self.fail(
                    f"unknown name {raw.name}: neither a variable nor a value of type {universe.name}", raw.token)
            raise self.fail(f"type mismatch: {format_value(value)} is not a value of type {universe.name}",
                            raw.token)
        return Constant(universe.coerce(value), index)

    def typed_atom(self, operator: str, lhs: _Raw, rhs: _Raw, start: Token) -> Atom:
        lang = self.language()
        index = self._universe_of(lhs, lang)
        if index is None:
            index = self._universe_of(rhs, lang)
        if index is None:
            for side in (lhs, rhs):
                if isinstance(side, _RawName):
                    raise self.fail(f"unknown variable {side.name}", side.token)
            raise self.fail("cannot determine the type of a comparison without variables", start)
        if lang.relation(operator, index) is None:
            raise self.fail(f"relation {operator} is not declared on type {lang.universe(index).name}", start)
        atom = Atom(operator, (self._build(lhs, index, lang), self._build(rhs, index, lang)), index)
        try:
            typecheck_atom(atom, lang)
        except TheoryError as exc:
            raise self.fail(str(exc), start) from exc
        return atom

    def parse_single_formula(self) -> Formula:
        try:
            formula = self.formula()
            if self.peek().kind is not TokenKind.EOF:
                raise self.fail(f"unexpected {self.peek().describe()} after formula")
            if formula_depth(formula) > self.max_depth:
                raise self.fail(f"formula nests deeper than {self.max_depth} levels", self.tokens[0])
        except _ParseError as exc:
            self.diagnostics.append(exc.diagnostic)
        except RecursionError:
            self.report("formula nests too deeply to parse", self.tokens[0])
        if has_errors(self.diagnostics):
            raise TheorySyntaxError(self.diagnostics)
        return formula


def formula_depth(f: Formula) -> int:
    """Height of a formula tree, counting connectives and term applications."""
    deepest = 0
    stack: List[Tuple[object, int]] = [(f, 1)]
    while stack:
        node, depth = stack.pop()
        deepest = max(deepest, depth)
        if isinstance(node, Not):
            stack.append((node.operand, depth + 1))
        elif isinstance(node, (And, Or, Implies, Iff)):
            stack.append((node.left, depth + 1))
            stack.append((node.right, depth + 1))
        elif isinstance(node, AtomRef):
            stack.extend((arg, depth + 1) for arg in node.atom.args)
        elif isinstance(node, Application):
            stack.extend((arg, depth + 1) for arg in node.args)
    return deepest


def decode_source(source: Union[str, bytes]) -> Tuple[str, List[Diagnostic]]:
    """UTF-8 text of a source; undecodable bytes are replaced and reported."""
    diagnostics: List[Diagnostic] = []
    if isinstance(source, bytes):
        try:
            text = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            prefix = source[: exc.start]
            line = prefix.count(b"\n") + 1
            column = exc.start - (prefix.rfind(b"\n") + 1) + 1
            diagnostics.append(Diagnostic.error("input is not valid UTF-8", line, column))
            text = source.decode("utf-8", errors="replace")
    else:
        text = source
    if text.startswith("\ufeff"):
        text = text[1:]
    return text, diagnostics


def parse_theory(source: Union[str, bytes], max_depth: Optional[int] = None) -> ParseResult:
    """
    Parse a theory file.

    Never raises for malformed input: every problem is a located diagnostic,
    and the document is None when any of them is an error.
    """
    text, diagnostics = decode_source(source)
    parser = TheoryParser(text, max_depth=max_depth)
    parser.diagnostics[:0] = diagnostics
    return parser.parse_document()


def parse_theory_file(path: Union[str, Path], max_depth: Optional[int] = None) -> ParseResult:
    return parse_theory(Path(path).read_bytes(), max_depth=max_depth)


def parse_formula(text: str, language: Language, max_depth: Optional[int] = None) -> Formula:
    """
    Parse one formula against an existing language.

    Raises:
        TheorySyntaxError: with the located diagnostics
    """
    return TheoryParser(text, language=language, max_depth=max_depth).parse_single_formula()
