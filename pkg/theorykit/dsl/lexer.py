"""Tokenizer for theory files."""

import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from theorykit.models.diagnostic import Diagnostic
from theorykit.models.language import RESERVED_WORDS


class TokenKind(str, Enum):
    NAME = "name"
    KEYWORD = "keyword"
    NUMBER = "number"
    STRING = "string"
    SYMBOL = "symbol"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int

    def is_symbol(self, *texts: str) -> bool:
        return self.kind is TokenKind.SYMBOL and self.text in texts

    def is_keyword(self, *texts: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.text in texts

    def is_word(self, *texts: str) -> bool:
        """Contextual keywords (order, derives, dim, ...) lex as names."""
        return self.kind is TokenKind.NAME and self.text in texts

    def describe(self) -> str:
        if self.kind is TokenKind.EOF:
            return "end of input"
        return f"'{self.text}'"


# Longest symbols first.
SYMBOLS = ("<->", "->", ">=", "<=", "!", "&", "|", "=", ">", "<", "(", ")", "[", "]",
           "{", "}", ",", ";", ":", "+", "-", "*", "/")

_TOKEN = re.compile(
    r"(?P<space>[ \t\r\f\v]+)"
    r"|(?P<newline>\n)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<number>[0-9]+(?:\.[0-9]+)?)"
    r"|(?P<name>[^\W\d]\w*)"
    r"|(?P<string>\"(?:[^\"\\\n]|\\.)*\")"
    r"|(?P<symbol>" + "|".join(re.escape(s) for s in SYMBOLS) + ")"
)

_ESCAPES = {"n": "\n", "t": "\t", "\"": "\"", "\\": "\\"}


def unescape(literal: str) -> str:
    """Body of a quoted string literal with escapes resolved."""
    body = literal[1:-1]
    return re.sub(r"\\(.)", lambda m: _ESCAPES.get(m.group(1), m.group(1)), body)


def tokenize(text: str) -> Tuple[List[Token], List[Diagnostic]]:
    """
    Split text into tokens.

    Unknown characters and unterminated strings are reported and skipped;
    the token list always ends with an EOF token.
    """
    tokens: List[Token] = []
    diagnostics: List[Diagnostic] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        column = pos - line_start + 1
        match = _TOKEN.match(text, pos)
        if match is None:
            char = text[pos]
            if char == "\"":
                diagnostics.append(Diagnostic.error("unterminated string", line, column))
                end = text.find("\n", pos)
                pos = len(text) if end == -1 else end
            else:
                diagnostics.append(Diagnostic.error(f"unexpected character {char!r}", line, column))
                pos += 1
            continue
        kind = match.lastgroup
        value = match.group()
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind == "name":
            token_kind = TokenKind.KEYWORD if value in RESERVED_WORDS else TokenKind.NAME
            tokens.append(Token(token_kind, value, line, column))
        elif kind == "number":
            tokens.append(Token(TokenKind.NUMBER, value, line, column))
        elif kind == "string":
            tokens.append(Token(TokenKind.STRING, value, line, column))
        elif kind == "symbol":
            tokens.append(Token(TokenKind.SYMBOL, value, line, column))
        pos = match.end()
    tokens.append(Token(TokenKind.EOF, "", line, pos - line_start + 1))
    return tokens, diagnostics
