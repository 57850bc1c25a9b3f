"""Theory files: lexer, parser, renderer and exporters."""

from theorykit.dsl.document import Hypothesis, ParseResult, TheoryDocument, dump_document
from theorykit.dsl.export import export_dot, export_horn_kb, export_json, mangle
from theorykit.dsl.parser import parse_formula, parse_theory, parse_theory_file
from theorykit.dsl.render import render_theory

__all__ = [
    "Hypothesis",
    "TheoryDocument",
    "ParseResult",
    "dump_document",
    "parse_theory",
    "parse_theory_file",
    "parse_formula",
    "render_theory",
    "export_dot",
    "export_horn_kb",
    "export_json",
    "mangle",
]
