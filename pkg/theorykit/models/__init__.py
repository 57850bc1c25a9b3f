"""Data models: typed language, formulas, diagnostics and report schemas."""

from theorykit.models.diagnostic import Diagnostic, Severity, has_errors
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
    Model,
    Not,
    Or,
    Term,
    Theory,
    Variable,
    atoms_of,
    conjunction,
    evaluate_formula,
    evaluate_term,
    format_atom,
    format_formula,
    format_term,
    symbol,
    typecheck_atom,
    typecheck_term,
    variables_of,
)
from theorykit.models.language import (
    CarrierKind,
    FunctionDecl,
    Language,
    LanguageBuilder,
    RelationDecl,
    RelationKind,
    Universe,
    VariableDecl,
    validate_language,
)

__all__ = [
    "Diagnostic",
    "Severity",
    "has_errors",
    "CarrierKind",
    "RelationKind",
    "Universe",
    "VariableDecl",
    "FunctionDecl",
    "RelationDecl",
    "Language",
    "LanguageBuilder",
    "validate_language",
    "Variable",
    "Constant",
    "Application",
    "Term",
    "Atom",
    "Formula",
    "AtomRef",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Theory",
    "Model",
    "Dimension",
    "ConstructRecord",
    "symbol",
    "conjunction",
    "typecheck_term",
    "typecheck_atom",
    "evaluate_term",
    "evaluate_formula",
    "atoms_of",
    "variables_of",
    "format_term",
    "format_atom",
    "format_formula",
]
