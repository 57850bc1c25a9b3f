"""Pydantic schemas for JSON reports and document dumps."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


# ============================================================================
# Diagnostics and deduction traces
# ============================================================================

class DiagnosticOut(BaseModel):
    """Serialized diagnostic."""

    severity: str = Field(..., description="error or warning")
    message: str
    line: Optional[int] = Field(None, description="1-based line, when located")
    column: Optional[int] = Field(None, description="1-based column, when located")


class ResolutionStepOut(BaseModel):
    """One resolution inference of a derivation trace."""

    resolvent: List[str] = Field(..., description="Literals of the derived clause")
    parents: List[int] = Field(..., description="Clause ids of the two parents")
    pivot: str = Field(..., description="Atom resolved upon")


class SatReportOut(BaseModel):
    """Verdict of a satisfiability check with its derivation trace."""

    satisfiable: bool
    clauses: List[List[str]] = Field(default_factory=list, description="Input clauses, indexed by id")
    steps: List[ResolutionStepOut] = Field(default_factory=list)


# ============================================================================
# Document dump
# ============================================================================

class UniverseOut(BaseModel):
    name: str
    kind: str
    lo: Optional[str] = None
    hi: Optional[str] = None
    values: List[str] = Field(default_factory=list)
    order: List[List[str]] = Field(default_factory=list)
    relations: List[str] = Field(default_factory=list)
    functions: List[str] = Field(default_factory=list)
    propositions: List[str] = Field(default_factory=list)


class VariableOut(BaseModel):
    name: str
    universe: str


class FunctionOut(BaseModel):
    name: str
    universe: str
    arity: int


class RelationOut(BaseModel):
    name: str
    universe: str
    arity: int
    interpretation: str


class LanguageOut(BaseModel):
    universes: List[UniverseOut] = Field(default_factory=list)
    variables: List[VariableOut] = Field(default_factory=list)
    functions: List[FunctionOut] = Field(default_factory=list)
    relations: List[RelationOut] = Field(default_factory=list)


class DimensionOut(BaseModel):
    variable: str
    universe: Optional[str] = None
    source: str
    shape: str
    note: str = ""


class ConstructOut(BaseModel):
    name: str
    derived_from: List[str] = Field(default_factory=list)
    definition: str = ""
    multidimensional: bool = False
    dimensions: List[DimensionOut] = Field(default_factory=list)


class HypothesisOut(BaseModel):
    id: str
    formula: str
    atoms: List[str] = Field(default_factory=list)
    line: Optional[int] = None


class DocumentDump(BaseModel):
    """Traceability dump of a theory document."""

    language: LanguageOut
    constructs: List[ConstructOut] = Field(default_factory=list)
    hypotheses: List[HypothesisOut] = Field(default_factory=list)


# ============================================================================
# Command-line run report
# ============================================================================

class RunReport(BaseModel):
    """Result of one command-line run."""

    command: str = Field(..., description="Subcommand name")
    input_digest: Optional[str] = Field(None, description="sha256 of the input file")
    tool_version: str
    verdict: Optional[Any] = Field(None, description="Command verdict (bool or text)")
    artifacts: Dict[str, Any] = Field(default_factory=dict)
    diagnostics: List[DiagnosticOut] = Field(default_factory=list)
    timing_ms: Optional[float] = Field(None, description="Wall time, omitted with --no-timing")
