"""Parsed theory documents and their JSON dump."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from theorykit.core.errors import UnknownNameError
from theorykit.models.diagnostic import Diagnostic
from theorykit.models.formula import ConstructRecord, Formula, atoms_of, format_atom, format_formula
from theorykit.models.language import Language, RelationKind, format_value
from theorykit.models.schema import (
    ConstructOut,
    DimensionOut,
    DocumentDump,
    FunctionOut,
    HypothesisOut,
    LanguageOut,
    RelationOut,
    UniverseOut,
    VariableOut,
)

Location = Tuple[int, int]


@dataclass(frozen=True)
class Hypothesis:
    id: str
    formula: Formula


@dataclass(frozen=True)
class TheoryDocument:
    """Language, construct records and named hypotheses of one theory file.

    Equality is structural; source locations and warnings do not take part.
    """

    language: Language = field(default_factory=Language)
    constructs: Tuple[ConstructRecord, ...] = ()
    hypotheses: Tuple[Hypothesis, ...] = ()
    spans: Dict[str, Location] = field(default_factory=dict, compare=False, hash=False)
    warnings: Tuple[Diagnostic, ...] = field(default=(), compare=False)

    def theory(self) -> List[Formula]:
        return [h.formula for h in self.hypotheses]

    def labels(self) -> List[str]:
        return [h.id for h in self.hypotheses]

    def hypothesis(self, hypothesis_id: str) -> Optional[Hypothesis]:
        for h in self.hypotheses:
            if h.id == hypothesis_id:
                return h
        return None

    def location(self, name: str, kind: str = "prop") -> Optional[Location]:
        """Declaration site; kind is one of type, atom, var, construct, prop."""
        return self.spans.get(f"{kind}:{name}")


@dataclass
class ParseResult:
    """Document when parsing succeeded, plus every diagnostic (warnings included)."""

    document: Optional[TheoryDocument]
    diagnostics: List[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.document is not None

    @property
    def errors(self) -> List[Diagnostic]:
        return [d for d in self.diagnostics if d.is_error]


def dump_document(doc: TheoryDocument) -> DocumentDump:
    """Traceability dump: language, constructs and hypotheses in declaration order."""
    lang = doc.language
    universes = []
    for i, universe in enumerate(lang.universes):
        universes.append(UniverseOut(
            name=universe.name,
            kind=universe.kind.value,
            lo=format_value(universe.lo) if universe.lo is not None else None,
            hi=format_value(universe.hi) if universe.hi is not None else None,
            values=[format_value(v) for v in universe.values],
            order=[[format_value(a), format_value(b)] for a, b in universe.order],
            relations=[r.name for r in lang.relations_of(i) if r.interpretation is not RelationKind.PROPOSITION],
            functions=[f.name for f in lang.functions_of(i)],
            propositions=[r.name for r in lang.relations_of(i) if r.interpretation is RelationKind.PROPOSITION],
        ))

    def universe_name(index: int) -> str:
        return lang.universes[index].name if 0 <= index < len(lang.universes) else str(index)

    language = LanguageOut(
        universes=universes,
        variables=[VariableOut(name=v.name, universe=universe_name(v.universe)) for v in lang.variables],
        functions=[FunctionOut(name=f.name, universe=universe_name(f.universe), arity=f.arity)
                   for f in lang.functions],
        relations=[RelationOut(name=r.name, universe=universe_name(r.universe), arity=r.arity,
                               interpretation=r.interpretation.value)
                   for r in lang.relations],
    )

    constructs = []
    for record in doc.constructs:
        dimensions = []
        for dim in record.dimensions:
            try:
                dim_universe: Optional[str] = universe_name(record.universe_of(dim, lang))
            except UnknownNameError:
                dim_universe = None
            dimensions.append(DimensionOut(
                variable=dim.variable,
                universe=dim_universe,
                source=dim.source,
                shape=dim.shape,
                note=dim.note,
            ))
        constructs.append(ConstructOut(
            name=record.name,
            derived_from=list(record.derived_from),
            definition=record.definition,
            multidimensional=record.multidimensional,
            dimensions=dimensions,
        ))

    hypotheses = []
    for h in doc.hypotheses:
        location = doc.location(h.id)
        hypotheses.append(HypothesisOut(
            id=h.id,
            formula=format_formula(h.formula),
            atoms=[format_atom(a) for a in atoms_of(h.formula)],
            line=location[0] if location else None,
        ))

    return DocumentDump(language=language, constructs=constructs, hypotheses=hypotheses)
