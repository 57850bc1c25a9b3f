"""Canonical text form of theory documents."""

from typing import List

from theorykit.dsl.document import TheoryDocument
from theorykit.models.formula import ConstructRecord, format_formula
from theorykit.models.language import CarrierKind, Language, RelationKind, format_value

HEADER = "# theorykit theory"


def quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace("\"", "\\\"").replace("\n", "\\n").replace("\t", "\\t")
    return f"\"{escaped}\""


def _render_type(lang: Language, index: int) -> str:
    universe = lang.universe(index)
    if universe.kind is CarrierKind.REAL:
        line = f"type {universe.name} = real[{format_value(universe.lo)}, {format_value(universe.hi)}]"
    elif universe.kind is CarrierKind.BOOLEAN:
        line = f"type {universe.name} = bool"
    else:
        line = f"type {universe.name} = {{" + ", ".join(format_value(v) for v in universe.values) + "}"
    if universe.order:
        pairs = "; ".join(f"{format_value(a)} > {format_value(b)}" for a, b in universe.order)
        line += f" order {{ {pairs} }}"

    # Relation and function lists are written only when they differ from the carrier defaults.
    relations = tuple(r.name for r in lang.relations_of(index) if r.interpretation is not RelationKind.PROPOSITION)
    if relations != universe.default_relations():
        line += " relations { " + ", ".join(relations) + " }" if relations else " relations { }"
    functions = tuple(f.name for f in lang.functions_of(index))
    if functions != universe.default_functions():
        line += " functions { " + ", ".join(functions) + " }" if functions else " functions { }"
    return line


def _render_construct(record: ConstructRecord) -> List[str]:
    lines = [f"construct {record.name} {{"]
    if record.derived_from:
        lines.append("    derives " + ", ".join(quote(text) for text in record.derived_from) + ";")
    if record.definition:
        lines.append(f"    def {quote(record.definition)};")
    lines.append(f"    dimensionality {'multi' if record.multidimensional else 'uni'};")
    for dim in record.dimensions:
        line = f"    dim {dim.variable} from {dim.source} shape {dim.shape}"
        if dim.note:
            line += f" note {quote(dim.note)}"
        lines.append(line + ";")
    lines.append("}")
    return lines


def render_theory(doc: TheoryDocument) -> str:
    """
    Pretty-print a document in the theory-file grammar.

    Sections (types, atoms, variables, constructs, propositions) are separated
    by blank lines; the output always ends with a newline and parses back to
    an equal document.
    """
    lang = doc.language
    sections: List[List[str]] = [[HEADER]]

    if lang.universes:
        sections.append([_render_type(lang, i) for i in range(len(lang.universes))])

    atoms = [r for r in lang.relations if r.interpretation is RelationKind.PROPOSITION]
    if atoms:
        sections.append([f"atom {r.name} : {lang.universe(r.universe).name}" for r in atoms])

    if lang.variables:
        sections.append([f"var {v.name} : {lang.universe(v.universe).name}" for v in lang.variables])

    for record in doc.constructs:
        sections.append(_render_construct(record))

    if doc.hypotheses:
        sections.append([f"prop {h.id}: {format_formula(h.formula)}" for h in doc.hypotheses])

    return "\n\n".join("\n".join(section) for section in sections) + "\n"
