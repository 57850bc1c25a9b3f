"""
DOT, Horn knowledge-base and JSON exports.

Identifier mangling (shared by DOT node ids and knowledge-base atoms):
every run of characters outside [0-9A-Za-z] becomes one `_`, leading and
trailing `_` are stripped, a leading digit gets an `n_` prefix and an empty
result becomes `atom`. Knowledge-base names are additionally lowercased.
DOT identifiers that spell a DOT keyword in any case get a trailing `_`,
which `mangle` itself never produces.
Repeated names receive `_2`, `_3`, ... in first-occurrence order.
"""

import logging
import re
from typing import Iterable, List, Optional, Union

from theorykit.core.config import get_settings
from theorykit.core.errors import NotHornError
from theorykit.dsl.document import TheoryDocument, dump_document
from theorykit.models.formula import Theory, format_atom
from theorykit.services.deduction.clauses import ClausalTheory, ClauseKind, classify_clause, to_clausal
from theorykit.services.graphs.implication import ImplicationGraph

logger = logging.getLogger(__name__)

_NON_ALNUM = re.compile(r"[^0-9A-Za-z]+")
DOT_KEYWORDS = frozenset({"node", "edge", "graph", "digraph", "subgraph", "strict"})


def mangle(text: str, lowercase: bool = False) -> str:
    name = _NON_ALNUM.sub("_", text).strip("_")
    if lowercase:
        name = name.lower()
    if not name:
        return "atom"
    if name[0].isdigit():
        return f"n_{name}"
    return name


def dot_id(text: str) -> str:
    name = mangle(text)
    return f"{name}_" if name.lower() in DOT_KEYWORDS else name


def unique_names(names: Iterable[str]) -> List[str]:
    """Suffix repeated names with _2, _3, ... so every name is distinct."""
    seen = set()
    result = []
    for name in names:
        candidate = name
        k = 2
        while candidate in seen:
            candidate = f"{name}_{k}"
            k += 1
        seen.add(candidate)
        result.append(candidate)
    return result


def _dot_string(text: str) -> str:
    return "\"" + text.replace("\\", "\\\\").replace("\"", "\\\"") + "\""


def dot_node_ids(g: ImplicationGraph) -> List[str]:
    """DOT identifier of every node; negative literals share their atom's id behind `not_`."""
    positives = unique_names(dot_id(format_atom(atom)) for atom in g.atoms)
    return unique_names(positives + [f"not_{name}" for name in positives])


def export_dot(g: ImplicationGraph, name: Optional[str] = None, edge_labels: bool = True) -> str:
    """
    DOT digraph of an implication graph.

    Nodes are listed in index order with their literal text as label; edges
    follow in (source, target) order, labelled with the hypotheses they came
    from when `edge_labels` is set and the edge has an origin.
    """
    ids = dot_node_ids(g)
    graph_name = dot_id(name or get_settings().dot_graph_name)
    lines = [f"digraph {graph_name} {{"]
    for u in range(g.size):
        lines.append(f"  {ids[u]} [label={_dot_string(g.node_label(u))}];")
    for u, v in g.sorted_edges():
        origin = g.origin.get((u, v), ())
        attributes = f" [label={_dot_string(', '.join(origin))}]" if edge_labels and origin else ""
        lines.append(f"  {ids[u]} -> {ids[v]}{attributes};")
    lines.append("}")
    logger.debug(f"DOT export: {g.size} node(s), {len(g.edges)} edge(s)")
    return "\n".join(lines) + "\n"


def export_horn_kb(t: Union[Theory, ClausalTheory]) -> str:
    """
    Knowledge base with one `q :- p1, ..., pn.` rule or `q.` fact per clause.

    Lines are joined by newlines without a trailing one.

    Raises:
        NotHornError: names the first clause that is neither a fact nor definite
    """
    ct = t if isinstance(t, ClausalTheory) else to_clausal(t)
    names = unique_names(mangle(format_atom(atom), lowercase=True) for atom in ct.atoms)
    lines = []
    for position, clause in enumerate(ct.clauses, start=1):
        kind = classify_clause(clause)
        if kind is ClauseKind.FACT:
            lines.append(f"{names[clause.positives[0].atom]}.")
        elif kind is ClauseKind.DEFINITE:
            body = ", ".join(names[lit.atom] for lit in clause.negatives)
            lines.append(f"{names[clause.positives[0].atom]} :- {body}.")
        else:
            raise NotHornError(
                f"clause {position} {ct.clause_text(clause)} is a {kind.value.replace('_', '-')} clause, "
                f"not a definite clause or fact")
    return "\n".join(lines)


def export_json(doc: TheoryDocument) -> str:
    return dump_document(doc).model_dump_json(indent=2)
