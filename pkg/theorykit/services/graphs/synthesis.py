"""Canonical hypothesis sets: closure theory and minimal generating set."""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from theorykit.models.diagnostic import Diagnostic
from theorykit.models.formula import Atom, Formula, Theory
from theorykit.services.deduction.minimal import minimal_theory_indices
from theorykit.services.graphs.closure import transitive_closure
from theorykit.services.graphs.implication import (
    ImplicationGraph,
    as_implication_theory,
    build_graph,
    edges_to_theory,
    graph_to_theory,
    tautological_labels,
)
from theorykit.services.graphs.reduction import transitive_reduction

logger = logging.getLogger(__name__)

DERIVABLE = "derivable"
TAUTOLOGY = "tautology"


def self_refuting_literals(closure: ImplicationGraph) -> List[int]:
    """Nodes whose literal reaches its own negation in a closed graph."""
    return sorted(u for u in range(closure.size) if (u, closure.neg(u)) in closure.edges)


def self_refuting_diagnostics(closure: ImplicationGraph) -> List[Diagnostic]:
    return [
        Diagnostic.warning(
            f"literal {closure.node_label(u)} implies its own negation "
            f"{closure.node_label(closure.neg(u))}; the graph closure misses consequences resolution derives",
            element=closure.node_label(u),
        )
        for u in self_refuting_literals(closure)
    ]


def _partition(
    formulas: Sequence[Formula],
    labels: Sequence[str],
    tautologies: Sequence[str],
    reduction: ImplicationGraph,
) -> Tuple[List[str], List[Tuple[str, str]]]:
    """Kept labels and (label, reason) removals, both in input order."""
    candidates = [i for i, label in enumerate(labels) if label not in tautologies]
    surviving = {label for edge in reduction.edges for label in reduction.origin.get(edge, ())}
    order = sorted(range(len(candidates)), key=lambda k: (labels[candidates[k]] in surviving, k))
    kept_positions = minimal_theory_indices([formulas[i] for i in candidates], order)
    kept = {labels[candidates[k]] for k in kept_positions}

    removed: List[Tuple[str, str]] = []
    for label in labels:
        if label in tautologies:
            removed.append((label, TAUTOLOGY))
        elif label not in kept:
            removed.append((label, DERIVABLE))
    return [label for label in labels if label in kept], removed


@dataclass
class CanonicalSet:
    """Result of the synthesis pipeline on an implication theory."""

    minimal: List[Formula]
    closure_theory: List[Formula]
    derived: List[Formula]
    graph: ImplicationGraph
    closure: ImplicationGraph
    reduction: ImplicationGraph
    kept: List[str] = field(default_factory=list)
    removed: List[Tuple[str, str]] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list)

    def __iter__(self) -> Iterator[List[Formula]]:
        """Unpacks as (minimal, closure_theory)."""
        return iter((self.minimal, self.closure_theory))


def canonical_set(
    t: Theory,
    labels: Optional[Sequence[str]] = None,
    atoms: Optional[Sequence[Atom]] = None,
    method: Optional[str] = None,
) -> CanonicalSet:
    """
    Build the implication graph of t, close it and reduce it.

    The closure theory holds every implication derivable along graph paths;
    the minimal theory generates the same closure with the fewest edges.
    Hypotheses are then visited once, those with no edge in the reduction
    first, and each is removed when the hypotheses still kept entail it.

    Raises:
        NotImplicationalError: t is not an implication theory
    """
    formulas = list(t)
    theory = as_implication_theory(formulas, atoms=atoms, labels=labels)
    graph = build_graph(theory)
    closure = transitive_closure(graph, method)
    reduction = transitive_reduction(graph)

    kept, removed = _partition(formulas, theory.labels, tautological_labels(theory), reduction)

    result = CanonicalSet(
        minimal=graph_to_theory(reduction),
        closure_theory=graph_to_theory(closure),
        derived=edges_to_theory(closure, closure.edges - graph.edges),
        graph=graph,
        closure=closure,
        reduction=reduction,
        kept=kept,
        removed=removed,
        diagnostics=self_refuting_diagnostics(closure),
    )
    for diagnostic in result.diagnostics:
        logger.warning(diagnostic.message)
    logger.info(
        f"Canonical set: {len(result.minimal)} of {len(theory)} hypothesis(es) kept, "
        f"{len(result.derived)} derived implication(s)")
    return result
