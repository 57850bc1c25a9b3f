"""Implication graphs: closure, condensation, reduction and canonical sets."""

from theorykit.services.graphs.base import ClosureMethod
from theorykit.services.graphs.closure import (
    FloydWarshallClosure,
    MatrixPowerClosure,
    closure_matrix,
    format_matrix,
    get_closure_method,
    transitive_closure,
    walk_count_matrix,
)
from theorykit.services.graphs.condensation import (
    Condensation,
    condensation,
    strongly_connected_components,
)
from theorykit.services.graphs.implication import (
    ImplicationGraph,
    ImplicationTheory,
    as_implication_theory,
    build_graph,
    graph_to_theory,
)
from theorykit.services.graphs.reduction import (
    reduction_difference,
    reduction_matrix,
    reduction_product,
    transitive_reduction,
)
from theorykit.services.graphs.synthesis import (
    CanonicalSet,
    canonical_set,
    self_refuting_literals,
)

__all__ = [
    "ImplicationTheory",
    "ImplicationGraph",
    "as_implication_theory",
    "build_graph",
    "graph_to_theory",
    "ClosureMethod",
    "MatrixPowerClosure",
    "FloydWarshallClosure",
    "get_closure_method",
    "closure_matrix",
    "walk_count_matrix",
    "transitive_closure",
    "Condensation",
    "condensation",
    "strongly_connected_components",
    "reduction_product",
    "reduction_difference",
    "reduction_matrix",
    "transitive_reduction",
    "CanonicalSet",
    "canonical_set",
    "self_refuting_literals",
    "format_matrix",
]
