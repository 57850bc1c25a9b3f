"""Transitive reduction of implication graphs."""

import logging
from typing import List, Sequence, Set, Tuple

import numpy as np

from theorykit.services.graphs.closure import closure_matrix
from theorykit.services.graphs.condensation import Condensation, condensation
from theorykit.services.graphs.implication import Edge, ImplicationGraph

logger = logging.getLogger(__name__)


def reduction_product(adjacency: np.ndarray, closure: np.ndarray) -> np.ndarray:
    """A . closure(A): entry (i, j) counts successors of i that reach j."""
    return adjacency.astype(np.int64) @ closure.astype(np.int64)


def reduction_difference(adjacency: np.ndarray, closure: np.ndarray) -> np.ndarray:
    return adjacency.astype(np.int64) - reduction_product(adjacency, closure)


def reduction_matrix(adjacency: np.ndarray, closure: np.ndarray) -> np.ndarray:
    """Binarised A - A . closure(A); negative entries become 0."""
    return (reduction_difference(adjacency, closure) > 0).astype(np.int64)


def _reduce_dag(adjacency: np.ndarray) -> np.ndarray:
    return reduction_matrix(adjacency, closure_matrix(adjacency, "fw"))


def _ring(nodes: Sequence[int]) -> List[Edge]:
    return list(zip(nodes, list(nodes[1:]) + [nodes[0]]))


def _expand(cond: Condensation, reduced: np.ndarray) -> Set[Edge]:
    """Cycles through every component plus one edge per reduced DAG edge, attached at the smallest nodes."""
    edges: Set[Edge] = set()
    for ci, component in enumerate(cond.components):
        if len(component) > 1:
            edges.update(_ring(component))
        elif ci in cond.looped:
            edges.add((component[0], component[0]))
    rows, cols = np.nonzero(reduced)
    for a, b in zip(rows, cols):
        edges.add((cond.components[int(a)][0], cond.components[int(b)][0]))
    return edges


def _expand_symmetric(g: ImplicationGraph, cond: Condensation, reduced: np.ndarray) -> Set[Edge]:
    """
    Like `_expand`, but every chosen edge comes with its contrapositive.

    A component and its negation share one ring, traversed backwards on the
    negated side. A component equal to its own negation gets the ring
    a1 ... ak !ak ... !a1, which is its own contrapositive. Each pair of
    reduced DAG edges (A, B), (!B, !A) becomes one edge and its contrapositive.
    """
    edges: Set[Edge] = set()
    done: Set[int] = set()
    for ci, component in enumerate(cond.components):
        if ci in done:
            continue
        mirror = cond.component_of[g.neg(component[0])]
        done.update((ci, mirror))
        if len(component) == 1:
            if ci in cond.looped:
                u = component[0]
                edges.update({(u, u), (g.neg(u), g.neg(u))})
            continue
        if mirror == ci:
            positives = [u for u in component if u < g.n_atoms]
            ring = _ring(positives + [g.neg(u) for u in reversed(positives)])
        else:
            ring = _ring(component)
        edges.update(ring)
        edges.update(g.contrapositive(e) for e in ring)

    handled: Set[Tuple[int, int]] = set()
    rows, cols = np.nonzero(reduced)
    for a, b in sorted(zip(rows.tolist(), cols.tolist())):
        if (a, b) in handled:
            continue
        u = cond.components[a][0]
        mirror = (cond.component_of[g.neg(cond.components[b][0])], cond.component_of[g.neg(u)])
        v = g.neg(u) if mirror == (a, b) else cond.components[b][0]
        handled.update({(a, b), mirror})
        edges.update({(u, v), g.contrapositive((u, v))})
    return edges


def transitive_reduction(g: ImplicationGraph) -> ImplicationGraph:
    """
    Fewest-edge graph with the same transitive closure as g.

    Acyclic graphs are reduced by binarising A - A . closure(A). Otherwise the
    condensation DAG is reduced, every multi-node component is expanded into
    one cycle through its nodes and each reduced DAG edge is attached to one
    node of both endpoint components. A contrapositive-symmetric g yields a
    symmetric result.
    """
    cond = condensation(g)
    if cond.is_acyclic:
        adjacency = g.adjacency_matrix()
        reduced = g.with_edges(ImplicationGraph.from_matrix(g.atoms, _reduce_dag(adjacency)).edges)
        logger.info(f"Transitive reduction (acyclic): {len(g.edges)} -> {len(reduced.edges)} edge(s)")
        return reduced

    k = len(cond)
    dag = np.zeros((k, k), dtype=np.int64)
    for a, b in cond.dag_edges:
        dag[a, b] = 1
    reduced_dag = _reduce_dag(dag)
    edges = _expand_symmetric(g, cond, reduced_dag) if g.is_symmetric() else _expand(cond, reduced_dag)
    reduced = g.with_edges(edges)
    logger.info(
        f"Transitive reduction ({k} component(s)): {len(g.edges)} -> {len(reduced.edges)} edge(s)")
    return reduced
