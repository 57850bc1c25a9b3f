"""Transitive closure by matrix powers or Floyd-Warshall."""

import logging
from typing import Dict, Optional, Type

import numpy as np

from theorykit.core.config import get_settings
from theorykit.services.graphs.base import ClosureMethod
from theorykit.services.graphs.implication import ImplicationGraph

logger = logging.getLogger(__name__)


def walk_count_matrix(adjacency: np.ndarray, max_power: Optional[int] = None) -> np.ndarray:
    """
    Exact sum of A^k for k = 1..max_power (default: the node count).

    Entries count walks and are kept as Python integers, so they never overflow.
    """
    size = adjacency.shape[0]
    power_limit = size if max_power is None else max_power
    a = adjacency.astype(object)
    power = a.copy()
    total = a.copy()
    for _ in range(1, power_limit):
        power = power.dot(a)
        total = total + power
    return total


class MatrixPowerClosure(ClosureMethod):
    """Binarised sum of A^k for k up to the node count."""

    method_name = "matrix-power"

    def reachability(self, adjacency: np.ndarray) -> np.ndarray:
        a = (adjacency > 0).astype(np.int64)
        reach = a.copy()
        power = a.copy()
        for _ in range(1, a.shape[0]):
            power = (power @ a > 0).astype(np.int64)
            grown = reach | power
            # Once a power adds nothing new, no later power can.
            if not power.any() or np.array_equal(grown, reach):
                break
            reach = grown
        return reach


class FloydWarshallClosure(ClosureMethod):
    """Boolean Floyd-Warshall (Warshall's algorithm)."""

    method_name = "floyd-warshall"

    def reachability(self, adjacency: np.ndarray) -> np.ndarray:
        reach = adjacency > 0
        for k in range(reach.shape[0]):
            reach = reach | np.outer(reach[:, k], reach[k, :])
        return reach.astype(np.int64)


_METHODS: Dict[str, Type[ClosureMethod]] = {
    "matrix": MatrixPowerClosure,
    "matrix-power": MatrixPowerClosure,
    "fw": FloydWarshallClosure,
    "floyd-warshall": FloydWarshallClosure,
}


def get_closure_method(name: Optional[str] = None) -> ClosureMethod:
    """Closure method by name; defaults to `Settings.closure_method`."""
    key = (name or get_settings().closure_method).strip().lower()
    if key not in _METHODS:
        raise ValueError(f"unknown closure method: {name}")
    return _METHODS[key]()


def closure_matrix(adjacency: np.ndarray, method: Optional[str] = None) -> np.ndarray:
    return get_closure_method(method)(adjacency)


def transitive_closure(g: ImplicationGraph, method: Optional[str] = None) -> ImplicationGraph:
    """Graph with an edge (u, v) for every path of length >= 1 from u to v in g."""
    reach = closure_matrix(g.adjacency_matrix(), method)
    closed = g.with_edges(ImplicationGraph.from_matrix(g.atoms, reach).edges)
    logger.info(f"Transitive closure: {len(g.edges)} -> {len(closed.edges)} edge(s)")
    return closed


def format_matrix(matrix: np.ndarray) -> str:
    """Row-major plain text, one row per line, entries separated by spaces."""
    return "\n".join(" ".join(str(int(x)) for x in row) for row in matrix)
