"""Strongly connected components and the condensation DAG."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from theorykit.services.graphs.implication import ImplicationGraph

logger = logging.getLogger(__name__)


def strongly_connected_components(successors: Sequence[Sequence[int]]) -> List[List[int]]:
    """
    Tarjan's algorithm with an explicit stack.

    Returns:
        Components in reverse topological order of the condensation
    """
    size = len(successors)
    index: List[int] = [-1] * size
    lowlink: List[int] = [0] * size
    on_stack: List[bool] = [False] * size
    stack: List[int] = []
    components: List[List[int]] = []
    counter = 0

    for root in range(size):
        if index[root] != -1:
            continue
        work: List[Tuple[int, int]] = [(root, 0)]
        while work:
            v, child = work.pop()
            if child == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            succ = successors[v]
            while child < len(succ):
                w = succ[child]
                child += 1
                if index[w] == -1:
                    work.append((v, child))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(component)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return components


@dataclass(frozen=True)
class Condensation:
    """
    SCC decomposition of a graph.

    Components are sorted by their smallest node and hold their nodes in
    ascending order; `dag_edges` joins distinct components linked by at least
    one original edge.
    """

    components: Tuple[Tuple[int, ...], ...]
    component_of: Tuple[int, ...]
    dag_edges: FrozenSet[Tuple[int, int]]
    looped: FrozenSet[int] = frozenset()

    @property
    def is_acyclic(self) -> bool:
        """No component of two or more nodes and no self-loop."""
        return not self.looped and all(len(c) == 1 for c in self.components)

    def __len__(self) -> int:
        return len(self.components)


def condensation(g: ImplicationGraph) -> Condensation:
    raw = strongly_connected_components(g.successors())
    components = sorted((tuple(sorted(c)) for c in raw), key=lambda c: c[0])
    component_of: Dict[int, int] = {}
    for ci, component in enumerate(components):
        for node in component:
            component_of[node] = ci
    dag_edges = frozenset(
        (component_of[u], component_of[v]) for u, v in g.edges if component_of[u] != component_of[v]
    )
    looped = frozenset(component_of[u] for u in g.self_loops())
    result = Condensation(
        components=tuple(components),
        component_of=tuple(component_of[u] for u in range(g.size)),
        dag_edges=dag_edges,
        looped=looped,
    )
    logger.debug(f"Condensation: {g.size} node(s) -> {len(result)} component(s)")
    return result
