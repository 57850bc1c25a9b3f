"""Implication theories and their signed-literal digraphs."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import numpy as np

from theorykit.core.errors import AsymmetricGraphError, NotImplicationalError
from theorykit.models.formula import Atom, AtomRef, Formula, Implies, Not, Theory, atoms_of, format_atom
from theorykit.services.deduction.clauses import SignedAtom

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _literal(f: Formula) -> Optional[Tuple[Atom, bool]]:
    if isinstance(f, AtomRef):
        return f.atom, True
    if isinstance(f, Not) and isinstance(f.operand, AtomRef):
        return f.operand.atom, False
    return None


@dataclass(frozen=True)
class ImplicationTheory:
    """Signed literal pairs (antecedent, consequent) over an interned atom table."""

    atoms: Tuple[Atom, ...]
    pairs: Tuple[Tuple[SignedAtom, SignedAtom], ...]
    labels: Tuple[str, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[SignedAtom, SignedAtom]]:
        return iter(self.pairs)


def as_implication_theory(
    t: Theory,
    atoms: Optional[Sequence[Atom]] = None,
    labels: Optional[Sequence[str]] = None,
) -> ImplicationTheory:
    """
    Read a theory as literal -> literal pairs.

    Args:
        t: Theory whose formulas must all be `L -> L'` with L, L' an atom or a
            single negation of one
        atoms: Node order; defaults to first occurrence, unlisted atoms appended
        labels: Hypothesis identifiers, one per formula

    Raises:
        NotImplicationalError: names the first offending formula
    """
    formulas = list(t)
    if labels is not None and len(labels) != len(formulas):
        raise ValueError(f"{len(labels)} label(s) for {len(formulas)} formula(s)")
    names = tuple(labels) if labels is not None else tuple(f"h{i + 1}" for i in range(len(formulas)))

    table: List[Atom] = list(atoms) if atoms is not None else []
    for atom in atoms_of(formulas):
        if atom not in table:
            table.append(atom)
    index = {atom: i for i, atom in enumerate(table)}

    pairs = []
    for i, f in enumerate(formulas):
        source = _literal(f.left) if isinstance(f, Implies) else None
        target = _literal(f.right) if isinstance(f, Implies) else None
        if source is None or target is None:
            raise NotImplicationalError(
                f"hypothesis {names[i]} is not of the form literal -> literal: {f}", index=i)
        pairs.append((SignedAtom(index[source[0]], source[1]), SignedAtom(index[target[0]], target[1])))
    return ImplicationTheory(atoms=tuple(table), pairs=tuple(pairs), labels=names)


@dataclass(frozen=True)
class ImplicationGraph:
    """
    Digraph on 2n signed literals.

    Node i < n is atom i, node n + i its negation. `origin` maps edges to the
    hypothesis labels they were built from.
    """

    atoms: Tuple[Atom, ...]
    edges: FrozenSet[Edge] = frozenset()
    origin: Mapping[Edge, Tuple[str, ...]] = field(default_factory=dict, compare=False, hash=False)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def size(self) -> int:
        return 2 * len(self.atoms)

    @property
    def nodes(self) -> List[SignedAtom]:
        return [self.literal(u) for u in range(self.size)]

    def literal(self, u: int) -> SignedAtom:
        n = self.n_atoms
        return SignedAtom(u % n, u < n)

    def node_of(self, lit: SignedAtom) -> int:
        return lit.atom if lit.positive else lit.atom + self.n_atoms

    def neg(self, u: int) -> int:
        n = self.n_atoms
        return u + n if u < n else u - n

    def contrapositive(self, edge: Edge) -> Edge:
        u, v = edge
        return self.neg(v), self.neg(u)

    def node_label(self, u: int) -> str:
        """Theory-file text of the literal at node u."""
        atom = self.atoms[u % self.n_atoms]
        text = format_atom(atom)
        if u < self.n_atoms:
            return text
        return f"!{text}" if not atom.args else f"!({text})"

    def literal_formula(self, u: int) -> Formula:
        ref = AtomRef(self.atoms[u % self.n_atoms])
        return ref if u < self.n_atoms else Not(ref)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def successors(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.size)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
        return adj

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.size, self.size), dtype=np.int64)
        for u, v in self.edges:
            matrix[u, v] = 1
        return matrix

    @classmethod
    def from_matrix(
        cls,
        atoms: Sequence[Atom],
        matrix: np.ndarray,
        origin: Optional[Mapping[Edge, Tuple[str, ...]]] = None,
    ) -> "ImplicationGraph":
        """Graph whose edges are the positive entries of a 2n x 2n matrix."""
        if matrix.shape != (2 * len(atoms), 2 * len(atoms)):
            raise ValueError(f"matrix of shape {matrix.shape} does not fit {len(atoms)} atom(s)")
        rows, cols = np.nonzero(matrix > 0)
        return cls.with_atoms(atoms, ((int(u), int(v)) for u, v in zip(rows, cols)), origin)

    @classmethod
    def with_atoms(
        cls,
        atoms: Sequence[Atom],
        edges: Iterable[Edge],
        origin: Optional[Mapping[Edge, Tuple[str, ...]]] = None,
    ) -> "ImplicationGraph":
        edge_set = frozenset(edges)
        kept = {e: labels for e, labels in (origin or {}).items() if e in edge_set}
        return cls(tuple(atoms), edge_set, kept)

    def with_edges(self, edges: Iterable[Edge]) -> "ImplicationGraph":
        """Same nodes, new edge set; origins survive on edges still present."""
        return ImplicationGraph.with_atoms(self.atoms, edges, self.origin)

    def is_symmetric(self) -> bool:
        return all(self.contrapositive(e) in self.edges for e in self.edges)

    def self_loops(self) -> Set[int]:
        return {u for u, v in self.edges if u == v}


def build_graph(theory: ImplicationTheory) -> ImplicationGraph:
    """
    Implication graph of an implication theory.

    Each pair contributes its edge and the contrapositive edge; duplicates
    merge and their origins accumulate. Pairs of the form l -> l are dropped.
    """
    n = len(theory.atoms)

    def node(lit: SignedAtom) -> int:
        return lit.atom if lit.positive else lit.atom + n

    origin: Dict[Edge, Tuple[str, ...]] = {}
    for (source, target), label in zip(theory.pairs, theory.labels):
        if source == target:
            logger.warning(f"Dropping tautological hypothesis {label}")
            continue
        u, v = node(source), node(target)
        for edge in ((u, v), (node(target.negate()), node(source.negate()))):
            if label not in origin.get(edge, ()):
                origin[edge] = origin.get(edge, ()) + (label,)
    graph = ImplicationGraph(theory.atoms, frozenset(origin), origin)
    logger.debug(f"Implication graph: {graph.size} node(s), {len(graph.edges)} edge(s)")
    return graph


def tautological_labels(theory: ImplicationTheory) -> List[str]:
    """Labels of pairs l -> l, which `build_graph` drops."""
    return [label for (s, t), label in zip(theory.pairs, theory.labels) if s == t]


def representative(g: ImplicationGraph, edge: Edge) -> Edge:
    """Of an edge and its contrapositive, the one with the smaller source node."""
    other = g.contrapositive(edge)
    return min(edge, other)


def edges_to_theory(g: ImplicationGraph, edges: Iterable[Edge], include_loops: bool = False) -> List[Formula]:
    """One implication per contrapositive pair among `edges`, in representative order."""
    reps = sorted({representative(g, e) for e in edges if include_loops or e[0] != e[1]})
    return [Implies(g.literal_formula(u), g.literal_formula(v)) for u, v in reps]


def graph_to_theory(g: ImplicationGraph, include_loops: bool = False) -> List[Formula]:
    """
    Implication theory of a contrapositive-symmetric graph.

    Self-loops (l -> l) are tautologies and are omitted unless requested.

    Raises:
        AsymmetricGraphError: some edge lacks its contrapositive
    """
    for edge in g.sorted_edges():
        if g.contrapositive(edge) not in g.edges:
            u, v = edge
            raise AsymmetricGraphError(
                f"edge {g.node_label(u)} -> {g.node_label(v)} has no contrapositive "
                f"{g.node_label(g.neg(v))} -> {g.node_label(g.neg(u))}")
    return edges_to_theory(g, g.edges, include_loops)
