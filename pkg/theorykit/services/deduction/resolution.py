"""Resolution saturation (Davis-Putnam) and entailment."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

from theorykit.core.config import get_settings
from theorykit.core.errors import PivotAbsentError, ResourceLimitError
from theorykit.models.formula import Formula, Not, Theory
from theorykit.models.schema import ResolutionStepOut, SatReportOut
from theorykit.services.deduction.clauses import ClausalTheory, Clause, SignedAtom, to_clausal

logger = logging.getLogger(__name__)


def resolve_step(c1: Clause, c2: Clause, pivot: int) -> Clause:
    """
    Resolve two clauses upon an atom.

    Args:
        c1: Clause containing the pivot positively
        c2: Clause containing the pivot negatively
        pivot: Interned atom index

    Returns:
        (c1 minus +pivot) union (c2 minus -pivot)
    """
    pos, neg = SignedAtom(pivot, True), SignedAtom(pivot, False)
    if pos not in c1:
        raise PivotAbsentError(f"atom #{pivot} does not occur positively in the first clause")
    if neg not in c2:
        raise PivotAbsentError(f"atom #{pivot} does not occur negatively in the second clause")
    return Clause((c1.literals - {pos}) | (c2.literals - {neg}))


@dataclass(frozen=True)
class ResolutionStep:
    """One inference: resolvent id, the ids of both parents and the pivot atom."""

    resolvent: int
    parents: Tuple[int, int]
    pivot: int


@dataclass
class SatResult:
    """Verdict of a saturation run and its derivation trace."""

    satisfiable: bool
    theory: ClausalTheory
    clauses: List[Clause] = field(default_factory=list)
    steps: List[ResolutionStep] = field(default_factory=list)
    rounds: int = 0

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def to_report(self) -> SatReportOut:
        """JSON-ready trace; literal texts use theory-file syntax."""
        return SatReportOut(
            satisfiable=self.satisfiable,
            clauses=[self.theory.clause_texts(c) for c in self.clauses[: len(self.theory.clauses)]],
            steps=[
                ResolutionStepOut(
                    resolvent=self.theory.clause_texts(self.clauses[s.resolvent]),
                    parents=list(s.parents),
                    pivot=self.theory.literal_text(SignedAtom(s.pivot)),
                )
                for s in self.steps
            ],
        )

    def proof_steps(self) -> List[ResolutionStep]:
        """Steps the empty clause depends on, in derivation order; empty when satisfiable."""
        if self.satisfiable or not self.steps:
            return []
        by_resolvent = {s.resolvent: s for s in self.steps}
        needed: Set[int] = set()
        pending = [self.steps[-1].resolvent]
        while pending:
            cid = pending.pop()
            step = by_resolvent.get(cid)
            if step is None or cid in needed:
                continue
            needed.add(cid)
            pending.extend(step.parents)
        return [s for s in self.steps if s.resolvent in needed]

    def format_trace(self, steps: Optional[List[ResolutionStep]] = None) -> List[str]:
        lines = []
        for step in self.steps if steps is None else steps:
            left, right = step.parents
            lines.append(
                f"[{step.resolvent}] {self.theory.clause_text(self.clauses[step.resolvent])}"
                f"  <- [{left}], [{right}] on {self.theory.literal_text(SignedAtom(step.pivot))}"
            )
        return lines


class _Saturation:
    """Semi-naive saturation state over signed-int clauses."""

    def __init__(self, max_clauses: int, subsumption: bool):
        self.max_clauses = max_clauses
        self.subsumption = subsumption
        self.store: List[FrozenSet[int]] = []
        self.alive: Dict[int, FrozenSet[int]] = {}
        self.by_literal: Dict[int, Set[int]] = {}
        self.steps: List[ResolutionStep] = []

    def register(self, clause: FrozenSet[int]) -> int:
        if len(self.store) >= self.max_clauses:
            raise ResourceLimitError(f"saturation exceeded the cap of {self.max_clauses} clauses")
        self.store.append(clause)
        return len(self.store) - 1

    def covered(self, clause: FrozenSet[int]) -> bool:
        """An alive clause equals `clause` or, with subsumption on, is a subset of it."""
        seen: Set[int] = set()
        for lit in clause:
            for j in self.by_literal.get(lit, ()):
                if j in seen:
                    continue
                seen.add(j)
                other = self.alive[j]
                if other == clause or (self.subsumption and other <= clause):
                    return True
        return False

    def activate(self, cid: int) -> None:
        clause = self.store[cid]
        if self.subsumption and clause:
            # A strict superset of `clause` contains each of its literals.
            first = next(iter(clause))
            for j in list(self.by_literal.get(first, ())):
                if clause < self.alive[j]:
                    for lit in self.alive.pop(j):
                        self.by_literal[lit].discard(j)
        self.alive[cid] = clause
        for lit in clause:
            self.by_literal.setdefault(lit, set()).add(cid)

    def admit(self, clause: FrozenSet[int]) -> Optional[int]:
        """Register and activate a derived clause unless it is a tautology or already covered."""
        if any(-lit in clause for lit in clause) or self.covered(clause):
            return None
        cid = self.register(clause)
        self.activate(cid)
        return cid


def davis_putnam(
    t: Union[Theory, ClausalTheory],
    *,
    max_clauses: Optional[int] = None,
    subsumption: Optional[bool] = None,
) -> SatResult:
    """
    Decide satisfiability by resolution saturation.

    Each round resolves every clause derived in the previous round against
    every older or same-round clause; the run stops when a round adds no
    clause (satisfiable) or the empty clause appears (unsatisfiable).
    Tautologies are discarded on sight and, when subsumption is on, strictly
    subsumed clauses are deleted.

    Args:
        t: Theory or clausal theory
        max_clauses: Clause cap (default from settings)
        subsumption: Delete subsumed clauses (default from settings)

    Returns:
        SatResult with the derivation trace
    """
    settings = get_settings()
    cap = max_clauses if max_clauses is not None else settings.max_clauses
    use_subsumption = subsumption if subsumption is not None else settings.subsumption
    ct = t if isinstance(t, ClausalTheory) else to_clausal(t)

    state = _Saturation(cap, use_subsumption)
    inputs: List[int] = []
    for clause in ct.clauses:
        inputs.append(state.register(clause.to_ints()))

    def result(satisfiable: bool, rounds: int) -> SatResult:
        logger.info(
            f"Davis-Putnam: {'satisfiable' if satisfiable else 'unsatisfiable'} after {rounds} round(s), "
            f"{len(state.store)} clause(s)"
        )
        return SatResult(
            satisfiable=satisfiable,
            theory=ct,
            clauses=[Clause.from_ints(c) for c in state.store],
            steps=state.steps,
            rounds=rounds,
        )

    frontier: List[int] = []
    for cid in inputs:
        clause = state.store[cid]
        if not clause:
            return result(False, 0)
        if any(-lit in clause for lit in clause):
            logger.warning(f"Skipping tautological clause {ct.clause_text(ct.clauses[cid])}")
            continue
        if state.covered(clause):
            continue
        state.activate(cid)
        frontier.append(cid)
    frontier = [cid for cid in frontier if cid in state.alive]

    rounds = 0
    while frontier:
        rounds += 1
        produced: List[int] = []
        for i in frontier:
            for lit in sorted(state.alive.get(i, ()), key=lambda x: (abs(x), x < 0)):
                for j in sorted(state.by_literal.get(-lit, ())):
                    if i not in state.alive:
                        break
                    # Pairs are visited once: from the younger clause towards older ones.
                    if j >= i or j not in state.alive:
                        continue
                    positive, negative = (i, j) if lit > 0 else (j, i)
                    pivot = abs(lit)
                    resolvent = (state.alive[positive] - {pivot}) | (state.alive[negative] - {-pivot})
                    cid = state.admit(resolvent)
                    if cid is None:
                        continue
                    state.steps.append(ResolutionStep(cid, (positive, negative), pivot - 1))
                    if not resolvent:
                        return result(False, rounds)
                    produced.append(cid)
        logger.debug(f"Round {rounds}: {len(produced)} new clause(s), {len(state.alive)} alive")
        frontier = [cid for cid in produced if cid in state.alive]

    return result(True, rounds)


@dataclass
class EntailmentResult:
    """Outcome of `entails`; truthy when the query follows from the theory."""

    entailed: bool
    refutation: SatResult

    def __bool__(self) -> bool:
        return self.entailed


def entails(
    t: Theory,
    f: Formula,
    *,
    max_clauses: Optional[int] = None,
    subsumption: Optional[bool] = None,
) -> EntailmentResult:
    """T entails f iff T together with the negation of f is unsatisfiable."""
    ct = to_clausal(list(t) + [Not(f)])
    refutation = davis_putnam(ct, max_clauses=max_clauses, subsumption=subsumption)
    return EntailmentResult(entailed=not refutation.satisfiable, refutation=refutation)
