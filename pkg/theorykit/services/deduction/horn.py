"""Horn satisfiability by forward chaining over definite clauses."""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, FrozenSet, List, Optional

from theorykit.core.errors import HornPreconditionError
from theorykit.services.deduction.clauses import ClausalTheory, Clause, ClauseKind, classify_clause

logger = logging.getLogger(__name__)


@dataclass
class HornResult:
    """Verdict of the Horn procedure.

    `model` lists the atoms forced true (the least model) when satisfiable;
    `conflict` is the violated goal clause when not.
    """

    satisfiable: bool
    model: FrozenSet[int] = field(default_factory=frozenset)
    derivation: List[int] = field(default_factory=list)
    conflict: Optional[Clause] = None

    def __bool__(self) -> bool:
        return self.satisfiable


def horn_satisfiable(ct: ClausalTheory) -> HornResult:
    """
    Decide satisfiability of a Horn clause set.

    Facts seed a queue of true atoms; each definite clause keeps a counter of
    body atoms not yet derived and fires its head when the counter reaches
    zero. The set is unsatisfiable iff some goal clause (or the empty clause)
    has its whole body derived.

    Raises:
        HornPreconditionError: a clause has more than one positive literal
    """
    heads: List[Optional[int]] = []
    remaining: List[int] = []
    watchers: Dict[int, List[int]] = {}
    queue: Deque[int] = deque()
    true_atoms: Dict[int, None] = {}

    for ci, clause in enumerate(ct.clauses):
        kind = classify_clause(clause)
        if kind is ClauseKind.NON_HORN:
            raise HornPreconditionError(
                f"clause {ct.clause_text(clause)} has {len(clause.positives)} positive literals")
        if kind is ClauseKind.EMPTY:
            logger.debug("Horn: empty clause in input")
            return HornResult(False, conflict=clause)
        body = {lit.atom for lit in clause.negatives}
        head = clause.positives[0].atom if clause.positives else None
        heads.append(head)
        remaining.append(len(body))
        for atom in body:
            watchers.setdefault(atom, []).append(ci)
        if not body and head is not None and head not in true_atoms:
            true_atoms[head] = None
            queue.append(head)

    def violated(ci: int) -> HornResult:
        clause = ct.clauses[ci]
        logger.debug(f"Horn: goal clause {ct.clause_text(clause)} violated")
        return HornResult(False, frozenset(true_atoms), list(true_atoms), conflict=clause)

    while queue:
        atom = queue.popleft()
        for ci in watchers.get(atom, ()):
            remaining[ci] -= 1
            if remaining[ci]:
                continue
            head = heads[ci]
            if head is None:
                return violated(ci)
            if head not in true_atoms:
                true_atoms[head] = None
                queue.append(head)

    logger.debug(f"Horn: satisfiable, least model has {len(true_atoms)} true atom(s)")
    return HornResult(True, frozenset(true_atoms), list(true_atoms))
