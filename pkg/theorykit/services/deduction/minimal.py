"""Minimal sub-theory extraction by single-pass redundancy removal."""

import logging
from typing import List, Optional, Sequence

from theorykit.models.formula import Formula, Theory
from theorykit.services.deduction.resolution import entails

logger = logging.getLogger(__name__)


def _check_order(order: Sequence[int], size: int) -> List[int]:
    positions = list(order)
    if sorted(positions) != list(range(size)):
        raise ValueError(f"order must be a permutation of 0..{size - 1}, got {positions}")
    return positions


def minimal_theory_indices(
    t: Theory,
    order: Optional[Sequence[int]] = None,
    *,
    max_clauses: Optional[int] = None,
) -> List[int]:
    """
    Positions of the formulas kept by the minimal-theory pass.

    Formulas are visited in `order` (positions into t, default input order);
    a formula is dropped when the formulas still kept, minus itself, entail it.

    Returns:
        Surviving positions in ascending order
    """
    formulas = list(t)
    visit = _check_order(order, len(formulas)) if order is not None else list(range(len(formulas)))
    kept = set(range(len(formulas)))
    for position in visit:
        rest = [formulas[i] for i in sorted(kept) if i != position]
        if entails(rest, formulas[position], max_clauses=max_clauses):
            logger.debug(f"Formula #{position} ({formulas[position]}) follows from the others; removed")
            kept.discard(position)
    logger.info(f"Minimal theory keeps {len(kept)} of {len(formulas)} formula(s)")
    return sorted(kept)


def minimal_theory(
    t: Theory,
    order: Optional[Sequence[int]] = None,
    *,
    max_clauses: Optional[int] = None,
) -> List[Formula]:
    """Irredundant sub-theory equivalent to t; depends on the visiting order."""
    formulas = list(t)
    return [formulas[i] for i in minimal_theory_indices(formulas, order, max_clauses=max_clauses)]
