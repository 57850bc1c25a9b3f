"""Satisfiability checker interface and registry."""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Type, Union

from theorykit.core.errors import NotHornError
from theorykit.models.formula import Theory
from theorykit.services.deduction.clauses import ClausalTheory, is_horn, to_clausal
from theorykit.services.deduction.horn import horn_satisfiable
from theorykit.services.deduction.oracle import brute_force_satisfiable
from theorykit.services.deduction.resolution import davis_putnam

logger = logging.getLogger(__name__)


class SatisfiabilityChecker(ABC):
    """Abstract base class for decision procedures over clausal theories."""

    checker_type: str = "base"

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """Initialize checker with optional keyword configuration."""
        self.config = config or {}

    @abstractmethod
    def check(self, ct: ClausalTheory) -> bool:
        """
        Decide satisfiability.

        Args:
            ct: Clausal theory to decide

        Returns:
            True if some assignment satisfies every clause
        """

    def satisfiable(self, t: Union[Theory, ClausalTheory]) -> bool:
        ct = t if isinstance(t, ClausalTheory) else to_clausal(t)
        verdict = self.check(ct)
        logger.debug(f"{self.checker_type}: {len(ct)} clause(s) -> {'sat' if verdict else 'unsat'}")
        return verdict


class DavisPutnamChecker(SatisfiabilityChecker):
    """Resolution saturation."""

    checker_type = "davis-putnam"

    def check(self, ct: ClausalTheory) -> bool:
        return davis_putnam(
            ct,
            max_clauses=self.config.get("max_clauses"),
            subsumption=self.config.get("subsumption"),
        ).satisfiable


class HornChecker(SatisfiabilityChecker):
    """Forward chaining; only accepts Horn clause sets."""

    checker_type = "horn"

    def check(self, ct: ClausalTheory) -> bool:
        if not is_horn(ct):
            raise NotHornError("clause set is not Horn")
        return horn_satisfiable(ct).satisfiable


class TruthTableChecker(SatisfiabilityChecker):
    """Exhaustive enumeration over the interned atoms."""

    checker_type = "truth-table"

    def check(self, ct: ClausalTheory) -> bool:
        return brute_force_satisfiable(ct, max_atoms=self.config.get("max_atoms"))


_CHECKERS: Dict[str, Type[SatisfiabilityChecker]] = {
    "davis-putnam": DavisPutnamChecker,
    "dp": DavisPutnamChecker,
    "horn": HornChecker,
    "truth-table": TruthTableChecker,
    "oracle": TruthTableChecker,
}


def get_checker(name: str, **config: Any) -> SatisfiabilityChecker:
    """Instantiate a checker by name (`davis-putnam`/`dp`, `horn`, `truth-table`/`oracle`)."""
    key = name.strip().lower()
    if key not in _CHECKERS:
        raise ValueError(f"unknown satisfiability checker: {name}")
    return _CHECKERS[key](config)
