"""Core module for configuration, errors and logging."""

from theorykit.core.config import BRUTE_FORCE_HARD_CAP, Settings, get_settings
from theorykit.core.errors import (
    ArityMismatchError,
    AsymmetricGraphError,
    DomainError,
    HornPreconditionError,
    NotHornError,
    NotImplicationalError,
    PivotAbsentError,
    ResourceLimitError,
    TheoryError,
    TheorySyntaxError,
    TooManyAtomsError,
    TypeMismatchError,
    UnboundVariableError,
    UnknownNameError,
)
from theorykit.core.logging import configure_logging

__all__ = [
    "Settings",
    "get_settings",
    "BRUTE_FORCE_HARD_CAP",
    "configure_logging",
    "TheoryError",
    "UnknownNameError",
    "ArityMismatchError",
    "TypeMismatchError",
    "UnboundVariableError",
    "DomainError",
    "PivotAbsentError",
    "ResourceLimitError",
    "TooManyAtomsError",
    "HornPreconditionError",
    "NotImplicationalError",
    "AsymmetricGraphError",
    "NotHornError",
    "TheorySyntaxError",
]
