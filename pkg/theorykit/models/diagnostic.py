"""Diagnostics reported by validation and parsing."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """A located (or element-scoped) validation message."""

    severity: Severity
    message: str
    line: Optional[int] = None
    column: Optional[int] = None
    element: Optional[str] = None

    @classmethod
    def error(cls, message: str, line: Optional[int] = None, column: Optional[int] = None,
              element: Optional[str] = None) -> "Diagnostic":
        return cls(Severity.ERROR, message, line, column, element)

    @classmethod
    def warning(cls, message: str, line: Optional[int] = None, column: Optional[int] = None,
                element: Optional[str] = None) -> "Diagnostic":
        return cls(Severity.WARNING, message, line, column, element)

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def __str__(self) -> str:
        where = f"{self.line}:{self.column}: " if self.line is not None else ""
        return f"{where}{self.severity.value}: {self.message}"


def has_errors(diagnostics) -> bool:
    """Return True if any diagnostic is an error."""
    return any(d.is_error for d in diagnostics)
