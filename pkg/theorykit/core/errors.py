"""Exception hierarchy for theory operations."""

from typing import List, Optional, Sequence


class TheoryError(Exception):
    """Base class for every error raised by theorykit."""


class UnknownNameError(TheoryError):
    """A variable, function, relation or universe name is not declared."""


class ArityMismatchError(TheoryError):
    """A function or relation is applied to the wrong number of arguments."""


class TypeMismatchError(TheoryError):
    """Terms from different universes are combined."""


class UnboundVariableError(TheoryError):
    """A model does not assign a value to a variable being evaluated."""


class DomainError(TheoryError):
    """A value falls outside the carrier of its universe."""


class PivotAbsentError(TheoryError):
    """The resolution pivot does not occur with the required polarities."""


class ResourceLimitError(TheoryError):
    """Resolution saturation exceeded the configured clause cap."""


class TooManyAtomsError(TheoryError):
    """Truth-table enumeration was asked for too many atoms."""


class HornPreconditionError(TheoryError):
    """A clause with more than one positive literal reached the Horn solver."""


class NotImplicationalError(TheoryError):
    """A formula is not of the form literal -> literal."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class AsymmetricGraphError(TheoryError):
    """An implication graph lacks the contrapositive of one of its edges."""


class NotHornError(TheoryError):
    """A clause cannot be written as a definite clause or fact."""


class TheorySyntaxError(TheoryError):
    """A theory text or formula could not be parsed."""

    def __init__(self, diagnostics: Sequence["object"]):
        self.diagnostics: List[object] = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else "syntax error"
        super().__init__(str(first))
