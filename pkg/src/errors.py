"""
Exception hierarchy.

Every error raised by the library derives from ``MultiStateError``, which is a
``ValueError`` so callers that only care about bad input can catch that.
"""

from __future__ import annotations

from typing import Optional


class MultiStateError(ValueError):
    """Root of all library errors."""


class StateValidationError(MultiStateError):
    """A matrix failed one of the density-matrix invariants."""

    def __init__(self, invariant: str, residual: float, message: Optional[str] = None):
        self.invariant = invariant
        self.residual = float(residual)
        super().__init__(message or f"{invariant} violated (residual {self.residual:.3e})")


class NotHermitianError(StateValidationError):
    pass


class TraceNotOneError(StateValidationError):
    pass


class NotPositiveError(StateValidationError):
    pass


class DimensionMismatchError(MultiStateError):
    pass


class OutsideBallError(MultiStateError):
    pass


class NotSpecialUnitaryError(MultiStateError):
    pass


class NotRotationError(MultiStateError):
    pass


class WeightOutOfRangeError(MultiStateError):
    pass


class BadLabelError(MultiStateError):
    pass


class AsymmetricInputError(MultiStateError):
    pass


class EntryOutOfRangeError(MultiStateError):
    pass


class InternalDisagreementError(MultiStateError):
    """Two independent computations of the same quantity disagree."""


class HasImaginarityError(MultiStateError):
    pass


class BadPermutationError(MultiStateError):
    pass


class UnknownFixtureError(MultiStateError):
    pass


class MethodDisagreementError(MultiStateError):
    """Candidate enumeration and the sphere grid found different minima."""


class RankTooHighError(MultiStateError):
    pass


class WrongOrderError(MultiStateError):
    pass


class NotQubitRealizableError(MultiStateError):
    pass


class LabelCountMismatchError(MultiStateError):
    pass


class ZeroDenominatorError(MultiStateError):
    pass


class NotTracePreservingError(MultiStateError):
    pass


class InvalidMeasurementError(MultiStateError):
    pass


class ParseError(MultiStateError):
    """Malformed JSON document; ``location`` points at the offending entry."""

    def __init__(self, message: str, location: str = "$"):
        self.location = location
        super().__init__(f"{location}: {message}")


class DocumentValidationError(MultiStateError):
    """A well-formed document whose matrices are not valid states."""

    def __init__(self, message: str, location: str = "$"):
        self.location = location
        super().__init__(f"{location}: {message}")


class BadFlagError(MultiStateError):
    pass
