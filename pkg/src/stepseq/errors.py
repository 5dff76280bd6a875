"""Exception types shared across the toolkit."""

from __future__ import annotations


class StepSeqError(Exception):
    """Base class for all toolkit errors."""


class InvalidSizeError(StepSeqError, ValueError):
    """Sequence length outside the supported range."""


class InvalidPermutationError(StepSeqError, ValueError):
    """Mapping is not a bijection onto 0..n-1."""


class ShapeError(StepSeqError, ValueError):
    """Inputs that must share a shape or length do not."""


class InvalidReferenceError(StepSeqError, ValueError):
    """Reference set is malformed (length mismatch or bad alternative)."""


class EmptyInputError(StepSeqError, ValueError):
    """An aggregate was requested over zero records."""


class InvalidRankError(StepSeqError, ValueError):
    """Retrieval rank must be a positive integer."""


class InsufficientAnnotatorsError(StepSeqError, ValueError):
    """Fewer than two annotators available for an agreement score."""


class ModeError(StepSeqError, ValueError):
    """Operation not defined for the given matrix mode."""


class SizeLimitError(StepSeqError, ValueError):
    """Instance too large for exhaustive enumeration."""


class InvalidParameterError(StepSeqError, ValueError):
    """Parameter outside its documented domain."""


class InfeasiblePlanError(StepSeqError, ValueError):
    """Requested plan cannot exist for the given geometry."""


class ResampleError(StepSeqError, RuntimeError):
    """Rejection sampling exhausted its attempt budget.

    Carries diagnostics useful for tuning: the attempt budget and the
    worst constraint violation seen.
    """

    def __init__(self, message: str, *, attempts: int, worst_overlap: int | None = None):
        super().__init__(message)
        self.attempts = attempts
        self.worst_overlap = worst_overlap


class ManifestError(StepSeqError, ValueError):
    """One or more manifest records failed validation.

    ``line_errors`` holds (line_number, message) pairs, 1-based.
    """

    def __init__(self, message: str, line_errors: list[tuple[int, str]] | None = None):
        super().__init__(message)
        self.line_errors = list(line_errors or [])


class IdAlignmentError(StepSeqError, ValueError):
    """Two keyed record sets do not cover the same instance ids."""

    def __init__(self, message: str, missing: list[str] | None = None):
        super().__init__(message)
        self.missing = list(missing or [])
