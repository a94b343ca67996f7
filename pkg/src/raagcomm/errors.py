"""Exception hierarchy shared by every module.

Input problems raise :class:`ValidationError` (CLI exit code 1); a failed
internal cross-check raises :class:`VerificationError` (CLI exit code 2).
"""


class ValidationError(ValueError):
    """Bad input: out-of-range index, malformed JSON, violated precondition."""


class BoundError(ValidationError):
    """A lifted path left the truncated cube {0..s}^m."""

    def __init__(self, message, prefix_length=None, position=None):
        super().__init__(message)
        self.prefix_length = prefix_length
        self.position = position


class VerificationError(RuntimeError):
    """Two independent computations disagree."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class ConsistencyError(VerificationError):
    """An algebraic invariant such as d1 * d2 == 0 failed."""
