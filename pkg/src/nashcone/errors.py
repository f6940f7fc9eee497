"""Exception types shared across the package."""


class NashconeError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(NashconeError, ValueError):
    """Raised when a graph file cannot be parsed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoMultiplierGuarantee(NashconeError, ValueError):
    """Raised when a multiplier is requested for a divisor that is not
    strictly anti-nef; no multiple of such a divisor need ever satisfy the
    realization criterion, so the search is refused rather than looped."""


class InternalInvariantError(NashconeError, RuntimeError):
    """A soundness re-check failed on a value this package itself produced.

    Indicates a bug, never a property of the input. Maps to CLI exit code 2.
    """
