"""Exception types shared across the package."""

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets into an input text, for diagnostics."""

    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError("a span needs 0 <= start <= end")


class TangleError(Exception):
    """Base class for every domain error raised by tanglekit."""


class ZeroOverZero(TangleError):
    """Raised when a fraction is constructed from (0, 0)."""


class IndeterminateSum(TangleError):
    """Raised for inf + inf, the one sum the projective line cannot name."""


class InfiniteInput(TangleError):
    """Raised when a finite-valued algorithm is handed the infinite point."""


class InfiniteValue(TangleError):
    """Raised when a vector that evaluates to infinity reaches a rewrite
    that only has finite canonical spellings."""


class InfiniteTangle(TangleError):
    """Raised when a tangle whose fraction is infinite reaches an operation
    defined only for finite-fraction tangles."""


class NoMixedSigns(TangleError):
    """Raised by the transfer rewrite when no opposite-sign pair remains."""


class NotRational(TangleError):
    """Raised when an operation restricted to rational tangles is applied
    to a merely algebraic expression."""


class NoFlypeSite(TangleError):
    """Raised when an expression root matches none of the flype shapes."""


class UndefinedColorFraction(TangleError):
    """Raised for constant colorings, whose matrix determines no fraction."""


class ZeroScale(TangleError):
    """Raised when a color matrix is rescaled by zero."""


class WrongStartColors(TangleError):
    """Raised when a closure determinant is requested for a coloring that
    did not start from (1, 0) or (0, 1)."""


class ClosureInconsistent(TangleError):
    """Raised when the numerator closure would identify arcs whose colors
    disagree in the requested modulus."""


class AlreadySolved(TangleError):
    """Raised when a hint is requested for a finished game."""


class SessionNotFound(TangleError):
    """Raised for operations on an unknown game session id."""


class SnapshotCorrupt(TangleError):
    """Raised when a session snapshot file fails validation at load."""


class ParseError(TangleError):
    """Syntax error with a byte span into the offending input."""

    def __init__(self, message: str, start: int, end: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.span = SourceSpan(start, end)
        self.expected = tuple(expected)

    def __str__(self) -> str:
        base = super().__str__()
        if self.expected:
            return f"{base} at {self.span.start}..{self.span.end} (expected {', '.join(self.expected)})"
        return f"{base} at {self.span.start}..{self.span.end}"
