"""Error hierarchy for the toolkit.

Input validation failures derive from ``ValueError`` as well, so callers
that only care about "bad input" can catch that.
"""

from __future__ import annotations


class SSGError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidAutomatonError(SSGError, ValueError):
    """An automaton definition violates its invariants."""


class InvalidWordError(SSGError, ValueError):
    """A group word or tree path is malformed (unknown state, letter >= d)."""


class MismatchedGroupsError(SSGError, ValueError):
    """Two operands are defined over different automata."""


class InvalidPointError(SSGError, ValueError):
    """A rational point is malformed or used outside its domain."""


class PartitionError(SSGError, ValueError):
    """Cones overlap, cover when they must not, or cannot be refined."""


class ParseError(SSGError, ValueError):
    """A text document could not be parsed."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class BoundExceededError(SSGError):
    """A configurable search bound was exhausted."""

    def __init__(self, message: str, bound: int) -> None:
        super().__init__(message)
        self.bound = bound


class NotContractingWithinBounds(BoundExceededError):
    """Nucleus iteration did not reach a fixed point within its caps."""

    def __init__(self, message: str, bound: int, size: int, depth: int) -> None:
        super().__init__(message, bound)
        self.size = size
        self.depth = depth


class NotStabilized(BoundExceededError):
    """A germ signature did not stabilize within the depth cap."""

    def __init__(self, cap: int) -> None:
        super().__init__(f"germ signature did not stabilize within cap {cap}", cap)
        self.cap = cap


class FixedPointViolation(SSGError, ValueError):
    """An element expected to fix a point moves it."""


class MoverContractError(SSGError, ValueError):
    """A supplied mover does not send its source point to its target."""


class InvariantViolation(SSGError):
    """A structural guarantee failed; indicates a bug, never bad input."""


class CheckFailed(SSGError):
    """A verification check observed a counterexample."""


class CheckSkipped(SSGError):
    """A verification check has no input it can run on."""


class UnknownSuiteError(SSGError, ValueError):
    """No verification suite has the requested name."""
