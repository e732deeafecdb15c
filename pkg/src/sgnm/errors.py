"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SGNMError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(SGNMError, ValueError):
    """Invalid graph construction (loop, duplicate, out-of-range vertex)."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class DecodeError(SGNMError, ValueError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapabilityError(SGNMError):
    """Input exceeds a configured size cap of an exact algorithm."""


class PreconditionError(SGNMError, ValueError):
    """An operation was called outside its documented precondition."""


class BudgetError(SGNMError):
    """A search ran out of its node budget.

    ``lower`` and ``upper`` carry the best bounds known when the search stopped
    (``upper`` may be ``None`` when no feasible witness was found).
    """

    def __init__(self, message: str, lower=None, upper=None, nodes: int = 0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class UndefinedProbabilityError(SGNMError, ZeroDivisionError):
    """Probability requested over an empty graph class."""


class SamplerError(SGNMError):
    """A sampler could not produce the requested batch."""

    def __init__(self, message: str, acceptance: float | None = None):
        super().__init__(message)
        self.acceptance = acceptance
