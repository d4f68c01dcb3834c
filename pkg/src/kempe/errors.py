"""Exception types shared across the toolkit."""

from __future__ import annotations


class GraphParseError(ValueError):
    """Malformed serialized graph. Carries the position of the offending input.

    ``line`` is 1-based (None for single-line formats), ``offset`` is a
    0-based byte/column offset within that line.
    """

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)
        self.line = line
        self.offset = offset


class InvalidChainError(ValueError):
    """A vertex set that is not a maximal connected bichromatic component."""


class BudgetExceededError(RuntimeError):
    """An enumeration blew past its configured budget.

    ``estimate`` is a human-readable lower bound on the size of the search
    space that was attempted.
    """

    def __init__(self, message: str, estimate: str | None = None):
        super().__init__(message if estimate is None else f"{message} (estimate: {estimate})")
        self.estimate = estimate


class PlannerError(Exception):
    """Base class for recolouring-planner failures. ``code`` is stable."""

    code = "planner-error"


class UnsupportedRegimeError(PlannerError):
    """Requested colour count is at or below the planner's threshold."""

    code = "unsupported-regime"


class OpenCaseError(UnsupportedRegimeError):
    """k equals the local degree/clique threshold exactly.

    Connectivity of the colouring space is not known in this regime, so the
    planner refuses rather than attempting it.
    """

    code = "open-case-k-equals-threshold"


class InputClassError(PlannerError):
    """The input graph is outside the class the planner handles."""

    code = "input-class"


class OddHoleViolationError(PlannerError):
    """A chain closed an induced odd cycle; only possible on inputs that
    violate the planner's graph-class precondition."""

    code = "odd-hole-violation"


class CliqueBoundViolationError(PlannerError):
    """A candidate vertex set that must contain a non-edge was a clique;
    signals k below the supported threshold or corrupted planner state."""

    code = "clique-bound-violation"


class InternalLiftError(PlannerError):
    """A lift-step postcondition failed; indicates a bug, not bad input."""

    code = "internal-lift-error"
