"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so the grouping matters: parse and
usage problems, precondition gates, and budget overruns are kept apart.
"""

from __future__ import annotations


class RainbowAlgError(Exception):
    """Base class for all errors raised by this package."""


class DimacsError(RainbowAlgError, ValueError):
    """Input text is not a well-formed DIMACS edge file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeaderError(DimacsError):
    pass


class VertexOutOfRangeError(DimacsError):
    pass


class DuplicateEdgeError(DimacsError):
    pass


class SelfLoopError(DimacsError):
    pass


class FieldError(RainbowAlgError, ValueError):
    """Field/variable-count mismatch or a field unsuitable for an encoding."""


class PreconditionError(RainbowAlgError):
    """A graph fails a standing assumption (connectivity, diameter bound)."""


class DisconnectedGraphError(PreconditionError):
    pass


class DiameterGateError(PreconditionError):
    """Diameter exceeds k, which already settles rc(G) > k."""

    def __init__(self, diameter: float, k: int):
        self.diameter = diameter
        self.k = k
        super().__init__(f"rc > {k} by diameter (diameter {diameter} > {k})")


class BudgetExceededError(RainbowAlgError):
    """An exhaustive search or expansion would exceed its configured cap."""
