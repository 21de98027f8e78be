"""Exception types shared across the package."""

from __future__ import annotations


class ZsflowError(Exception):
    """Base class for all package-specific errors."""


class GraphError(ZsflowError, ValueError):
    """Invalid graph construction input (loops, endpoints out of range)."""


class GraphFormatError(GraphError):
    """Unparseable graph or flow file; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotRegularError(ZsflowError, ValueError):
    """Operation requires a regular graph and the input is not."""


class UnsupportedDegreeError(ZsflowError, ValueError):
    """Regular degree outside the range a construction supports."""


class FactorSearchError(ZsflowError, RuntimeError):
    """Factor search exhausted its budget without finding a factor.

    Distinct from invalid input: the requested factor may well exist,
    the search just failed to produce it within bounds.
    """


class FlowUndecidedError(ZsflowError, RuntimeError):
    """Exact search hit its node budget before deciding existence."""


class FlowNonexistentError(ZsflowError, RuntimeError):
    """Exact search exhausted the space and proved no flow exists."""
