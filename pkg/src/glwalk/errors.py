"""Exception types shared across the package."""

from __future__ import annotations


class GlwalkError(Exception):
    """Base class for library-specific errors."""


class EdgeListError(GlwalkError, ValueError):
    """Malformed or inconsistent edge-list document."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegreeStructureError(GlwalkError, ValueError):
    """Graph does not split into the two degree classes the loop-weight reduction needs."""


class ConvergenceError(GlwalkError, RuntimeError):
    """Symmetric eigensolver failed to converge."""


class DegenerateGapError(GlwalkError, RuntimeError):
    """Two-level candidate time is undefined because the relevant eigenvalue gap vanishes."""


class WalkCountOverflowError(GlwalkError, OverflowError):
    """A closed-walk count left the supported 128-bit range."""

    def __init__(self, length: int):
        self.length = length
        super().__init__(f"closed-walk count exceeds the 128-bit range at length {length}")


class InvolutionSearchLimitError(GlwalkError, ValueError):
    """Automorphism search requested on a graph above the supported size."""
