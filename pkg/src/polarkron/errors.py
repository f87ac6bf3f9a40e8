"""Exception types shared across the package."""

from __future__ import annotations


class PolarKronError(Exception):
    """Base class for all package errors."""


class DimensionError(PolarKronError, ValueError):
    """Operand shapes do not agree."""


class CapacityError(PolarKronError, ValueError):
    """A size guard was exceeded (matrix capacity, enumeration budget)."""


class KernelParseError(PolarKronError, ValueError):
    """Malformed kernel file. ``line`` is 1-based, or None for whole-input errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IntegrityError(PolarKronError, ValueError):
    """A computed or loaded table violates a structural invariant."""


class NoPolarizationError(PolarKronError, ArithmeticError):
    """The averaging operator has contraction factor 1; no scaling exponent exists."""
