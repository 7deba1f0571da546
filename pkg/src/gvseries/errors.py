"""Exception types shared across the package."""

from __future__ import annotations


class GVError(Exception):
    """Base class for all errors raised by gvseries."""


class ValidityExhausted(GVError):
    """A truncated t-series no longer carries enough trusted order."""

    def __init__(self, message: str, required: int | None = None, available: int | None = None):
        super().__init__(message)
        self.required = required
        self.available = available


class NotAUnit(GVError):
    """Series inversion was requested for a series with no invertible leading term."""


class ParityError(GVError, ValueError):
    """An odd t-exponent was supplied where only even exponents are allowed."""


class NonzeroConstantTerm(GVError, ValueError):
    pass


class StrictIntegrality(GVError):
    """A non-integral invariant was recovered while strict mode was on."""

    def __init__(self, message: str, key=None, value=None):
        super().__init__(message)
        self.key = key
        self.value = value


class NotSuperRigidShape(GVError, ValueError):
    pass


class ResourceLimit(GVError):
    """Enumeration would exceed the configured memory budget."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class ParseError(GVError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class DimensionMismatch(GVError, ValueError):
    """File contents or CLI flags disagree with the declared lattice header."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
