"""Exception types shared across the package."""

from __future__ import annotations


class KnotGenusError(Exception):
    """Base class for all package errors."""


class PDSyntaxError(KnotGenusError, ValueError):
    """A PD line does not match the grammar."""

    def __init__(self, message: str, column: int | None = None):
        self.column = column
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


class PDValidationError(KnotGenusError, ValueError):
    """A syntactically valid PD code violates a diagram invariant."""

    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


class ZeroPolynomialError(KnotGenusError, ValueError):
    """An operation that needs a nonzero polynomial got zero."""


class ConsistencyError(KnotGenusError, RuntimeError):
    """An internal cross-check failed; this is a bug, not bad input."""


class OracleMismatchError(ConsistencyError):
    """Seifert-matrix and Fox-calculus Alexander polynomials disagree."""

    def __init__(self, name: str, from_blocks, from_oracle):
        self.from_blocks = from_blocks
        self.from_oracle = from_oracle
        super().__init__(
            f"{name}: Seifert-matrix Alexander polynomial {from_blocks} "
            f"does not match Fox-calculus polynomial {from_oracle}"
        )


class NotAKnotError(KnotGenusError, ValueError):
    """A knot-only operation received a multi-component diagram."""
