"""Exception hierarchy shared across the package."""

__all__ = [
    "DeodharError",
    "InputError",
    "DomainError",
    "NotInComponentError",
    "InternalCheckError",
]


class DeodharError(Exception):
    """Base class for every error raised by this package."""


class InputError(DeodharError, ValueError):
    """Structurally invalid input: wrong shapes, bad indices, malformed words."""


class DomainError(DeodharError, ValueError):
    """Well-formed input that violates a mathematical precondition."""


class NotInComponentError(DomainError):
    """A flag does not lie in the Deodhar component required by the operation."""


class InternalCheckError(DeodharError, RuntimeError):
    """An internal cross-check failed.  Indicates a bug, never bad input."""
