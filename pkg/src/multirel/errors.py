"""Exception types shared across the package."""

from __future__ import annotations


class MultirelError(Exception):
    """Base class for all package errors."""


class UniverseMismatch(MultirelError, ValueError):
    pass


class UniverseTooLarge(MultirelError, ValueError):
    pass


class NotSubidentity(MultirelError, ValueError):
    pass


class FixpointError(MultirelError, RuntimeError):
    """Raised when an ascending iteration fails to stabilise."""


class TermSyntaxError(MultirelError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnboundVariable(MultirelError, KeyError):
    def __str__(self) -> str:
        return f"unbound variable {self.args[0]!r}"


class MrelParseError(MultirelError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


class MissingTable(MultirelError, ValueError):
    pass


class ConstraintError(MultirelError, ValueError):
    """A law was given bindings that violate its variable constraints."""
