"""Shared exception types."""

from __future__ import annotations


class ExpfieldError(Exception):
    """Base class for all errors raised by this package."""


class BudgetExceeded(ExpfieldError):
    """A bounded computation (Groebner basis, elimination) ran out of steps.

    Carries the step budget that was exhausted so reports can state it.
    """

    def __init__(self, budget: int, context: str = ""):
        self.budget = budget
        self.context = context
        msg = f"step budget of {budget} exceeded"
        if context:
            msg += f" during {context}"
        super().__init__(msg)


class RingMismatch(ExpfieldError):
    """Operands live in different polynomial rings."""


class EmptyVariety(ExpfieldError):
    """The defining ideal is the unit ideal over the parameter field."""


class NotExpressible(ExpfieldError):
    """An element (or its exponential) is not expressible in a presentation."""


class PreconditionFailure(ExpfieldError):
    """An operation's precondition failed; carries a recheckable certificate."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class FormulaSyntaxError(ExpfieldError):
    """Syntax error in the formula concrete syntax, with 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SessionError(ExpfieldError):
    """Session-file problem: syntax, undefined reference, or duplicate name."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
