"""Exception hierarchy.  CLI exit codes key off the base classes."""
from __future__ import annotations


class CLPolyError(Exception):
    """Base class for library errors."""


class DomainError(CLPolyError, ValueError):
    """Input is well formed but outside an operation's domain (CLI exit 3)."""


class InvariantViolation(CLPolyError, AssertionError):
    """An internal consistency check failed (CLI exit 4)."""


class RejectC(DomainError):
    pass


class RejectScale(DomainError):
    pass


class NotExpressible(DomainError):
    pass


class NotCLClass(DomainError):
    pass


class NoPositiveRoot(DomainError):
    pass


class DegreeMismatch(DomainError):
    pass


class NotCLInput(DomainError):
    pass


class NotOnCircle(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class MissingReference(DomainError):
    pass


class SingularSubsystem(InvariantViolation):
    pass
