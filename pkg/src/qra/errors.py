"""Exception types shared across the package."""


class QraError(Exception):
    """Base class for package errors."""


class StructuralError(QraError):
    """Malformed input: wrong dimensions, indices out of range, ragged data."""


class SignatureError(QraError):
    """An operation was requested that the object's signature does not carry."""


class PreconditionError(QraError):
    """A documented precondition of an operation does not hold."""


class DomainError(QraError):
    """An argument is outside the operation's domain."""


class InternalCheckError(QraError):
    """A property that holds for every valid input failed: indicates a bug."""


class BudgetExhausted(QraError):
    """A bounded search ran out of nodes or wall time.

    Carries a resumable checkpoint describing the remaining work.
    """

    def __init__(self, message, checkpoint=None):
        super().__init__(message)
        self.checkpoint = checkpoint
