"""Exception types shared across the package."""


class KatzCyclicError(Exception):
    """Base class for all library errors."""


class UnsupportedOperationError(KatzCyclicError):
    """Operation not available for this ring kind (e.g. norm on a non-Banach ring)."""


class NotInvertibleError(KatzCyclicError):
    """An element required to be invertible is not."""


class FactorialNotInvertibleError(NotInvertibleError):
    """(n-1)! is not invertible in the coefficient ring."""


class PreconditionError(KatzCyclicError):
    """An operation precondition was violated."""


class InternalConsistencyError(KatzCyclicError):
    """A state the theory guarantees impossible was reached."""


class ParseError(KatzCyclicError):
    """Syntax error while parsing an element expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
