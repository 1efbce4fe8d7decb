"""Exception hierarchy.

Everything mathematical derives from :class:`DomainError` so the CLI can map
it to exit status 1; parse and I/O problems use :class:`ParseError` (status 2).
"""


class DomainError(Exception):
    """A well-formed request that has no answer in the algebra."""


class RingMismatchError(DomainError, TypeError):
    pass


class DivisionByZeroError(DomainError, ZeroDivisionError):
    pass


class NotDivisibleError(DomainError, ArithmeticError):
    pass


class ShapeError(DomainError, ValueError):
    pass


class SingularMatrixError(DomainError):
    pass


class NotCoprimeError(DomainError):
    pass


class HypothesisError(DomainError):
    """A theorem's hypothesis failed on the given input."""


class GuardExceededError(DomainError):
    pass


class ParseError(ValueError):
    def __init__(self, message, offset=None, text=None):
        self.offset = offset
        self.text = text
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")
