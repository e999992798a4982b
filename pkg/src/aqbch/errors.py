"""Exception hierarchy.

Every error raised by the library derives from :class:`CodeError`.  The CLI maps
:class:`PreconditionError` to exit status 2 and :class:`ResourceCapError` to 3.
"""

from __future__ import annotations


class CodeError(Exception):
    """Base class for all library errors."""


class PreconditionError(CodeError, ValueError):
    """An input violates the documented preconditions of an operation."""


class ResourceCapError(CodeError):
    """A computation would exceed a configured resource cap."""


# finite fields

class NotPrime(PreconditionError):
    pass


class FieldTooLarge(ResourceCapError):
    pass


class FieldMismatch(PreconditionError):
    pass


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class ZeroElement(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class CoefficientNotInBaseField(CodeError):
    """Internal inconsistency: a minimal polynomial left the base field."""


# cyclic codes

class DeltaOutOfRange(PreconditionError):
    pass


class PreconditionViolated(PreconditionError):
    pass


class NotCosetClosed(PreconditionError):
    pass


# linear codes

class LengthMismatch(PreconditionError):
    pass


class TooLargeToEnumerate(ResourceCapError):
    """Exhaustive enumeration would examine more than ``cap`` vectors.

    ``lower_bound`` records what the partial search proved (no qualifying
    vector of weight below it exists), or ``None`` if nothing was searched.
    """

    def __init__(self, required: int, cap: int, lower_bound: int | None = None):
        self.required = required
        self.cap = cap
        self.lower_bound = lower_bound
        msg = f"enumeration needs {required} vectors, cap is {cap}"
        if lower_bound is not None:
            msg += f" (partial search proves weight >= {lower_bound})"
        super().__init__(msg)


# quantum constructions

class NotNested(PreconditionError):
    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        self.witness = witness
        super().__init__(message)


class NonpositiveK(PreconditionError):
    pass


class DimensionViolation(PreconditionError):
    pass


class IntersectionMismatch(PreconditionError):
    pass


class KTooSmall(PreconditionError):
    pass


class NotPure(PreconditionError):
    pass


class CosetCollision(PreconditionError):
    pass


class RangeViolation(PreconditionError):
    pass


class NotSelfOrthogonal(PreconditionError):
    pass


class TNotInWindow(PreconditionError):
    pass


class ParseError(PreconditionError):
    pass
