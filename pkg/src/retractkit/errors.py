"""Shared exception types."""

from __future__ import annotations


class RetractKitError(Exception):
    """Base class for all library errors."""


class DegreeOfZero(RetractKitError):
    """The degree of the zero polynomial was requested."""


class DivisorZero(RetractKitError):
    """Exact division by the zero polynomial was requested."""


class RingMismatch(RetractKitError):
    """Operands live in different rings, or in the wrong ring for the operation."""


class ParseError(RetractKitError):
    """Rejected input text.  Carries the offset of the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class PreconditionViolated(RetractKitError):
    """An operation's stated hypothesis does not hold for the given arguments."""


class NotFoundWithinBound(RetractKitError):
    """A bounded search exhausted its budget without an answer."""


class InvalidDegree(RetractKitError):
    """A requested degree is impossible (not a divisor, negative, and so on)."""


class ConstantGenerator(RetractKitError):
    """A constant polynomial was offered where a nonconstant generator is required."""


class NotIdempotent(RetractKitError):
    """The endomorphism is not equal to its own square."""


class IdentityImproper(RetractKitError):
    """The identity map is not accepted as a proper retraction."""


class DivisibilityUnexpected(RetractKitError):
    """A divisibility that should be impossible held even after retrying."""


class TermBudgetExceeded(RetractKitError):
    """An intermediate polynomial grew past the configured support cap."""


class GeneratorNotFound(RetractKitError):
    """No generator of the image algebra could be extracted."""
