"""Custom exceptions for toricnest computations."""

from __future__ import annotations


class ToricNestError(Exception):
    """Base exception for all toricnest errors."""

    def __init__(self, message: str, *, context: dict[str, object] | None = None):
        super().__init__(message)
        self.context = context or {}


class RingMismatchError(ToricNestError):
    """Raised when two values from different rings are combined."""


class ExponentOverflowError(ToricNestError):
    """Raised when an exponent or a total degree leaves the 64-bit range."""


class NotDivisibleError(ToricNestError):
    """Raised when a quotient is requested for a non-dividing monomial."""


class ParseError(ToricNestError):
    """Raised when an input text cannot be parsed."""

    def __init__(
        self,
        message: str,
        *,
        line_number: int | None = None,
        context: dict[str, object] | None = None,
    ):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message, context=context)
        self.line_number = line_number


class MonomialParseError(ParseError):
    """Raised when monomial or binomial syntax is invalid."""


class PreconditionError(ToricNestError):
    """Raised when an operation is called outside its documented preconditions."""


class NotAConfigurationError(PreconditionError):
    """Raised when no nonnegative weight vector grades the monomials."""


class DuplicateMemberError(PreconditionError):
    """Raised when a configuration lists the same monomial twice."""


class SharedVariableError(PreconditionError):
    """Raised when inner configurations of a nested system share variables."""


class NoFactorizationError(PreconditionError):
    """Raised when a monomial has no factorization of a type in the base configuration."""


class InfeasibleSpecError(PreconditionError):
    """Raised when Segre-Veronese constraints admit no monomial."""


class IncoherentMarkingError(PreconditionError):
    """Raised when a marked basis admits no separating weight vector."""


class CombinatorialLimitError(ToricNestError):
    """Raised when an enumeration or elimination exceeds its configured cap."""


class ReductionBoundExceeded(ToricNestError):
    """Raised when rewriting does not terminate within the configured step bound."""


class VerificationFailure(ToricNestError):
    """Raised when a checked mathematical claim does not hold."""


class KeyLemmaViolation(VerificationFailure):
    """Raised when direct membership and the group-wise criterion disagree."""


class SortClosureError(VerificationFailure):
    """Raised when a sorted rewrite leaves the configuration."""
