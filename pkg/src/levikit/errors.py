"""
Error hierarchy for levikit.

Every error carries the process exit code the CLI reports for it:

1. input validation failures (the input is not what it claims to be)
2. unsupported scope (the input is valid but outside what levikit certifies)
3. internal assertions (a bug, or corrupted input that slipped past validation)
"""

from typing import Any, Optional, Tuple


class LeviKitError(Exception):
    """Base class for all levikit errors."""

    exit_code: int = 3

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def __str__(self) -> str:
        return f"{type(self).__name__}: {self.message}"


class InputError(LeviKitError):
    """The input failed validation."""

    exit_code = 1


class ScopeError(LeviKitError):
    """The input is outside the supported scope."""

    exit_code = 2


class InternalError(LeviKitError):
    """An internal consistency check failed."""

    exit_code = 3


class NotALieAlgebra(InputError):
    def __init__(self, message: str, witness: Optional[Tuple[int, int, int]] = None):
        super().__init__(message, witness=witness)
        self.witness = witness


class NotAGrading(InputError):
    def __init__(self, message: str, witness: Optional[Tuple[Any, Any]] = None):
        super().__init__(message, witness=witness)
        self.witness = witness


class NotADerivation(InputError):
    pass


class NotCommuting(InputError):
    pass


class NotSemisimple(InputError):
    pass


class NotASubalgebra(InputError):
    pass


class NotAnIdeal(InputError):
    pass


class NotGraded(InputError):
    def __init__(self, message: str, deficit: int = 0):
        super().__init__(message, deficit=deficit)
        self.deficit = deficit


class NotInvariant(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class UnknownName(InputError):
    pass


class FormatError(InputError):
    pass


class StaleCertificate(InputError):
    pass


class IrrationalSpectrum(ScopeError):
    pass


class NonIntegerDegree(ScopeError):
    pass


class DepthCapExceeded(InternalError):
    pass


class AssertionFailed(InternalError):
    """A claim of the construction did not hold on this input."""

    def __init__(self, claim: str, message: Optional[str] = None):
        super().__init__(message or f"violated: {claim}", claim=claim)
        self.claim = claim


class InconsistentCocycle(InternalError):
    pass


class NoInnerRepresentative(InternalError):
    pass


class PreconditionViolated(InternalError):
    def __init__(self, precondition: str, message: Optional[str] = None):
        super().__init__(message or f"precondition failed: {precondition}", precondition=precondition)
        self.precondition = precondition
