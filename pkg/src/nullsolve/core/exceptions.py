"""Exception hierarchy shared by every nullsolve app."""
from typing import Any, Optional


class NullsolveError(Exception):
    """Base class for all nullsolve errors."""

    exit_code = 1


# --------------------------------------------------------------------------- #
# Malformed input
# --------------------------------------------------------------------------- #

class InvalidInput(NullsolveError):
    """The input does not describe a valid object."""

    exit_code = 2


class NotAPrime(InvalidInput):
    pass


class RangeViolation(InvalidInput):
    pass


class EmptySet(InvalidInput):
    pass


class ZeroMissing(InvalidInput):
    pass


class NotDistinctModP(InvalidInput):
    pass


class NotAResidueSystem(InvalidInput):
    pass


class CoversZero(InvalidInput):
    pass


class ZeroInSet(InvalidInput):
    pass


class MalformedNode(InvalidInput):
    pass


class NotIncident(InvalidInput):
    pass


class ColumnSumNotDivisible(InvalidInput):
    pass


class EngineUnsupported(InvalidInput):
    pass


class InvalidInstance(InvalidInput):
    """A general-form instance failed validation; carries the certificate."""

    def __init__(self, message: str, certificate: Optional[Any] = None):
        super().__init__(message)
        self.certificate = certificate


class ParseError(InvalidInput):
    """Instance file syntax error, located by 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# --------------------------------------------------------------------------- #
# Preconditions of the existence theorems
# --------------------------------------------------------------------------- #

class PreconditionViolated(NullsolveError):
    exit_code = 2


class DegreeBoundViolated(PreconditionViolated):
    pass


class ZeroUnitViolated(PreconditionViolated):
    pass


class FullCoefficientZero(PreconditionViolated):
    pass


# --------------------------------------------------------------------------- #
# Solver outcomes
# --------------------------------------------------------------------------- #

class NonIntegralResult(NullsolveError):
    """An exact division that should have been integral was not."""


class NoSolution(NullsolveError):
    exit_code = 3


class CapExceeded(NullsolveError):
    exit_code = 4


class StepCapExceeded(CapExceeded):
    pass


class VerificationFailed(NullsolveError):
    """A solver answer failed the independent re-check."""
