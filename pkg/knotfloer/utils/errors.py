"""Exception hierarchy for knotfloer.

Every error carries the exit code the CLI reports for it.
"""

from typing import Sequence

from ..constants import EXIT_DOMAIN, EXIT_PARSE, EXIT_UNEXPECTED, EXIT_VERIFICATION


class KnotFloerError(Exception):
    """Base class for all knotfloer errors."""

    exit_code = EXIT_UNEXPECTED


class KfcSyntaxError(KnotFloerError):
    """Malformed input text (kfc complex, PL function, piece list, topology)."""

    exit_code = EXIT_PARSE

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        self.message = message
        super().__init__(f"line {line_number}: {message}")


class ComplexValidationError(KnotFloerError):
    """A chain complex failed validation; carries every violation found."""

    exit_code = EXIT_PARSE

    def __init__(self, violations: Sequence[object]):
        self.violations = list(violations)
        lines = "\n".join(f"  {v}" for v in self.violations)
        super().__init__(f"invalid complex ({len(self.violations)} violation(s)):\n{lines}")


class DomainError(KnotFloerError):
    """Arguments outside the domain of an operation."""

    exit_code = EXIT_DOMAIN


class NotAKnotComplexError(DomainError):
    """The homology does not have rank one, so no knot invariant is defined."""

    def __init__(self, rank: int, what: str = "free rank"):
        self.rank = rank
        super().__init__(f"not a knot complex: {what} is {rank}, expected 1")


class ReconstructionError(DomainError):
    """The PL fit of Upsilon disagreed with a midpoint evaluation."""


class VerificationError(KnotFloerError):
    """An identity suite failed."""

    exit_code = EXIT_VERIFICATION
