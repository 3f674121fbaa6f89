# ---------------- utils/algebra/errors.py ----------------
"""
Error hierarchy for the algebra engine.

Design rules
------------
- Engine modules never print or exit. They raise one of these.
- Callers (CLI, Streamlit pages) decide how to surface them; the CLI maps
  each family onto an exit status (see betti_cli.EXIT_CODES).
"""

from __future__ import annotations


class AlgebraError(RuntimeError):
    """Base exception for every engine failure."""


class DimensionMismatchError(AlgebraError):
    """Raised when two values live over different variable sets."""


class NotDivisibleError(AlgebraError):
    """Raised when quotient(a, b) is requested but b does not divide a."""


class ExponentOverflowError(AlgebraError):
    """Raised when an exponent leaves the checked integer range."""


class IdealDomainError(AlgebraError):
    """Raised when an ideal violates an operation's precondition."""


class ResourceCapError(AlgebraError):
    """Raised when a request would enumerate more faces than the configured cap."""


class FieldSpecError(AlgebraError):
    """Raised for a malformed field description or a non-prime modulus."""


class TheoremViolationError(AlgebraError):
    """Raised when a checked theorem fails on a concrete input."""


class VerificationMismatchError(AlgebraError):
    """Raised when two Betti methods disagree on the same ideal."""


class IdealParseError(AlgebraError):
    """
    Raised for text that does not match the monomial/ideal grammar.

    line and column are 1-based and point at the offending character.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
