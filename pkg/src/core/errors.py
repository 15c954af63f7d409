# -*- coding: utf-8 -*-
"""Exception hierarchy for Puiseux expansion.

Every error raised by the library derives from ``PuiseuxError`` and carries
the structured attributes a caller needs to react (retry numerically, raise
precision, report a position in the input).
"""

from typing import Any


class PuiseuxError(Exception):
    """Base class for all expansion errors."""


class InputError(PuiseuxError):
    """Raised when the polynomial input or an option is malformed."""


class InvalidOptionError(InputError):
    """Raised when an option value is out of range."""


class PolynomialSyntaxError(InputError):
    """Raised when polynomial text does not follow the grammar."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class NegativeExponentError(InputError):
    """Raised when an exponent is negative."""


class ImaginaryInExactBackendError(InputError):
    """Raised when the imaginary unit appears with the exact backend."""


class FractionalExponentError(InputError):
    """Raised when translation meets a fractional x-exponent."""


class ZeroPolynomialError(PuiseuxError):
    """Raised when an operation requires a nonzero polynomial."""


class NonRationalRootError(PuiseuxError):
    """Raised when an exact characteristic polynomial has no rational root.

    Attributes:
        factor: Remaining factor coefficients (ascending degree)
        branch_id: Branch where the factor was met, if known
    """

    def __init__(self, message: str, factor: list[Any], branch_id: str | None = None):
        super().__init__(message)
        self.factor = factor
        self.branch_id = branch_id


class NoConvergenceError(PuiseuxError):
    """Raised when numeric root iteration fails at the working precision."""

    def __init__(self, message: str, precision: int):
        super().__init__(message)
        self.precision = precision


class NegativeResultExponentError(PuiseuxError):
    """Raised when shift substitution yields a negative x-exponent."""


class ConstantTermNonzeroError(PuiseuxError):
    """Raised when shift substitution leaves a constant term."""


class EmptySegmentError(PuiseuxError):
    """Raised when no support point lies on a segment."""


class InconsistentStateError(PuiseuxError):
    """Raised when pure-x terms remain but no segment has negative slope."""


class NotRegularError(PuiseuxError):
    """Raised when the regular tail preconditions do not hold."""


class AmbiguousBranchError(PuiseuxError):
    """Raised when several continuations share the requested prefix.

    Attributes:
        candidates: Number of continuations that survived
    """

    def __init__(self, message: str, candidates: int):
        super().__init__(message)
        self.candidates = candidates


class NoSolutionError(PuiseuxError):
    """Raised when no continuation matches the requested prefix."""


class ResidualUnderflowError(PuiseuxError):
    """Raised when the residual is exactly zero at a sample point."""
