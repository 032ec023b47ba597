"""Exception and warning types shared across the package."""

from __future__ import annotations


class ZetaError(ValueError):
    """Base class for domain errors raised by this package."""

    code = "error"


class PoleError(ZetaError):
    """Evaluation requested at (or numerically on top of) a pole."""

    code = "pole"


class NoClosedFormError(ZetaError):
    """No closed-form evaluation exists for this function/argument combination."""

    code = "no_closed_form"


class ArgumentError(ZetaError):
    """Argument violates a documented precondition."""

    code = "invalid_argument"


class BracketError(ZetaError):
    """A root bracket does not change sign."""

    code = "bracket"


class DegradedAccuracyWarning(RuntimeWarning):
    """Numeric evaluation left the validated precision domain."""


class NumericOverflowError(ZetaError):
    """A numeric result overflowed or became NaN."""

    code = "overflow"
