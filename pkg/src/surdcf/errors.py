"""Exception types shared across the package.

Every error raised by the public API derives from :class:`SurdError`, so
callers can catch one base class.  Where a builtin exception carries the
right meaning (division by zero, bad value) the subclass inherits from it
as well.
"""

from __future__ import annotations


class SurdError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(SurdError, ZeroDivisionError):
    """Exact division with a zero divisor."""


class NonPositiveRadicand(SurdError, ValueError):
    """A radicand that is zero or negative cannot define a real square root."""


class DegenerateRadicand(SurdError, ValueError):
    """The radicand is the square of a rational, so the value is rational."""


class InvalidDigit(SurdError, ValueError):
    """A continued-fraction digit beyond position 0 is smaller than 1.

    When the bad digit was found while parsing text, ``span`` locates it in
    the input; for digit lists built programmatically it is ``None``.
    """

    def __init__(self, message: str, span=None):
        super().__init__(message)
        self.message = message
        self.span = span


class RationalFixedPoint(SurdError, ArithmeticError):
    """The fixed-point equation has rational roots (discriminant is a
    perfect square), so the input did not describe a quadratic irrational."""


class NoRootInWindow(SurdError, ArithmeticError):
    """Internal contract violation: neither root lies in the target window."""


class TwoRootsInWindow(SurdError, ArithmeticError):
    """Internal contract violation: both roots lie in the target window."""


class PeriodTooLong(SurdError, RuntimeError):
    """No repeated expansion state was found within the step budget."""
