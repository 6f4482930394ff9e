"""Exact scalar arithmetic: rationals, integer square roots, quadratic
irrationals in canonical form, and Moebius maps acting on them.

A quadratic irrational is stored as the triple (rat, radicand, sign) for
the value ``rat + sign*sqrt(radicand)`` with a rational non-square
radicand > 0.  Because the coefficient of the square root is pinned to
+1 or -1, the triple is unique for a given real value: two canonical
triples are equal exactly when their values are.

All values are immutable and hashable; every operation is a pure
function, so values can be shared freely between concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateRadicand, DivisionByZero, NonPositiveRadicand

# All exact scalar arithmetic runs on stdlib Fraction: arbitrary precision,
# always reduced, denominator >= 1, sign carried by the numerator.
Rational = Fraction

RationalLike = Union[Rational, int]


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Rational:
    """Apply one of ``+ - * /`` to two rationals, exactly.

    Raises DivisionByZero when dividing by zero.  Accepts the ASCII
    operator characters as well as the unicode minus/times/divide signs.
    """
    a = Fraction(a)
    b = Fraction(b)
    if op in ("+",):
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def isqrt(n: int) -> tuple[int, bool]:
    """Floor of the square root of a nonnegative integer, plus exactness.

    Returns ``(root, exact)`` with ``root = floor(sqrt(n))`` and ``exact``
    true iff ``root*root == n``.
    """
    if n < 0:
        raise ValueError("isqrt of a negative integer")
    root = math.isqrt(n)
    return root, root * root == n


def is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_rational_square(r: Rational) -> bool:
    """True iff the reduced fraction r is the square of a rational.

    With gcd(numerator, denominator) = 1 this holds exactly when both
    parts are perfect squares.
    """
    return r >= 0 and is_perfect_square(r.numerator) and is_perfect_square(r.denominator)


@dataclass(frozen=True)
class QuadIrr:
    """Canonical quadratic irrational ``rat + sign*sqrt(radicand)``.

    Invariants, checked at construction: radicand > 0, radicand is not
    the square of a rational, sign is +1 or -1.  Both fractions are kept
    reduced by Fraction itself.
    """

    rat: Rational
    radicand: Rational
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.rat, Fraction) or not isinstance(self.radicand, Fraction):
            raise TypeError("rat and radicand must be Fraction")
        if self.radicand <= 0:
            raise NonPositiveRadicand(f"radicand {self.radicand} is not positive")
        if is_rational_square(self.radicand):
            raise DegenerateRadicand(
                f"radicand {self.radicand} is a rational square; the value is rational"
            )

    def conjugate(self) -> "QuadIrr":
        return QuadIrr(self.rat, self.radicand, -self.sign)

    def __neg__(self) -> "QuadIrr":
        return QuadIrr(-self.rat, self.radicand, -self.sign)

    def __add__(self, other: RationalLike) -> "QuadIrr":
        if isinstance(other, (int, Fraction)):
            return QuadIrr(self.rat + other, self.radicand, self.sign)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: RationalLike) -> "QuadIrr":
        if isinstance(other, (int, Fraction)):
            return QuadIrr(self.rat - other, self.radicand, self.sign)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                return Fraction(0)
            return quad_from_parts(self.rat * f, self.sign * f, self.radicand)
        if isinstance(other, QuadIrr):
            return mul_quad(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __lt__(self, other: RationalLike) -> bool:
        return compare_to_rational(self, Fraction(other)) < 0

    def __gt__(self, other: RationalLike) -> bool:
        return compare_to_rational(self, Fraction(other)) > 0

    def __le__(self, other: RationalLike) -> bool:
        # x is irrational, so <= against a rational is just <
        return self < other

    def __ge__(self, other: RationalLike) -> bool:
        return self > other

    def __str__(self) -> str:
        root = f"sqrt({self.radicand})"
        if self.rat == 0:
            return root if self.sign > 0 else f"-{root}"
        joiner = "+" if self.sign > 0 else "-"
        return f"{self.rat} {joiner} {root}"

    def __repr__(self) -> str:
        return f"QuadIrr({self.rat!r}, {self.radicand!r}, {self.sign:+d})"


def make_quad_irr(a: RationalLike, sign: int, r: RationalLike) -> QuadIrr:
    """Build the canonical value ``a + sign*sqrt(r)``.

    Rejects r <= 0 (NonPositiveRadicand) and rational-square r
    (DegenerateRadicand): such an r does not define a quadratic
    irrational.
    """
    return QuadIrr(Fraction(a), Fraction(r), sign)


def quad_from_parts(a: Rational, coeff: Rational, r: Rational):
    """Canonicalize ``a + coeff*sqrt(r)``: fold |coeff| into the radicand.

    Returns a Fraction when coeff = 0, else a QuadIrr.  r must be a
    positive non-square rational, so the folded radicand coeff^2 * r
    stays non-square.
    """
    if coeff == 0:
        return Fraction(a)
    return QuadIrr(Fraction(a), coeff * coeff * r, 1 if coeff > 0 else -1)


def conjugate(x: QuadIrr) -> QuadIrr:
    """Flip the sign of the irrational part: a + s*sqrt(r) -> a - s*sqrt(r)."""
    return x.conjugate()


def sign_of(x: QuadIrr) -> int:
    """Exact sign of x, +1 or -1 (a quadratic irrational is never 0).

    Case analysis on the rational part and the root sign; the remaining
    cases compare rat^2 against the radicand.  Equality rat^2 == radicand
    cannot occur because the radicand is not a rational square.
    """
    a, r, s = x.rat, x.radicand, x.sign
    if s > 0:
        if a >= 0:
            return 1
        return 1 if r > a * a else -1
    if a <= 0:
        return -1
    return 1 if a * a > r else -1


def compare_to_rational(x: QuadIrr, t: RationalLike) -> int:
    """Exact order of x against a rational t: -1 if x < t, +1 if x > t.

    Equality is impossible; the result is the sign of x - t.
    """
    return sign_of(QuadIrr(x.rat - Fraction(t), x.radicand, x.sign))


def mul_quad(x: QuadIrr, y: QuadIrr):
    """Exact product of two values living in the same quadratic field.

    Requires the radicand ratio to be the square of a rational (always
    the case for values produced from one computation).  Returns a
    Fraction when the irrational parts cancel, else a canonical QuadIrr.
    """
    ratio = y.radicand / x.radicand
    if not is_rational_square(ratio):
        raise ValueError("values lie in different quadratic fields")
    k = Fraction(math.isqrt(ratio.numerator), math.isqrt(ratio.denominator))
    # y = y.rat + (y.sign * k) * sqrt(x.radicand)
    a1, b1 = x.rat, Fraction(x.sign)
    a2, b2 = y.rat, y.sign * k
    a = a1 * a2 + b1 * b2 * x.radicand
    b = a1 * b2 + a2 * b1
    return quad_from_parts(a, b, x.radicand)


@dataclass(frozen=True)
class MobiusMap:
    """Integer Moebius transform ``t -> (p*t + p_prev) / (q*t + q_prev)``.

    The determinant p*q_prev - q*p_prev must be nonzero, which makes the
    map invertible on the projective line.
    """

    p: int
    p_prev: int
    q: int
    q_prev: int

    def __post_init__(self):
        if self.determinant() == 0:
            raise ValueError("Moebius map with zero determinant")

    def determinant(self) -> int:
        return self.p * self.q_prev - self.q * self.p_prev

    def compose(self, inner: "MobiusMap") -> "MobiusMap":
        """Map equal to applying ``inner`` first, then ``self``."""
        return MobiusMap(
            self.p * inner.p + self.p_prev * inner.q,
            self.p * inner.p_prev + self.p_prev * inner.q_prev,
            self.q * inner.p + self.q_prev * inner.q,
            self.q * inner.p_prev + self.q_prev * inner.q_prev,
        )

    def apply(self, x: QuadIrr) -> QuadIrr:
        return mobius_apply(self, x)


IDENTITY_MAP = MobiusMap(1, 0, 0, 1)
RECIPROCAL_MAP = MobiusMap(0, 1, 1, 0)


def mobius_apply(m: MobiusMap, x: QuadIrr) -> QuadIrr:
    """Image of a quadratic irrational under a Moebius map, in canonical
    form.

    Writing x = a + s*sqrt(r), numerator and denominator are both of the
    form A + B*sqrt(r); the denominator is rationalized by its conjugate.
    The image radicand differs from r by a rational square factor, so
    the image stays in the same quadratic field.
    """
    a, r = x.rat, x.radicand
    s = Fraction(x.sign)
    num_a, num_b = m.p * a + m.p_prev, m.p * s
    den_a, den_b = m.q * a + m.q_prev, m.q * s
    norm = den_a * den_a - den_b * den_b * r
    if norm == 0:
        # would need sqrt(r) rational, impossible for a non-square radicand
        raise DegenerateRadicand("internal error: denominator norm vanished")
    out_a = (num_a * den_a - num_b * den_b * r) / norm
    out_b = (num_b * den_a - num_a * den_b) / norm
    if out_b == 0:
        raise DegenerateRadicand(
            "internal error: Moebius image of an irrational came out rational"
        )
    return quad_from_parts(out_a, out_b, r)
