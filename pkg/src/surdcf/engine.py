"""Periodic continued fractions: convergents, exact evaluation to
quadratic irrationals, the last-digit identity for twice the rational
part, the palindrome criterion, and the inverse expansion algorithm.

Digit conventions.  A digit list ``c_0, c_1, ...`` may start with any
integer; every later digit must be >= 1.  The objects of study are the
values ``[0; overline(c_1..c_n)]`` in (0, 1), handled by
:func:`evaluate_zero_periodic`, and their reciprocals
``[overline(c_1..c_n)]`` > 1, handled by :func:`evaluate_purely_periodic`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    MobiusMap,
    QuadIrr,
    Rational,
    compare_to_rational,
    is_perfect_square,
    mobius_apply,
)
from .errors import (
    InvalidDigit,
    NoRootInWindow,
    PeriodTooLong,
    RationalFixedPoint,
    TwoRootsInWindow,
)

Digits = tuple[int, ...]


def _check_digits(digits: Sequence[int], *, first_any: bool) -> Digits:
    """Validate a digit list: entries beyond position 0 must be >= 1.

    With ``first_any`` false the rule applies to position 0 as well
    (repeating blocks have no free leading digit).
    """
    out = tuple(int(d) for d in digits)
    start = 1 if first_any else 0
    for i in range(start, len(out)):
        if out[i] < 1:
            raise InvalidDigit(f"digit {out[i]} at position {i} must be >= 1")
    return out


@dataclass(frozen=True)
class CFExpansion:
    """An eventually periodic continued fraction.

    ``initial`` holds the leading digits (at least one; the first may be
    any integer), ``repeating`` the digits that repeat forever.  An empty
    repeating block denotes a finite expansion, which parses and renders
    fine but is rejected by evaluation.
    """

    initial: Digits
    repeating: Digits

    def __post_init__(self):
        if len(self.initial) == 0:
            raise InvalidDigit("initial block must hold at least the leading digit")
        object.__setattr__(self, "initial", _check_digits(self.initial, first_any=True))
        object.__setattr__(self, "repeating", _check_digits(self.repeating, first_any=False))

    def digit_stream(self, count: int) -> list[int]:
        """First ``count`` digits of the infinite digit sequence."""
        out = list(self.initial[:count])
        if not self.repeating:
            return out
        i = 0
        while len(out) < count:
            out.append(self.repeating[i % len(self.repeating)])
            i += 1
        return out


@dataclass(frozen=True)
class ConvergentTable:
    """Numerators p_k and denominators q_k of the convergents of a digit
    list, for k = -1 .. len(digits)-1.

    Seeded with p_-1 = 1, q_-1 = 0, p_0 = c_0, q_0 = 1 and extended by
    p_k = c_k p_{k-1} + p_{k-2} (same for q).  Consecutive columns
    satisfy p_k q_{k-1} - q_k p_{k-1} = (-1)^{k+1}, which keeps every
    p_k/q_k in lowest terms.
    """

    digits: Digits
    _p: tuple[int, ...]
    _q: tuple[int, ...]

    def p(self, k: int) -> int:
        return self._p[k + 1]

    def q(self, k: int) -> int:
        return self._q[k + 1]

    @property
    def last(self) -> int:
        return len(self.digits) - 1

    def convergent(self, k: int) -> Rational:
        return Fraction(self.p(k), self.q(k))


def build_convergents(digits: Sequence[int]) -> ConvergentTable:
    """Run the convergent recurrence over a nonempty digit list."""
    ds = _check_digits(digits, first_any=True)
    if not ds:
        raise InvalidDigit("digit list must be nonempty")
    p = [1, ds[0]]
    q = [0, 1]
    for c in ds[1:]:
        p.append(c * p[-1] + p[-2])
        q.append(c * q[-1] + q[-2])
    return ConvergentTable(ds, tuple(p), tuple(q))


def _zero_block_table(repeating: Sequence[int]) -> ConvergentTable:
    block = _check_digits(repeating, first_any=False)
    if not block:
        raise InvalidDigit("repeating block must be nonempty")
    return build_convergents((0,) + block)


def epsilon(repeating: Sequence[int]) -> Rational:
    """The correction term (p_{n-1} - q_{n-2}) / q_{n-1} for the block
    c_1..c_n, computed over the digit list [0, c_1, ..., c_n].

    Strictly between -1 and 1, and independent of the last digit c_n
    (the recurrence only feeds c_n into column n, which is never read).
    """
    table = _zero_block_table(repeating)
    n = table.last
    return Fraction(table.p(n - 1) - table.q(n - 2), table.q(n - 1))


def is_palindromic_prefix(repeating: Sequence[int]) -> bool:
    """True iff c_k = c_{n-k} for k = 1..n-1, i.e. the block with its last
    digit dropped reads the same in both directions.  Vacuously true for
    a single-digit block."""
    block = tuple(repeating)
    if not block:
        raise InvalidDigit("repeating block must be nonempty")
    prefix = block[:-1]
    return prefix == prefix[::-1]


def congruence_check(repeating: Sequence[int]) -> bool:
    """True iff p_{n-1}^2 == (-1)^n modulo q_{n-1}.

    Both residues are reduced into [0, q_{n-1}) before comparison, which
    settles the sign ambiguity when q_{n-1} <= 2.
    """
    table = _zero_block_table(repeating)
    n = table.last
    modulus = table.q(n - 1)
    lhs = (table.p(n - 1) ** 2) % modulus
    rhs = (-1) ** n % modulus
    return lhs == rhs


@dataclass(frozen=True)
class TheoremReport:
    """Everything the last repeating digit does (and does not) determine.

    two_a is twice the rational part of [0; overline(block)]; it always
    equals -c_n + epsilon with |epsilon| < 1.  frac_two_a is its
    fractional part: epsilon itself when p_{n-1} >= q_{n-2}
    (case_flag "p_ge_q"), epsilon + 1 otherwise ("p_lt_q").  The three
    booleans are equivalent ways of saying two_a is an integer.
    """

    block: Digits
    epsilon: Rational
    two_a: Rational
    frac_two_a: Rational
    case_flag: str
    palindromic: bool
    congruence_holds: bool
    epsilon_zero: bool


def theorem1_report(repeating: Sequence[int]) -> TheoremReport:
    """Compute two_a = -c_n + epsilon and its fractional part for a block."""
    table = _zero_block_table(repeating)
    block = table.digits[1:]
    n = table.last
    eps = Fraction(table.p(n - 1) - table.q(n - 2), table.q(n - 1))
    two_a = -block[-1] + eps
    if table.p(n - 1) >= table.q(n - 2):
        case_flag, frac = "p_ge_q", eps
    else:
        case_flag, frac = "p_lt_q", eps + 1
    return TheoremReport(
        block=block,
        epsilon=eps,
        two_a=two_a,
        frac_two_a=frac,
        case_flag=case_flag,
        palindromic=is_palindromic_prefix(block),
        congruence_holds=congruence_check(block),
        epsilon_zero=eps == 0,
    )


def theorem2_report(repeating: Sequence[int]) -> tuple[bool, bool, bool]:
    """Three equivalent statements about a block, as (a, b, c):

    a) twice the rational part of [0; overline(block)] is an integer,
    b) it equals minus the last digit exactly,
    c) the block minus its last digit is a palindrome.
    """
    rep = theorem1_report(repeating)
    return (rep.two_a.denominator == 1, rep.two_a == -rep.block[-1], rep.palindromic)


Window = tuple[Optional[Rational], Optional[Rational]]


def mobius_fixed_point(m: MobiusMap, window: Window) -> QuadIrr:
    """The unique fixed point of a Moebius map inside an open interval.

    Solves q*t^2 + (q_prev - p)*t - p_prev = 0 exactly.  A perfect-square
    discriminant means the roots are rational and the map did not come
    from a valid periodic expansion (RationalFixedPoint).  The caller's
    window, with rational endpoints or None for an unbounded side, must
    contain exactly one root.
    """
    if m.q == 0:
        raise RationalFixedPoint("fixed-point equation is not quadratic (q = 0)")
    disc = (m.q_prev - m.p) ** 2 + 4 * m.q * m.p_prev
    if disc <= 0:
        raise NoRootInWindow(f"no real irrational roots (discriminant {disc})")
    if is_perfect_square(disc):
        raise RationalFixedPoint(f"discriminant {disc} is a perfect square")
    rat = Fraction(m.p - m.q_prev, 2 * m.q)
    radicand = Fraction(disc, 4 * m.q * m.q)
    lo, hi = window

    def inside(x: QuadIrr) -> bool:
        if lo is not None and compare_to_rational(x, lo) < 0:
            return False
        if hi is not None and compare_to_rational(x, hi) > 0:
            return False
        return True

    roots = [QuadIrr(rat, radicand, s) for s in (1, -1)]
    hits = [x for x in roots if inside(x)]
    if len(hits) == 1:
        return hits[0]
    if not hits:
        raise NoRootInWindow(f"neither root of {m} lies in {window}")
    raise TwoRootsInWindow(f"both roots of {m} lie in {window}")


def _fixed_point_map(table: ConvergentTable) -> MobiusMap:
    """Map whose fixed point is the value of [0; overline(c_1..c_n)],
    built from the last two columns of the table over [0, c_1..c_n].

    Substituting the reciprocal of the value for the periodic tail in the
    complete-quotient relation turns t -> (p_n t + p_{n-1})/(q_n t + q_{n-1})
    into t -> (p_{n-1} t + p_n)/(q_{n-1} t + q_n); its fixed-point
    equation is q_{n-1} t^2 + (q_n - p_{n-1}) t - p_n = 0.
    """
    n = table.last
    return MobiusMap(table.p(n - 1), table.p(n), table.q(n - 1), table.q(n))


ZERO_ONE_WINDOW: Window = (Fraction(0), Fraction(1))
ABOVE_ONE_WINDOW: Window = (Fraction(1), None)


def evaluate_zero_periodic(repeating: Sequence[int]) -> QuadIrr:
    """Exact value of [0; overline(c_1..c_n)], a quadratic irrational in
    (0, 1)."""
    table = _zero_block_table(repeating)
    return mobius_fixed_point(_fixed_point_map(table), ZERO_ONE_WINDOW)


def evaluate_purely_periodic(repeating: Sequence[int]) -> QuadIrr:
    """Exact value of [overline(c_1..c_n)] > 1, the reciprocal of the
    zero-initial value of the same block.

    Uses the fixed point of the map built from the last two columns of
    the table over c_1..c_n itself (c_1 sits at position 0).
    """
    block = _check_digits(repeating, first_any=False)
    if not block:
        raise InvalidDigit("repeating block must be nonempty")
    table = build_convergents(block)
    k = table.last
    m = MobiusMap(table.p(k), table.p(k - 1), table.q(k), table.q(k - 1))
    return mobius_fixed_point(m, ABOVE_ONE_WINDOW)


def evaluate_general(cf: CFExpansion) -> QuadIrr:
    """Exact value of [b_0, ..., b_m, overline(c_1..c_n)].

    The periodic tail is evaluated first; the initial block contributes
    the Moebius map formed by the last two convergent columns over
    b_0..b_m.  An initial block [0] reduces the map to t -> 1/t, which
    reproduces evaluate_zero_periodic exactly.
    """
    if not cf.repeating:
        raise InvalidDigit("cannot evaluate a finite expansion (empty repeating block)")
    y = evaluate_purely_periodic(cf.repeating)
    table = build_convergents(cf.initial)
    k = table.last
    m = MobiusMap(table.p(k), table.p(k - 1), table.q(k), table.q(k - 1))
    return mobius_apply(m, y)


@dataclass(frozen=True)
class SurdState:
    """State (P + sqrt(D)) / Q of the integer expansion algorithm.

    D is a positive non-square integer, Q is nonzero and divides
    D - P^2; under these constraints every step of the expansion stays
    in exact integers.
    """

    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if self.D <= 0 or is_perfect_square(self.D):
            raise ValueError(f"D must be positive and non-square, got {self.D}")
        if (self.D - self.P * self.P) % self.Q != 0:
            raise ValueError("Q must divide D - P^2")

    @classmethod
    def from_quad_irr(cls, x: QuadIrr) -> "SurdState":
        """Integer form of a quadratic irrational.

        With rat = n/d and radicand = u/w the value is
        (n*w + sign*sqrt(u*w*d^2)) / (d*w); a negative root sign is folded
        by negating both P and Q.  If Q does not divide D - P^2 yet, the
        classical scaling P *= |Q|, D *= Q^2, Q *= |Q| makes it so.
        """
        n, d = x.rat.numerator, x.rat.denominator
        u, w = x.radicand.numerator, x.radicand.denominator
        P, Q, D = n * w, d * w, u * w * d * d
        if x.sign < 0:
            P, Q = -P, -Q
        if (D - P * P) % Q != 0:
            P *= abs(Q)
            D *= Q * Q
            Q *= abs(Q)
        return cls(P, Q, D)

    def value(self) -> QuadIrr:
        return QuadIrr(
            Fraction(self.P, self.Q),
            Fraction(self.D, self.Q * self.Q),
            1 if self.Q > 0 else -1,
        )


def exact_floor(s: SurdState) -> int:
    """Floor of (P + sqrt(D)) / Q without any rounding.

    sqrt(D) is irrational, so floor(P + sqrt(D)) = P + floor(sqrt(D))
    and ceil(P + sqrt(D)) = P + floor(sqrt(D)) + 1; dividing by Q picks
    one or the other depending on the sign of Q, and integer floor
    division finishes the job.
    """
    t = math.isqrt(s.D)
    if s.Q > 0:
        return (s.P + t) // s.Q
    return (s.P + t + 1) // s.Q


def _surd_step(P: int, Q: int, D: int, digit: int) -> tuple[int, int]:
    """One expansion step: subtract the digit and invert, in integers."""
    P2 = digit * Q - P
    Q2 = (D - P2 * P2) // Q
    return P2, Q2


def expand(x: QuadIrr, max_steps: int = 10000) -> CFExpansion:
    """Eventually periodic digit expansion of a quadratic irrational.

    Iterates the integer surd recurrence and detects the cycle as the
    first repeated (P, Q) pair; the states before the repeat entry give
    the initial block.  A purely periodic value (cycle from step 0) has
    one period digit unrolled into the initial block so the leading
    digit always exists.  The result is canonical: minimal period and
    minimal preperiod, and re-evaluating it returns x exactly.

    Raises PeriodTooLong when no cycle shows up within max_steps states.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    state = SurdState.from_quad_irr(x)
    P, Q, D = state.P, state.Q, state.D
    t = math.isqrt(D)  # constant across steps: D never changes
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    for step in range(max_steps):
        key = (P, Q)
        if key in seen:
            start = seen[key]
            initial, repeating = digits[:start], digits[start:]
            if not initial:
                # purely periodic: unroll one digit so the leading digit exists
                initial = [repeating[0]]
                repeating = repeating[1:] + repeating[:1]
            return canonicalize(CFExpansion(tuple(initial), tuple(repeating)))
        seen[key] = step
        d = (P + t) // Q if Q > 0 else (P + t + 1) // Q
        digits.append(d)
        P, Q = _surd_step(P, Q, D, d)
    raise PeriodTooLong(f"no repeated state within {max_steps} steps")


def minimal_period(block: Digits) -> Digits:
    """Shortest block whose repetition reproduces ``block``."""
    n = len(block)
    for d in range(1, n + 1):
        if n % d == 0 and block == block[:d] * (n // d):
            return block[:d]
    return block


def canonicalize(cf: CFExpansion) -> CFExpansion:
    """Minimal-period, minimal-preperiod form of an expansion.

    First the repeating block is cut down to its shortest repeating
    unit; then, while the last initial digit equals the last repeating
    digit, that digit moves into the period (pop it, rotate the period
    right).  The digit stream is unchanged.  The rotation stops before
    the initial block would become empty, so the leading digit survives;
    a fully periodic stream keeps one digit unrolled in front.
    """
    if not cf.repeating:
        raise InvalidDigit("cannot canonicalize a finite expansion (empty repeating block)")
    repeating = minimal_period(cf.repeating)
    initial = list(cf.initial)
    while len(initial) > 1 and initial[-1] == repeating[-1]:
        initial.pop()
        repeating = repeating[-1:] + repeating[:-1]
    return CFExpansion(tuple(initial), repeating)


def discriminant_poly_in_cn(prefix: Sequence[int]) -> tuple[int, int, int]:
    """Coefficients (A, B, C) with A*c^2 + B*c + C equal to the
    discriminant of the fixed-point equation of any block ``prefix + [c]``.

    Over the table for [0, c_1..c_{n-1}]:
        A = q_{n-1}^2
        B = 2 q_{n-1} (q_{n-2} + p_{n-1})
        C = (q_{n-2} - p_{n-1})^2 + 4 q_{n-1} p_{n-2}
    obtained by expanding (q_n - p_{n-1})^2 + 4 q_{n-1} p_n with the
    recurrences q_n = c q_{n-1} + q_{n-2} and p_n = c p_{n-1} + p_{n-2}.
    The irrational part of the block's value is then
    sqrt(A*c^2 + B*c + C) / (2 q_{n-1}), whatever the last digit is.
    """
    pre = _check_digits(prefix, first_any=False)
    table = build_convergents((0,) + pre)
    m = table.last
    a = table.q(m) ** 2
    b = 2 * table.q(m) * (table.q(m - 1) + table.p(m))
    c = (table.q(m - 1) - table.p(m)) ** 2 + 4 * table.q(m) * table.p(m - 1)
    return a, b, c
