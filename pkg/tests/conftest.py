"""Shared oracles for the test suite.

The numeric helpers use mpmath at 80 decimal digits; they sit entirely
on the test side so the exact code paths never touch floating point.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath

DPS = 80
TOL = mpmath.mpf(10) ** -40


def mp_quad(x, dps: int = DPS) -> mpmath.mpf:
    """High-precision value of rat + sign*sqrt(radicand)."""
    with mpmath.workdps(dps):
        rat = mpmath.mpf(x.rat.numerator) / x.rat.denominator
        root = mpmath.sqrt(mpmath.mpf(x.radicand.numerator) / x.radicand.denominator)
        return rat + x.sign * root


def mp_cf(digits, dps: int = DPS) -> mpmath.mpf:
    """High-precision value of a finite digit list, folded from the back."""
    with mpmath.workdps(dps):
        acc = mpmath.mpf(digits[-1])
        for d in reversed(digits[:-1]):
            acc = d + 1 / acc
        return acc


def assert_close(a, b, tol=TOL):
    assert abs(a - b) < tol, f"|{a} - {b}| >= {tol}"


def naive_gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def floor_by_interval(P: int, Q: int, D: int) -> int:
    """Floor of (P + sqrt(D))/Q by refining a rational bracket of sqrt(D).

    Independent of the closed-form floor: brackets sqrt(D) between
    r/2^k and (r+1)/2^k and tightens k until both ends share a floor.
    Terminates because sqrt(D) is irrational.
    """
    k = 1
    while True:
        scale = 1 << k
        r = math.isqrt(D * scale * scale)
        lo = (P + Fraction(r, scale)) / Q
        hi = (P + Fraction(r + 1, scale)) / Q
        if Q < 0:
            lo, hi = hi, lo
        a, b = math.floor(lo), math.floor(hi)
        if a == b:
            return a
        k += 1


def all_blocks(max_len: int, max_digit: int):
    """Every repeating block of length <= max_len with digits in
    1..max_digit, ordered by length then lexicographically."""
    for n in range(1, max_len + 1):
        yield from itertools.product(range(1, max_digit + 1), repeat=n)
