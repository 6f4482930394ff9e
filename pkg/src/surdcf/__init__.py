"""Exact arithmetic for periodic continued fractions and quadratic
irrationals: evaluation, digit identities, and inverse expansion."""

from .core import (
    IDENTITY_MAP,
    RECIPROCAL_MAP,
    MobiusMap,
    QuadIrr,
    Rational,
    compare_to_rational,
    conjugate,
    is_perfect_square,
    is_rational_square,
    isqrt,
    make_quad_irr,
    mobius_apply,
    mul_quad,
    quad_from_parts,
    rational_arith,
    sign_of,
)
from .engine import (
    CFExpansion,
    ConvergentTable,
    SurdState,
    TheoremReport,
    build_convergents,
    canonicalize,
    congruence_check,
    discriminant_poly_in_cn,
    epsilon,
    evaluate_general,
    evaluate_purely_periodic,
    evaluate_zero_periodic,
    exact_floor,
    expand,
    is_palindromic_prefix,
    minimal_period,
    mobius_fixed_point,
    theorem1_report,
    theorem2_report,
)
from .errors import (
    DegenerateRadicand,
    DivisionByZero,
    InvalidDigit,
    NonPositiveRadicand,
    NoRootInWindow,
    PeriodTooLong,
    RationalFixedPoint,
    SurdError,
    TwoRootsInWindow,
)
from .notation import ParseError, SourceSpan, parse_cf, parse_quad, render_cf, render_quad

__all__ = [
    "CFExpansion",
    "ConvergentTable",
    "DegenerateRadicand",
    "DivisionByZero",
    "IDENTITY_MAP",
    "InvalidDigit",
    "MobiusMap",
    "NoRootInWindow",
    "NonPositiveRadicand",
    "ParseError",
    "PeriodTooLong",
    "QuadIrr",
    "Rational",
    "RationalFixedPoint",
    "RECIPROCAL_MAP",
    "SourceSpan",
    "SurdError",
    "SurdState",
    "TheoremReport",
    "TwoRootsInWindow",
    "build_convergents",
    "canonicalize",
    "compare_to_rational",
    "congruence_check",
    "conjugate",
    "discriminant_poly_in_cn",
    "epsilon",
    "evaluate_general",
    "evaluate_purely_periodic",
    "evaluate_zero_periodic",
    "exact_floor",
    "expand",
    "is_palindromic_prefix",
    "is_perfect_square",
    "is_rational_square",
    "isqrt",
    "make_quad_irr",
    "minimal_period",
    "mobius_apply",
    "mobius_fixed_point",
    "mul_quad",
    "parse_cf",
    "parse_quad",
    "quad_from_parts",
    "rational_arith",
    "render_cf",
    "render_quad",
    "sign_of",
    "theorem1_report",
    "theorem2_report",
]

__version__ = "0.1.0"
