"""Text notation for continued fractions and quadratic irrationals.

The two grammars (arbitrary whitespace between tokens):

    cf     := "[" integer ( sep body )? "]"        sep is ";" or ","
    body   := terms? period?                       at least one present
    terms  := integer ("," integer)*
    period := "(" integer ("," integer)* ")"       must come last

    quad   := "(" integer sign "sqrt" "(" rational ")" ")" "/" integer
            | rational sign "sqrt" "(" rational ")"
            | sign? "sqrt" "(" rational ")"
    rational := "-"? INT ("/" INT)?

Rendering is canonical (no whitespace variance) and parses back to the
identical value, so both formats are safe as wire formats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import QuadIrr, Rational, quad_from_parts
from .engine import CFExpansion
from .errors import InvalidDigit, SurdError


@dataclass(frozen=True)
class SourceSpan:
    """Half-open byte range [start, end) into the input text."""

    start: int
    end: int


class ParseError(SurdError, ValueError):
    """Syntax error with the offending location and what was expected."""

    def __init__(self, message: str, span: SourceSpan, expected: list[str] | None = None):
        super().__init__(f"{message} at {span.start}..{span.end}")
        self.message = message
        self.span = span
        self.expected = expected or []


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "sqrt", "eof", or the symbol itself
    text: str
    span: SourceSpan


_SYMBOLS = frozenset("[]();,/+-")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, SourceSpan(i, i + 1)))
            i += 1
            continue
        if "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            tokens.append(_Token("int", text[i:j], SourceSpan(i, j)))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word != "sqrt":
                raise ParseError(f"unknown word {word!r}", SourceSpan(i, j), ["'sqrt'"])
            tokens.append(_Token("sqrt", word, SourceSpan(i, j)))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", SourceSpan(i, i + 1))
    tokens.append(_Token("eof", "", SourceSpan(n, n)))
    return tokens


@dataclass
class _Parser:
    tokens: list[_Token]
    pos: int = field(default=0)

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            name = what or f"'{kind}'"
            raise ParseError(f"expected {name}", tok.span, [name])
        return self.advance()

    def expect_eof(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError("unexpected trailing input", tok.span, ["end of input"])

    def integer(self) -> tuple[int, SourceSpan]:
        """Parse '-'? INT, returning the value and the covered span."""
        tok = self.peek()
        negative = False
        start = tok.span.start
        if tok.kind == "-":
            negative = True
            self.advance()
            tok = self.peek()
        if tok.kind != "int":
            raise ParseError("expected integer", tok.span, ["integer"])
        self.advance()
        value = int(tok.text)
        span = SourceSpan(start, tok.span.end)
        return (-value if negative else value), span

    def rational(self) -> tuple[Rational, SourceSpan]:
        """Parse '-'? INT ('/' INT)? into an exact fraction."""
        num, span = self.integer()
        if self.peek().kind != "/":
            return Fraction(num), span
        self.advance()
        den_tok = self.expect("int", "integer")
        den = int(den_tok.text)
        if den == 0:
            raise ParseError("zero denominator", den_tok.span, ["nonzero integer"])
        return Fraction(num, den), SourceSpan(span.start, den_tok.span.end)


def parse_cf(text: str) -> CFExpansion:
    """Parse the bracket notation for an eventually periodic expansion.

    Digits past position 0 must be >= 1 (InvalidDigit, with the span of
    the offending number); the parenthesized period, when present, must
    be the last item.
    """
    parser = _Parser(_tokenize(text))
    parser.expect("[")
    c0, _ = parser.integer()
    initial = [c0]
    repeating: list[int] = []
    tok = parser.peek()
    if tok.kind in (";", ","):
        parser.advance()
        while True:
            if parser.peek().kind == "(":
                repeating = _parse_period(parser)
                break
            value, span = parser.integer()
            if value < 1:
                raise InvalidDigit(f"digit {value} beyond position 0 must be >= 1", span)
            initial.append(value)
            if parser.peek().kind == ",":
                parser.advance()
                continue
            break
    parser.expect("]")
    parser.expect_eof()
    return CFExpansion(tuple(initial), tuple(repeating))


def _parse_period(parser: _Parser) -> list[int]:
    parser.expect("(")
    digits = []
    while True:
        value, span = parser.integer()
        if value < 1:
            raise InvalidDigit(f"digit {value} in the period must be >= 1", span)
        digits.append(value)
        if parser.peek().kind == ",":
            parser.advance()
            continue
        break
    parser.expect(")")
    return digits


def parse_quad(text: str) -> QuadIrr:
    """Parse a quadratic irrational written with an explicit square root.

    Accepts the plain form ``a +- sqrt(r)`` (rational or missing a) and
    the scaled integer form ``(P +- sqrt(D))/Q``.  A square root is
    mandatory; rational-square or non-positive radicands raise
    DegenerateRadicand / NonPositiveRadicand after a syntactic parse.
    """
    parser = _Parser(_tokenize(text))
    if parser.peek().kind == "(":
        value = _parse_scaled(parser)
    else:
        value = _parse_simple(parser)
    parser.expect_eof()
    return value


def _parse_sqrt_term(parser: _Parser) -> Rational:
    parser.expect("sqrt", "'sqrt'")
    parser.expect("(")
    radicand, _ = parser.rational()
    parser.expect(")")
    return radicand


def _parse_simple(parser: _Parser) -> QuadIrr:
    sign = 1
    rat = Fraction(0)
    tok = parser.peek()
    starts_rational = tok.kind == "int" or (tok.kind == "-" and parser.peek(1).kind == "int")
    if starts_rational:
        rat, _ = parser.rational()
        op = parser.peek()
        if op.kind not in ("+", "-"):
            raise ParseError("a square-root term is required", op.span, ["'+'", "'-'"])
        sign = 1 if op.kind == "+" else -1
        parser.advance()
    elif tok.kind in ("+", "-"):
        sign = 1 if tok.kind == "+" else -1
        parser.advance()
    radicand = _parse_sqrt_term(parser)
    return quad_from_parts(rat, Fraction(sign), radicand)


def _parse_scaled(parser: _Parser) -> QuadIrr:
    parser.expect("(")
    p_num, _ = parser.integer()
    op = parser.peek()
    if op.kind not in ("+", "-"):
        raise ParseError("expected '+' or '-'", op.span, ["'+'", "'-'"])
    sign = 1 if op.kind == "+" else -1
    parser.advance()
    radicand = _parse_sqrt_term(parser)
    parser.expect(")")
    parser.expect("/")
    q_den, q_span = parser.integer()
    if q_den == 0:
        raise ParseError("zero denominator", q_span, ["nonzero integer"])
    return quad_from_parts(Fraction(p_num, q_den), Fraction(sign, q_den), radicand)


def render_cf(cf: CFExpansion) -> str:
    """Canonical text for an expansion; parse_cf inverts it exactly."""
    parts = [str(d) for d in cf.initial[1:]]
    if cf.repeating:
        parts.append("(" + ",".join(str(d) for d in cf.repeating) + ")")
    head = str(cf.initial[0])
    if parts:
        return f"[{head}; " + ", ".join(parts) + "]"
    return f"[{head}]"


def _divisors_descending(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return sorted(small + large, reverse=True)


def render_quad(x: QuadIrr) -> str:
    """Canonical text for a quadratic irrational.

    A zero rational part renders as ``sqrt(r)`` (negated when the root
    sign is -1) and an integer rational part as ``a + sqrt(r)``.
    Otherwise the value is scaled to the integer form ``(P +- sqrt(D))/Q``
    with the smallest denominator Q that keeps P and D integral.
    """
    joiner = " + " if x.sign > 0 else " - "
    if x.rat == 0:
        root = f"sqrt({x.radicand})"
        return root if x.sign > 0 else f"-{root}"
    if x.rat.denominator == 1:
        return f"{x.rat}{joiner}sqrt({x.radicand})"
    scale = math.lcm(x.rat.denominator, x.radicand.denominator)
    p_num = int(x.rat * scale)
    d_val = int(x.radicand * scale * scale)
    q_den = scale
    # shrink by the largest g with g | P, g | Q and g^2 | D
    for g in _divisors_descending(math.gcd(abs(p_num), q_den)):
        if d_val % (g * g) == 0:
            p_num //= g
            d_val //= g * g
            q_den //= g
            break
    return f"({p_num}{joiner}sqrt({d_val}))/{q_den}"
