# -*- coding: utf-8 -*-
"""Polynomial text input and plain/LaTeX output.

Grammar (whitespace insignificant):

    poly      = [sign] term {sign term}
    term      = coeff ['*'] [xfactor] ['*'] [yfactor] | xfactor ['*'] [yfactor] | yfactor
    coeff     = number ['*'] ['i'] | 'i' | '(' [sign] cnumber {sign cnumber} ')'
    cnumber   = number ['*'] ['i'] | 'i'
    number    = digits ['.' digits] ['e' [sign] digits] ['/' digits]
    xfactor   = 'x' ['^' exponent]
    yfactor   = 'y' ['^' digits]
    exponent  = ['-'] digits | '(' ['-'] digits ['/' digits] ')'
"""

import re
from fractions import Fraction
from typing import Any, Literal

from src.core.errors import ImaginaryInExactBackendError, NegativeExponentError, PolynomialSyntaxError
from src.services.field import Coeff, Field
from src.services.mpoly import Point, XYPoly

Style = Literal["plain", "latex"]

TOKEN_PATTERNS = [
    ("NUMBER", r"\d+(?:\.\d+)?(?:e[-+]?\d+)?"),
    ("X", r"x"),
    ("Y", r"y"),
    ("I", r"i"),
    ("PLUS", r"\+"),
    ("MINUS", r"-"),
    ("STAR", r"\*"),
    ("CARET", r"\^"),
    ("SLASH", r"/"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("SPACE", r"\s+"),
]
TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_PATTERNS))


class _Scanner:
    """Tokenizer keeping the source position of every lexeme."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        position = 0
        while position < len(text):
            match = TOKEN_REGEX.match(text, position)
            if match is None:
                raise PolynomialSyntaxError(f"unexpected character {text[position]!r}", position, text)
            if match.lastgroup != "SPACE":
                self.tokens.append((match.lastgroup, match.group(), position))
            position = match.end()
        self.index = 0

    @property
    def kind(self) -> str | None:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else None

    @property
    def position(self) -> int:
        return self.tokens[self.index][2] if self.index < len(self.tokens) else len(self.text)

    def accept(self, kind: str) -> str | None:
        if self.kind == kind:
            lexeme = self.tokens[self.index][1]
            self.index += 1
            return lexeme
        return None

    def expect(self, kind: str, what: str) -> str:
        lexeme = self.accept(kind)
        if lexeme is None:
            found = self.tokens[self.index][1] if self.index < len(self.tokens) else "end of input"
            raise PolynomialSyntaxError(f"expected {what}, found {found!r}", self.position, self.text)
        return lexeme

    def peek(self, *kinds: str) -> bool:
        return self.kind in kinds


class _Parser:
    def __init__(self, text: str, fld: Field):
        self.scanner = _Scanner(text)
        self.field = fld
        self.terms: list[tuple[Point, Coeff]] = []

    def error(self, message: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.scanner.position, self.scanner.text)

    # <POLY> -> [ <SIGN> ] <TERM> { <SIGN> <TERM> }
    def poly(self) -> XYPoly:
        s = self.scanner
        if s.kind is None:
            raise self.error("empty polynomial")
        sign = self.sign(optional=True)
        self.term(sign)
        while s.kind is not None:
            sign = self.sign(optional=False)
            self.term(sign)
        return XYPoly(self.field, self.terms)

    def sign(self, optional: bool) -> int:
        s = self.scanner
        if s.accept("PLUS"):
            return 1
        if s.accept("MINUS"):
            return -1
        if optional:
            return 1
        raise self.error("expected '+' or '-'")

    # <TERM> -> <COEFF> ['*'] [<XFACTOR>] ['*'] [<YFACTOR>] | <XFACTOR> ['*'] [<YFACTOR>] | <YFACTOR>
    def term(self, sign: int) -> None:
        s = self.scanner
        start = s.position
        re_part, im_part = Fraction(1), Fraction(0)
        has_coeff = s.peek("NUMBER", "I", "LPAREN")
        if has_coeff:
            re_part, im_part = self.coeff()
            s.accept("STAR")

        x_exp, y_exp = Fraction(0), 0
        has_x = has_y = False
        if s.accept("X"):
            has_x = True
            x_exp = self.x_exponent()
            s.accept("STAR")
        if s.accept("Y"):
            has_y = True
            y_exp = self.y_exponent()

        if not (has_coeff or has_x or has_y):
            raise self.error("expected a term")
        if s.peek("X", "Y", "NUMBER", "I", "LPAREN"):
            raise self.error("unexpected factor in term")

        self.terms.append(((y_exp, x_exp), self.make_coeff(sign * re_part, sign * im_part, start)))

    # <COEFF> -> <NUMBER> ['*'] ['i'] | 'i' | '(' [<SIGN>] <CNUMBER> { <SIGN> <CNUMBER> } ')'
    def coeff(self) -> tuple[Fraction, Fraction]:
        s = self.scanner
        if s.accept("LPAREN"):
            re_part, im_part = Fraction(0), Fraction(0)
            sign = self.sign(optional=True)
            while True:
                value, imaginary = self.cnumber()
                if imaginary:
                    im_part += sign * value
                else:
                    re_part += sign * value
                if s.accept("RPAREN"):
                    return re_part, im_part
                sign = self.sign(optional=False)
        value, imaginary = self.cnumber()
        return (Fraction(0), value) if imaginary else (value, Fraction(0))

    # <CNUMBER> -> <NUMBER> ['*'] ['i'] | 'i'
    def cnumber(self) -> tuple[Fraction, bool]:
        s = self.scanner
        if s.accept("I"):
            return Fraction(1), True
        value = self.number()
        if s.peek("STAR") and s.index + 1 < len(s.tokens) and s.tokens[s.index + 1][0] == "I":
            s.accept("STAR")
        return value, s.accept("I") is not None

    # <NUMBER> -> digits ['.' digits] ['e' [<SIGN>] digits] ['/' digits]
    def number(self) -> Fraction:
        s = self.scanner
        value = Fraction(s.expect("NUMBER", "a number"))
        if s.accept("SLASH"):
            position = s.position
            denominator = Fraction(s.expect("NUMBER", "a denominator"))
            if denominator == 0:
                raise PolynomialSyntaxError("zero denominator", position, s.text)
            value /= denominator
        return value

    # <EXPONENT> -> ['-'] digits | '(' ['-'] digits ['/' digits] ')'
    def x_exponent(self) -> Fraction:
        s = self.scanner
        if not s.accept("CARET"):
            return Fraction(1)
        position = s.position
        if s.accept("LPAREN"):
            negative = s.accept("MINUS") is not None
            exponent = Fraction(int(self.integer()))
            if s.accept("SLASH"):
                denominator = int(self.integer())
                if denominator == 0:
                    raise self.error("zero denominator in exponent")
                exponent /= denominator
            s.expect("RPAREN", "')'")
        else:
            negative = s.accept("MINUS") is not None
            exponent = Fraction(int(self.integer()))
        if negative and exponent:
            raise NegativeExponentError(f"negative x-exponent at position {position}")
        return exponent

    def y_exponent(self) -> int:
        s = self.scanner
        if not s.accept("CARET"):
            return 1
        position = s.position
        if s.accept("MINUS"):
            raise NegativeExponentError(f"negative y-exponent at position {position}")
        return int(self.integer())

    def integer(self) -> str:
        s = self.scanner
        lexeme = s.expect("NUMBER", "an integer")
        if not lexeme.isdigit():
            raise PolynomialSyntaxError("exponent must be an integer", s.tokens[s.index - 1][2], s.text)
        return lexeme

    def make_coeff(self, re_part: Fraction, im_part: Fraction, position: int) -> Coeff:
        if self.field.is_exact:
            if im_part:
                raise ImaginaryInExactBackendError(
                    f"imaginary unit at position {position} requires the numeric backend"
                )
            return re_part
        return self.field.complex(re_part, im_part)


def parse_poly(text: str, fld: Field) -> XYPoly:
    """Parse polynomial text into a canonical XYPoly.

    Raises:
        PolynomialSyntaxError: text does not follow the grammar
        NegativeExponentError: an exponent is negative
        ImaginaryInExactBackendError: 'i' used with the exact backend
    """
    return _Parser(text, fld).poly()


# Output


def format_rational(value: Fraction, style: Style = "plain") -> str:
    if value.denominator == 1:
        return str(value.numerator)
    if style == "latex":
        return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"
    return f"{value.numerator}/{value.denominator}"


def format_exponent(base: str, exponent: Fraction, style: Style = "plain") -> str:
    """Format base^exponent, omitting exponent 1."""
    if exponent == 1:
        return base
    if style == "latex":
        return f"{base}^{{{format_rational(exponent, style)}}}"
    if exponent.denominator == 1:
        return f"{base}^{exponent.numerator}"
    return f"{base}^({exponent.numerator}/{exponent.denominator})"


def _format_real(fld: Field, value: Any, digits: int, style: Style) -> str:
    if fld.is_exact:
        return format_rational(value, style)
    return fld.ctx.nstr(value, digits)


def split_sign(fld: Field, value: Coeff) -> tuple[int, Coeff]:
    """Split a coefficient into a display sign and a magnitude-like remainder.

    Complex coefficients with a nonzero real part keep their own sign.
    """
    re_part, im_part = fld.real_parts(value)
    if fld.is_exact or fld.negligible(im_part, abs(value)):
        return (-1, -value) if re_part < 0 else (1, value)
    if fld.negligible(re_part, abs(value)):
        return (-1, -value) if im_part < 0 else (1, value)
    return 1, value


def format_coeff(fld: Field, value: Coeff, digits: int = 12, style: Style = "plain") -> tuple[str, bool]:
    """Format a nonnegative-signed coefficient body.

    Returns:
        (text, atomic): atomic is False when the text is a parenthesized sum
    """
    re_part, im_part = fld.real_parts(value)
    if fld.is_exact:
        return format_rational(value, style), True
    scale = abs(value)
    if fld.negligible(im_part, scale):
        return _format_real(fld, re_part, digits, style), True
    unit = "i"
    if fld.negligible(re_part, scale):
        return f"{_format_real(fld, im_part, digits, style)}{unit}", True
    sign = "-" if im_part < 0 else "+"
    return (
        f"({_format_real(fld, re_part, digits, style)} {sign} "
        f"{_format_real(fld, abs(im_part), digits, style)}{unit})",
        False,
    )


def format_monomial(
    fld: Field,
    coeff: Coeff,
    x_exp: Fraction,
    y_exp: int,
    digits: int = 12,
    style: Style = "plain",
    x_name: str = "x",
) -> tuple[int, str]:
    """Format one term as (sign, body) with the sign factored out."""
    sign, body_value = split_sign(fld, coeff)
    variables = ""
    if x_exp != 0:
        variables += format_exponent(x_name, x_exp, style)
    if y_exp != 0:
        variables += format_exponent("y", Fraction(y_exp), style)

    text, _ = format_coeff(fld, body_value, digits, style)
    if variables and text in ("1", "1.0"):
        return sign, variables
    if variables and style == "plain" and not fld.is_exact:
        return sign, f"{text}*{variables}" if text[-1] == "i" else f"{text}{variables}"
    return sign, f"{text}{variables}"


def join_terms(parts: list[tuple[int, str]]) -> str:
    """Join signed term bodies as 'a + b - c'."""
    if not parts:
        return "0"
    first_sign, first = parts[0]
    pieces = [f"-{first}" if first_sign < 0 else first]
    for sign, body in parts[1:]:
        pieces.append(f"{'-' if sign < 0 else '+'} {body}")
    return " ".join(pieces)


def format_poly(f: XYPoly, style: Style = "plain", digits: int | None = None) -> str:
    """Format f deterministically: ascending y-exponent, then ascending x-exponent.

    Exact polynomials round-trip through parse_poly.
    """
    fld = f.field
    digits = 0 if fld.is_exact else (digits or fld.digits())
    ordered = sorted(f.terms.items(), key=lambda item: (item[0][0], item[0][1]))
    parts = [format_monomial(fld, coeff, a, b, digits, style) for (b, a), coeff in ordered]
    return join_terms(parts)
