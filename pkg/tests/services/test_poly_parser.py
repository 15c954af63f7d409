# -*- coding: utf-8 -*-
"""Tests for polynomial parsing and formatting."""

import random
from fractions import Fraction as F

import pytest

from src.core.errors import (
    ImaginaryInExactBackendError,
    NegativeExponentError,
    PolynomialSyntaxError,
)
from src.services.mpoly import XYPoly
from src.services.poly_parser import (
    format_exponent,
    format_poly,
    format_rational,
    parse_poly,
)


class TestParsePoly:
    def test_cusp(self, cusp_poly):
        assert cusp_poly.terms == {
            (0, F(4)): F(2),
            (1, F(2)): F(1),
            (2, F(1)): F(4),
            (3, F(0)): F(4),
        }

    def test_rational_coefficients_and_exponents(self, exact_field):
        f = parse_poly("1/4y^4 - 1/2x^(3/2)y + 0.5x", exact_field)
        assert f.terms == {(4, F(0)): F(1, 4), (1, F(3, 2)): F(-1, 2), (0, F(1)): F(1, 2)}

    def test_explicit_multiplication(self, exact_field):
        assert parse_poly("3*x^2*y", exact_field) == parse_poly("3x^2y", exact_field)

    def test_whitespace_insignificant(self, exact_field):
        assert parse_poly(" - x ^ 2 +  y ", exact_field) == parse_poly("-x^2+y", exact_field)

    def test_like_terms_combined(self, exact_field):
        assert parse_poly("xy + 2xy - 3xy + y", exact_field) == parse_poly("y", exact_field)

    def test_complex_coefficient(self, numeric_field):
        f = parse_poly("(1 + 2i)x + i*y", numeric_field)
        ctx = numeric_field.ctx
        assert f[(0, F(1))] == ctx.mpc(1, 2)
        assert f[(1, F(0))] == ctx.mpc(0, 1)

    def test_imaginary_rejected_in_exact(self, exact_field):
        with pytest.raises(ImaginaryInExactBackendError):
            parse_poly("i*y + x", exact_field)

    @pytest.mark.parametrize("text", ["x^-2 + y", "x^(-1/2) + y", "y^-1 + x"])
    def test_negative_exponent_rejected(self, exact_field, text):
        with pytest.raises(NegativeExponentError):
            parse_poly(text, exact_field)

    @pytest.mark.parametrize(
        "text, position",
        [
            ("2x^^3", 3),
            ("", 0),
            ("x +", 3),
            ("x $ y", 2),
            ("1/0 x", 2),
        ],
    )
    def test_syntax_error_position(self, exact_field, text, position):
        with pytest.raises(PolynomialSyntaxError) as exc_info:
            parse_poly(text, exact_field)
        assert exc_info.value.position == position

    def test_fractional_y_exponent_rejected(self, exact_field):
        with pytest.raises(PolynomialSyntaxError):
            parse_poly("y^1.5", exact_field)


class TestFormatting:
    def test_format_rational(self):
        assert format_rational(F(3)) == "3"
        assert format_rational(F(-1, 2)) == "-1/2"
        assert format_rational(F(2, 3), "latex") == "\\frac{2}{3}"

    def test_format_exponent(self):
        assert format_exponent("x", F(1)) == "x"
        assert format_exponent("x", F(2)) == "x^2"
        assert format_exponent("x", F(2, 3)) == "x^(2/3)"
        assert format_exponent("x", F(2, 3), "latex") == "x^{\\frac{2}{3}}"

    def test_format_cusp(self, cusp_poly):
        assert format_poly(cusp_poly) == "2x^4 + x^2y + 4xy^2 + 4y^3"

    def test_format_orders_by_y_then_x(self, exact_field):
        f = parse_poly("y^2 - x^3 + x y + 1/2x", exact_field)
        assert format_poly(f) == "1/2x - x^3 + xy + y^2"

    def test_format_zero(self, exact_field):
        assert format_poly(XYPoly(exact_field)) == "0"

    def test_format_numeric_imaginary(self, numeric_field):
        f = parse_poly("-2i*y", numeric_field)
        assert format_poly(f, digits=5) == "-2.0i*y"
        assert parse_poly(format_poly(f), numeric_field) == f

    def test_format_numeric_tiny_coefficient_parses_back(self, numeric_field):
        f = XYPoly(numeric_field, {(0, F(1)): F(1, 10**30), (1, F(0)): 1})
        text = format_poly(f)
        assert "e-30" in text
        g = parse_poly(text, numeric_field)
        assert set(g.terms) == set(f.terms)
        for key, coeff in f.terms.items():
            assert abs(g[key] - coeff) <= numeric_field.ctx.mpf(10) ** -60 * abs(coeff)

    def test_scientific_notation_in_exact_input(self, exact_field):
        f = parse_poly("2.5e-3x + 1e2y", exact_field)
        assert f[(0, F(1))] == F(1, 400)
        assert f[(1, F(0))] == F(100)


def _random_poly_text(rng: random.Random) -> str:
    parts = []
    for _ in range(rng.randint(1, 6)):
        numerator = rng.randint(-20, 20) or 1
        denominator = rng.randint(1, 9)
        coeff = F(numerator, denominator)
        x_exp = F(rng.randint(0, 12), rng.randint(1, 4))
        y_exp = rng.randint(0, 5)
        sign = "-" if coeff < 0 else "+"
        body = format_rational(abs(coeff))
        if x_exp:
            body += format_exponent("x", x_exp)
        if y_exp:
            body += format_exponent("y", F(y_exp))
        parts.append(f"{sign} {body}")
    return " ".join(parts)


@pytest.mark.slow
class TestRoundTrip:
    def test_random_exact_polynomials(self, exact_field):
        rng = random.Random(20241017)
        for _ in range(1000):
            f = parse_poly(_random_poly_text(rng), exact_field)
            assert parse_poly(format_poly(f), exact_field) == f
