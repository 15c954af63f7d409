# -*- coding: utf-8 -*-
"""Tests for the undetermined-coefficients oracle."""

from fractions import Fraction as F

import pytest

from src.core.errors import AmbiguousBranchError, NoSolutionError
from src.services.oracle import oracle_branches, oracle_expand, ramification_bound
from src.services.poly_parser import parse_poly


class TestRamificationBound:
    def test_cusp(self, cusp_poly):
        assert ramification_bound(cusp_poly) == 6

    def test_cubic(self, cubic_poly):
        assert ramification_bound(cubic_poly) == 12

    def test_prefix_denominators(self, cusp_poly):
        assert ramification_bound(cusp_poly, [(F(1, 5), F(1))]) == 30


class TestOracleExpand:
    def test_cusp_regular_branch(self, cusp_poly):
        series = oracle_expand(cusp_poly, (F(2), F(-2)), 5)
        assert series.terms == (
            (F(2), F(-2)),
            (F(3), F(-16)),
            (F(4), F(-224)),
            (F(5), F(-3840)),
            (F(6), F(-73216)),
        )
        assert not series.exact

    def test_cusp_double_leading_term_is_ambiguous(self, cusp_poly):
        with pytest.raises(AmbiguousBranchError) as exc_info:
            oracle_expand(cusp_poly, (F(1), F(-1, 2)), 5)
        assert exc_info.value.candidates == 2

    def test_cusp_prefix_resolves_ambiguity(self, cusp_poly):
        series = oracle_expand(cusp_poly, [(F(1), F(-1, 2)), (F(3, 2), F(1))], 5)
        assert series.terms == (
            (F(1), F(-1, 2)),
            (F(3, 2), F(1)),
            (F(2), F(1)),
            (F(5, 2), F(5, 2)),
            (F(3), F(8)),
        )

    def test_unknown_leading_term(self, cusp_poly):
        with pytest.raises(NoSolutionError):
            oracle_expand(cusp_poly, (F(1), F(3)), 3)

    def test_cubic_real_branch(self, cubic_poly, numeric_field):
        series = oracle_expand(cubic_poly, (F(4, 3), F(2)), 5)
        expected = [
            (F(4, 3), F(2)),
            (F(2), F(-2, 3)),
            (F(7, 3), F(1, 12)),
            (F(8, 3), F(26, 9)),
            # +9353/2592 leaves a nonzero t^18 term in f(t^3, y(t))
            (F(10, 3), F(-9353, 2592)),
        ]
        assert series.exponents == [e for e, _ in expected]
        for coeff, (_, value) in zip(series.coefficients, expected):
            assert numeric_field.close(coeff, numeric_field.coerce(value), numeric_field.ctx.mpf(10) ** -40)


class TestOracleBranches:
    def test_exact_line(self, exact_field):
        (series,) = oracle_branches(parse_poly("y - x", exact_field), (), 3)
        assert series.terms == ((F(1), F(1)),)
        assert series.exact

    def test_y_factor(self, exact_field):
        branches = oracle_branches(parse_poly("y^2 - xy", exact_field), (), 3)
        assert [(b.terms, b.exact) for b in branches] == [
            ((), True),
            (((F(1), F(1)),), True),
        ]

    def test_cusp_all_branches(self, cusp_poly):
        branches = oracle_branches(cusp_poly, (), 2)
        leading = sorted((b.terms[0], b.terms[1]) for b in branches)
        assert leading == [
            ((F(1), F(-1, 2)), (F(3, 2), F(-1))),
            ((F(1), F(-1, 2)), (F(3, 2), F(1))),
            ((F(2), F(-2)), (F(3), F(-16))),
        ]
