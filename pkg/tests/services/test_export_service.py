# -*- coding: utf-8 -*-
"""Tests for export service."""

import json
from fractions import Fraction as F

from src.models.options import ExpandOptions, OutputFormat
from src.models.series import PuiseuxSeries
from src.services.export_service import (
    build_polygon_report,
    build_report,
    format_series,
    render_expansion,
    render_polygon,
    render_verification,
)
from src.services.field import Backend
from src.services.poly_parser import parse_poly
from src.services.verify import verify_expansion
from src.workflows.expansion import expand_all


class TestFormatSeries:
    def test_truncated_steep_branch(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=4))
        assert format_series(result.branches[-1]) == "y = -2x^2 - 16x^3 - 224x^4 - 3840x^5 + O(x^6)"

    def test_fractional_exponents(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=5))
        assert format_series(result.branches[1]) == (
            "y = -1/2x + x^(3/2) + x^2 + 5/2x^(5/2) + 8x^3 + O(x^(7/2))"
        )

    def test_latex(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=2))
        assert format_series(result.branches[0], "latex") == (
            "y = -\\frac{1}{2}x - x^{\\frac{3}{2}} + O(x^{2})"
        )

    def test_zero_series(self, exact_field):
        assert format_series(PuiseuxSeries(exact_field, (), exact=True)) == "y = 0"

    def test_exact_series_has_no_order_term(self, exact_field):
        series = PuiseuxSeries(exact_field, ((F(1), F(1)), (F(2), F(1))), exact=True)
        assert format_series(series) == "y = x + x^2"

    def test_numeric_digits(self, numeric_field):
        series = PuiseuxSeries(
            numeric_field,
            ((F(4, 3), numeric_field.coerce(2)), (F(2), numeric_field.coerce(F(-2, 3)))),
            truncation_order=F(7, 3),
        )
        assert format_series(series, digits=6) == "y = 2.0x^(4/3) - 0.666667x^2 + O(x^(7/3))"


class TestRenderExpansion:
    def test_text_lines(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=4))
        lines = render_expansion(result, "cusp", OutputFormat.TEXT).splitlines()
        assert len(lines) == 3
        assert lines[-1] == "y = -2x^2 - 16x^3 - 224x^4 - 3840x^5 + O(x^6)"

    def test_multiplicity_suffix(self, tangent_poly_exact):
        result = expand_all(tangent_poly_exact, ExpandOptions(max_terms=3))
        assert render_expansion(result, "tangent", OutputFormat.TEXT) == (
            "y = -x^2 + 1/2x^4 - 1/2x^5 + O(x^(11/2))  [multiplicity 2]"
        )

    def test_diagnostics(self, exact_field):
        result = expand_all(parse_poly("y + 1", exact_field), ExpandOptions())
        text = render_expansion(result, "y + 1", OutputFormat.TEXT)
        assert text.startswith("# NotThroughOrigin:")

    def test_latex_lines_are_math(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=2))
        for line in render_expansion(result, "cusp", OutputFormat.LATEX).splitlines():
            assert line.startswith("$") and line.endswith("$")

    def test_json_exact(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=4))
        document = json.loads(render_expansion(result, "cusp", OutputFormat.JSON))
        assert document["input"] == "cusp"
        assert document["backend"] == "exact"
        steep = document["branches"][-1]
        assert steep["ramification"] == 1
        assert steep["exact"] is False
        assert steep["truncation_order"] == "6"
        assert steep["terms"][0] == {"exponent": "2", "coeff": {"num": "-2", "den": "1"}}
        shallow = document["branches"][0]
        assert shallow["terms"][1]["exponent"] == "3/2"

    def test_json_exact_series_has_null_order(self, exact_field):
        result = expand_all(parse_poly("y - x", exact_field), ExpandOptions())
        document = json.loads(render_expansion(result, "y - x", OutputFormat.JSON))
        assert document["branches"][0]["truncation_order"] is None
        assert document["branches"][0]["exact"] is True

    def test_json_numeric(self, cubic_poly):
        result = expand_all(cubic_poly, ExpandOptions(max_terms=2, backend=Backend.NUMERIC))
        report = build_report(result, "cubic")
        real = report.branches[2]
        assert real.terms[0].exponent == "4/3"
        assert real.terms[0].coeff.re.startswith("2.0")
        assert float(real.terms[0].coeff.im) == 0.0

    def test_json_deterministic(self, cubic_poly):
        opts = ExpandOptions(max_terms=4, backend=Backend.NUMERIC)
        first = render_expansion(expand_all(cubic_poly, opts), "cubic", OutputFormat.JSON)
        second = render_expansion(expand_all(cubic_poly, opts), "cubic", OutputFormat.JSON)
        assert first == second


class TestRenderPolygon:
    def test_cusp_report(self, cusp_poly):
        report = build_polygon_report(cusp_poly, "cusp")
        assert report.chain == [["0", "4"], ["1", "2"], ["3", "0"]]
        assert [(s.gamma, s.beta, s.span) for s in report.segments] == [("1", "3", 2), ("2", "4", 1)]
        assert [s.characteristic for s in report.segments] == ["c + 4c^2 + 4c^3", "2 + c"]

    def test_text(self, cusp_poly):
        text = render_polygon(build_polygon_report(cusp_poly, "cusp"), OutputFormat.TEXT)
        assert "chain: (0,4) (1,2) (3,0)" in text
        assert "gamma=2 beta=4 span=1 phi(c) = 2 + c" in text

    def test_json(self, cusp_poly):
        text = render_polygon(build_polygon_report(cusp_poly, "cusp"), OutputFormat.JSON)
        assert json.loads(text)["segments"][0]["gamma"] == "1"


class TestRenderVerification:
    def test_text(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=4))
        report = verify_expansion(cusp_poly, result, "cusp")
        text = render_verification(report, OutputFormat.TEXT)
        assert text.splitlines()[-1] == "verification passed"
        assert text.count("[PASS]") == 3

    def test_json(self, cusp_poly):
        result = expand_all(cusp_poly, ExpandOptions(max_terms=3))
        report = verify_expansion(cusp_poly, result, "cusp")
        document = json.loads(render_verification(report, OutputFormat.JSON))
        assert document["passed"] is True
        assert len(document["branches"]) == 3
