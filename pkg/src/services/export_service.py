# -*- coding: utf-8 -*-
"""Export service for rendering expansion results as text, LaTeX or JSON."""

from fractions import Fraction

from src.core.config import get_settings
from src.models.options import OutputFormat
from src.models.report import (
    BranchOut,
    ComplexCoeff,
    DiagnosticOut,
    ExactCoeff,
    ExpansionReport,
    PolygonReport,
    SegmentOut,
    TermOut,
    VerificationReport,
)
from src.models.series import ExpansionResult, PuiseuxSeries
from src.services.field import Coeff, Field
from src.services.mpoly import Point, XYPoly
from src.services.poly_parser import Style, format_exponent, format_monomial, format_poly, join_terms
from src.services.polygon import characteristic_poly, expansion_segments, newton_polygon


def format_series(series: PuiseuxSeries, style: Style = "plain", digits: int | None = None) -> str:
    """Format a branch as 'y = ... + O(x^k)'.

    Example:
        y = -2x^2 - 16x^3 - 224x^4 - 3840x^5 + O(x^6)
    """
    fld = series.field
    digits = digits or get_settings().print_digits
    parts = [format_monomial(fld, c, e, 0, digits, style) for e, c in series.terms]
    body = join_terms(parts)
    if not series.exact and series.truncation_order is not None:
        order = format_exponent("x", series.truncation_order, style)
        body = f"{body} + O({order})" if series.terms else f"O({order})"
    return f"y = {body}"


def _number(fld: Field, value) -> str:
    return fld.ctx.nstr(value, fld.digits(), strip_zeros=False)


def coeff_out(fld: Field, value: Coeff) -> ExactCoeff | ComplexCoeff:
    """Lossless decimal-string form of a coefficient."""
    if fld.is_exact:
        return ExactCoeff(num=str(value.numerator), den=str(value.denominator))
    return ComplexCoeff(re=_number(fld, value.real), im=_number(fld, value.imag))


def branch_out(series: PuiseuxSeries) -> BranchOut:
    fld = series.field
    return BranchOut(
        branch_id=series.branch_id,
        ramification=series.ramification,
        multiplicity=series.multiplicity,
        exact=series.exact,
        terms=[TermOut(exponent=str(e), coeff=coeff_out(fld, c)) for e, c in series.terms],
        truncation_order=None if series.truncation_order is None else str(series.truncation_order),
    )


def build_report(result: ExpansionResult, source: str) -> ExpansionReport:
    return ExpansionReport(
        input=source,
        backend=result.field.backend.value,
        branches=[branch_out(series) for series in result.branches],
        diagnostics=[
            DiagnosticOut(kind=d.kind, message=d.message, branch_id=d.branch_id) for d in result.diagnostics
        ],
    )


def render_expansion(result: ExpansionResult, source: str, output: OutputFormat) -> str:
    """Render an expansion result in the requested format."""
    if output == OutputFormat.JSON:
        return build_report(result, source).model_dump_json(indent=2)

    style: Style = "latex" if output == OutputFormat.LATEX else "plain"
    lines = []
    for series in result.branches:
        line = format_series(series, style)
        if output == OutputFormat.LATEX:
            line = f"${line}$"
        if series.multiplicity > 1:
            line += f"  [multiplicity {series.multiplicity}]"
        lines.append(line)
    for diagnostic in result.diagnostics:
        lines.append(f"# {diagnostic.kind}: {diagnostic.message}")
    return "\n".join(lines)


def _point(point: Point) -> list[str]:
    return [str(point[0]), str(point[1])]


def build_polygon_report(f: XYPoly, source: str) -> PolygonReport:
    """Support, hull chain and segments with characteristic polynomials."""
    support = sorted(f.support_points())
    chain = newton_polygon(support)
    segments = []
    for seg in sorted(expansion_segments(chain), key=lambda s: s.gamma):
        phi = characteristic_poly(f, seg)
        terms = {(0, Fraction(b)): c for b, c in enumerate(phi.coeffs) if not f.field.is_zero(c)}
        segments.append(
            SegmentOut(
                start=_point(seg.start),
                end=_point(seg.end),
                gamma=str(seg.gamma),
                beta=str(seg.beta),
                span=seg.span,
                characteristic=format_poly(XYPoly(f.field, terms)).replace("x", "c"),
            )
        )
    return PolygonReport(
        input=source,
        support=[_point(p) for p in support],
        chain=[_point(p) for p in chain],
        segments=segments,
    )


def render_polygon(report: PolygonReport, output: OutputFormat) -> str:
    if output == OutputFormat.JSON:
        return report.model_dump_json(indent=2)
    lines = [
        "support: " + " ".join(f"({b},{a})" for b, a in report.support),
        "chain: " + " ".join(f"({b},{a})" for b, a in report.chain),
    ]
    for seg in report.segments:
        lines.append(
            f"segment ({seg.start[0]},{seg.start[1]})-({seg.end[0]},{seg.end[1]}): "
            f"gamma={seg.gamma} beta={seg.beta} span={seg.span} phi(c) = {seg.characteristic}"
        )
    return "\n".join(lines)


def render_verification(report: VerificationReport, output: OutputFormat) -> str:
    if output == OutputFormat.JSON:
        return report.model_dump_json(indent=2)
    lines = []
    for check in report.branches:
        status = "PASS" if check.passed else "FAIL"
        slope = "-" if check.numeric_slope is None else f"{check.numeric_slope:.4f}"
        lines.append(
            f"[{status}] {check.series}  valuation={check.residual_valuation} slope={slope} "
            f"monotone={check.monotone} oracle={check.oracle_agrees}"
        )
        lines.extend(f"    {note}" for note in check.notes)
    lines.append("verification passed" if report.passed else "verification FAILED")
    return "\n".join(lines)
