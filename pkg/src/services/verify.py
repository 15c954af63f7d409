# -*- coding: utf-8 -*-
"""Residual checks for truncated Puiseux series.

- Exact residual valuation of f(x, S(x))
- Least-squares slope of log|f(t, S(t))| against log t at sample points
- Per-branch reports combining monotonicity, oracle agreement and slope
"""

import math
from fractions import Fraction
from typing import Any, Iterable, Sequence

import mpmath

from src.core.config import get_settings
from src.core.errors import InvalidOptionError, NonRationalRootError, PuiseuxError, ResidualUnderflowError
from src.core.logging import get_logger
from src.models.report import BranchCheck, VerificationReport
from src.models.series import ExpansionResult, PuiseuxSeries
from src.services.field import Coeff, Field
from src.services.mpoly import XYPoly
from src.services.oracle import oracle_branches

logger = get_logger(__name__)

Valuation = Fraction | float


class XSeriesPoly:
    """Univariate polynomial in x with rational exponents, no zero coefficients."""

    def __init__(self, fld: Field, terms: dict[Fraction, Coeff] | None = None):
        self.field = fld
        self.terms = {e: c for e, c in (terms or {}).items() if not fld.is_zero(c)}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def min_exponent(self) -> Valuation:
        return min(self.terms) if self.terms else math.inf

    def __getitem__(self, exponent: Fraction) -> Coeff:
        return self.terms.get(Fraction(exponent), self.field.zero())

    def __repr__(self) -> str:
        return f"XSeriesPoly({sorted(self.terms.items())!r})"


def _multiply(p: dict[Fraction, Coeff], q: dict[Fraction, Coeff]) -> dict[Fraction, Coeff]:
    result: dict[Fraction, Coeff] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = e1 + e2
            result[key] = result[key] + c1 * c2 if key in result else c1 * c2
    return result


def substitute_series(f: XYPoly, S: PuiseuxSeries) -> XSeriesPoly:
    """Expand f(x, S(x)) exactly.

    Numeric coefficients whose magnitude is below the field threshold relative
    to the largest contribution anywhere in the residual are dropped.
    """
    fld = f.field
    series = {Fraction(e): c for e, c in S.terms}
    powers = [{Fraction(0): fld.one()}]
    for _ in range(f.y_degree()):
        powers.append(_multiply(powers[-1], series))

    sums: dict[Fraction, Coeff] = {}
    # cancellation inside a power of S is only visible against the global scale
    scale: Any = 0
    for (b, a), coeff in f.terms.items():
        for e, c in powers[b].items():
            key = a + e
            value = coeff * c
            sums[key] = sums[key] + value if key in sums else value
            scale = max(scale, abs(value))

    kept = {e: c for e, c in sums.items() if not fld.negligible(c, scale)}
    return XSeriesPoly(fld, kept)


def residual_valuation(f: XYPoly, S: PuiseuxSeries) -> Valuation:
    """Minimal x-exponent of f(x, S(x)); math.inf for an exact solution."""
    return substitute_series(f, S).min_exponent()


def parse_samples(samples: Iterable[str | float] | None = None) -> list[str]:
    """Validate sample points: at least 3, each in (0, 0.1].

    Raises:
        InvalidOptionError: too few points, or a point outside the range
    """
    values = [str(s).strip() for s in (samples if samples is not None else get_settings().sample_points)]
    if len(values) < 3:
        raise InvalidOptionError(f"need at least 3 sample points, got {len(values)}")
    for value in values:
        try:
            number = float(value)
        except ValueError:
            raise InvalidOptionError(f"sample point {value!r} is not a number") from None
        if not 0 < number <= 0.1:
            raise InvalidOptionError(f"sample point {value} must lie in (0, 0.1]")
    return values


def numeric_residual_slope(
    f: XYPoly,
    S: PuiseuxSeries,
    samples: Sequence[str | float] | None = None,
) -> float:
    """Least-squares slope of log|f(t, S(t))| against log t.

    Raises:
        ResidualUnderflowError: the residual is exactly zero at a sample
    """
    fld = f.field
    ctx = mpmath.MPContext()
    ctx.prec = fld.precision

    def lift(value: Coeff) -> Any:
        if isinstance(value, Fraction):
            return ctx.mpf(value.numerator) / value.denominator
        return ctx.mpc(value)

    def power(t: Any, exponent: Fraction) -> Any:
        if exponent == 0:
            return ctx.mpf(1)
        return ctx.power(t, ctx.mpf(exponent.numerator) / exponent.denominator)

    xs, ys = [], []
    for sample in parse_samples(samples):
        t = ctx.mpf(str(sample))
        y = sum((lift(c) * power(t, e) for e, c in S.terms), ctx.mpf(0))
        residual = sum(
            (lift(coeff) * power(t, a) * y**b for (b, a), coeff in f.terms.items()),
            ctx.mpf(0),
        )
        if residual == 0:
            raise ResidualUnderflowError(f"residual vanishes at t={sample}; the series is exact")
        xs.append(ctx.log(t))
        ys.append(ctx.log(abs(residual)))

    n = len(xs)
    mean_x, mean_y = sum(xs) / n, sum(ys) / n
    covariance = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    variance = sum((x - mean_x) ** 2 for x in xs)
    return float(covariance / variance)


def _matches(fld: Field, branch: PuiseuxSeries, candidate: PuiseuxSeries) -> bool:
    if len(branch.terms) != len(candidate.terms):
        return False
    if branch.exact and not candidate.exact:
        return False
    return all(
        e1 == e2 and fld.close(c1, c2) for (e1, c1), (e2, c2) in zip(branch.terms, candidate.terms)
    )


def _format_valuation(value: Valuation) -> str:
    return "inf" if value == math.inf else str(value)


def verify_branch(
    f: XYPoly,
    series: PuiseuxSeries,
    samples: Sequence[str | float] | None = None,
    tolerance: float | None = None,
) -> BranchCheck:
    """Check one branch: residual monotonicity, oracle agreement, slope consistency."""
    from src.services.export_service import format_series

    fld = f.field
    tolerance = get_settings().slope_tolerance if tolerance is None else tolerance
    notes: list[str] = []

    valuations = [residual_valuation(f, series.prefix(k)) for k in range(1, len(series.terms) + 1)]
    final = residual_valuation(f, series)
    monotone = all(
        v > e and (k == 0 or v > valuations[k - 1])
        for k, (v, e) in enumerate(zip(valuations, series.exponents))
    )
    if series.exact and final != math.inf:
        monotone = False
        notes.append("series marked exact but the residual is nonzero")

    if not series.terms:
        oracle_agrees = final == math.inf
    else:
        try:
            candidates = oracle_branches(f, series.terms[:1], len(series.terms))
            oracle_agrees = any(_matches(fld, series, c) for c in candidates)
        except NonRationalRootError:
            oracle_agrees = False
            notes.append("oracle met an irrational root; rerun with the numeric backend")
        except PuiseuxError as e:
            oracle_agrees = False
            notes.append(f"oracle failed: {e}")
    if not oracle_agrees:
        notes.append("oracle continuation differs")

    slope = None
    if final == math.inf:
        slope_consistent = True
    else:
        try:
            slope = numeric_residual_slope(f, series, samples)
            slope_consistent = abs(slope - float(final)) / float(final) <= tolerance
        except ResidualUnderflowError:
            slope_consistent = False
            notes.append("numeric residual vanished for a truncated series")
        if not slope_consistent:
            notes.append(f"numeric slope {slope} inconsistent with valuation {final}")

    passed = monotone and oracle_agrees and slope_consistent
    logger.debug("Branch verified", branch_id=series.branch_id, passed=passed)
    return BranchCheck(
        branch_id=series.branch_id,
        series=format_series(series),
        valuations=[_format_valuation(v) for v in valuations],
        monotone=monotone,
        oracle_agrees=oracle_agrees,
        residual_valuation=_format_valuation(final),
        numeric_slope=slope,
        slope_consistent=slope_consistent,
        passed=passed,
        notes=notes,
    )


def verify_expansion(
    f: XYPoly,
    result: ExpansionResult,
    source: str = "",
    samples: Sequence[str | float] | None = None,
) -> VerificationReport:
    """Verify every branch of an expansion result."""
    checks = [verify_branch(f, series, samples) for series in result.branches]
    return VerificationReport(
        input=source,
        backend=f.field.backend.value,
        branches=checks,
        passed=all(check.passed for check in checks),
    )
