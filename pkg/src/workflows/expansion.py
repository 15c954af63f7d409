# -*- coding: utf-8 -*-
"""
Newton-Puiseux expansion workflow.

Explores the branch tree of f(x, y) = 0 at the origin:
1. Draw the Newton polygon of the current iterate
2. For each negative-slope segment and each nonzero characteristic root,
   record the term and shift-substitute
3. Repeat until the iterate has a y factor (exact solution) or the term
   budget is spent
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from fractions import Fraction
from typing import Callable

from src.core.errors import (
    ConstantTermNonzeroError,
    InconsistentStateError,
    NonRationalRootError,
    NotRegularError,
    ZeroPolynomialError,
)
from src.core.logging import get_logger
from src.core.performance import timed
from src.models.options import ExpandOptions
from src.models.series import (
    Diagnostic,
    ExpansionResult,
    ExpansionState,
    PuiseuxSeries,
    StepEvent,
    Termination,
)
from src.services.field import Coeff, find_roots
from src.services.mpoly import XYPoly, shift_substitute
from src.services.polygon import Segment, characteristic_poly, newton_polygon, segments_of

logger = get_logger(__name__)

StepObserver = Callable[[StepEvent], None]


# ============================================================
# Single steps
# ============================================================

def initial_state(f: XYPoly) -> ExpansionState:
    """Root of the branch tree; its multiplicity is the total branch count."""
    multiplicity = f.y_multiplicity() + sum(seg.span for seg in segments_of(f))
    return ExpansionState(current=f, multiplicity=multiplicity)


def expand_step(
    state: ExpansionState,
    seg: Segment,
    root: tuple[Coeff, int],
    branch_id: str | None = None,
) -> ExpansionState:
    """Append the term c x^(offset + gamma) and shift-substitute the iterate."""
    c, multiplicity = root
    exponent = state.exponent_offset + seg.gamma
    current = shift_substitute(state.current, seg.gamma, c, seg.beta)
    return ExpansionState(
        current=current,
        accumulated=state.accumulated + ((exponent, c),),
        exponent_offset=exponent,
        depth=state.depth + 1,
        multiplicity=multiplicity,
        branch_id=branch_id if branch_id is not None else f"{state.branch_id}.0",
    )


def detect_termination(state: ExpansionState, opts: ExpandOptions) -> Termination:
    """Classify a state.

    EXACT_SOLUTION when the iterate vanishes at y = 0, TERM_BUDGET_REACHED
    when max_terms or max_depth is spent, NO_SEGMENT when pure-x terms remain
    without a negative-slope segment, CONTINUE otherwise.
    """
    current = state.current
    if current.pure_x_part().is_zero:
        return Termination.EXACT_SOLUTION
    if len(state.accumulated) >= opts.max_terms or state.depth >= opts.max_depth:
        return Termination.TERM_BUDGET_REACHED
    if not segments_of(current):
        return Termination.NO_SEGMENT
    return Termination.CONTINUE


def regular_segment(current: XYPoly) -> Segment | None:
    """The single span-1 segment ending at (1, 0), if the iterate is regular."""
    if current.is_zero or current.y_multiplicity() != 0:
        return None
    segments = segments_of(current)
    if len(segments) != 1:
        return None
    seg = segments[0]
    if seg.span != 1 or seg.end != (1, Fraction(0)):
        return None
    return seg


def regular_tail(state: ExpansionState, delta: Fraction, count: int) -> list[Coeff]:
    """Coefficients c_1..c_count of the tail sum c_k x^(k*delta) of a regular iterate.

    Each coefficient solves the linear cancellation equation at order k*delta,
    using the coefficient of y in the iterate at x^0.

    Raises:
        NotRegularError: the iterate is not regular, or delta does not refine
            its exponent lattice
    """
    current = state.current
    fld = current.field
    delta = Fraction(delta)
    if regular_segment(current) is None:
        raise NotRegularError("iterate does not have a single span-1 segment ending at (1, 0)")
    if delta <= 0 or count < 1:
        raise NotRegularError(f"invalid tail request delta={delta} count={count}")

    # G[b][i]: coefficient of t^i y^b with t = x^delta
    degree = current.y_degree()
    grid: list[dict[int, Coeff]] = [{} for _ in range(degree + 1)]
    for (b, a), coeff in current.terms.items():
        index = a / delta
        if index.denominator != 1:
            raise NotRegularError(f"x-exponent {a} is not a multiple of delta={delta}")
        grid[b][int(index)] = coeff
    linear = grid[1][0]

    zero = fld.zero()
    tail = [zero] * (count + 1)
    for k in range(1, count + 1):
        residual = grid[0].get(k, zero)
        power = [fld.one()] + [zero] * k
        for b in range(1, degree + 1):
            power = _truncated_product(power, tail, k, zero)
            for i, coeff in grid[b].items():
                if i <= k and (b != 1 or i != 0):
                    residual = residual + coeff * power[k - i]
        tail[k] = -residual / linear
    return tail[1:]


def _truncated_product(p: list[Coeff], q: list[Coeff], order: int, zero: Coeff) -> list[Coeff]:
    result = [zero] * (order + 1)
    for i, pi in enumerate(p[: order + 1]):
        if pi == 0:
            continue
        for j in range(order + 1 - i):
            qj = q[j]
            if qj != 0:
                result[i + j] = result[i + j] + pi * qj
    return result


# ============================================================
# Branch tree exploration
# ============================================================

class ExpansionWorkflow:
    """Depth-first exploration of all (segment, root) choices.

    Example:
        ```python
        result = ExpansionWorkflow(ExpandOptions(max_terms=5)).run(f)
        for series in result.branches:
            print(series.terms)
        ```
    """

    def __init__(self, opts: ExpandOptions, observer: StepObserver | None = None):
        self.opts = opts
        self.observer = observer
        self._executor: ThreadPoolExecutor | None = None

    def run(self, f: XYPoly) -> ExpansionResult:
        fld = f.field
        result = ExpansionResult(field=fld)
        if f.is_zero:
            raise ZeroPolynomialError("cannot expand the zero polynomial")
        if (0, Fraction(0)) in f:
            result.diagnostics.append(
                Diagnostic("NotThroughOrigin", "f(0, 0) is nonzero; no branch passes through the origin")
            )
            return result

        state = initial_state(f)
        if detect_termination(state, self.opts) is Termination.NO_SEGMENT:
            result.diagnostics.append(
                Diagnostic("NoNegativeSlopeSegment", "Newton polygon has no negative-slope segment")
            )
            return result

        if self.opts.workers > 1:
            with ThreadPoolExecutor(max_workers=self.opts.workers) as executor:
                self._executor = executor
                branches = self._explore(state)
            self._executor = None
        else:
            branches = self._explore(state)

        result.branches = sorted(branches, key=lambda series: series.sort_key())
        logger.info(
            "Expansion finished",
            branches=len(result.branches),
            with_multiplicity=result.branch_count,
            backend=fld.backend.value,
        )
        return result

    def _series(self, state: ExpansionState, exact: bool, multiplicity: int) -> PuiseuxSeries:
        truncation = None
        if not exact:
            segments = segments_of(state.current)
            if segments:
                truncation = state.exponent_offset + min(seg.gamma for seg in segments)
        return PuiseuxSeries(
            field=state.current.field,
            terms=state.accumulated,
            truncation_order=truncation,
            exact=exact,
            multiplicity=multiplicity,
            branch_id=state.branch_id,
        )

    def _notify(self, state: ExpansionState) -> None:
        if self.observer is not None:
            chain = newton_polygon(state.current.support_points())
            self.observer(StepEvent(state=state, chain=chain))

    def _explore(self, state: ExpansionState, fast_forwarded: bool = False) -> list[PuiseuxSeries]:
        self._notify(state)
        status = detect_termination(state, self.opts)
        logger.debug(
            "Expansion state",
            branch_id=state.branch_id,
            depth=state.depth,
            terms=len(state.accumulated),
            status=status.value,
        )

        if status is Termination.EXACT_SOLUTION:
            # Emit y = 0 for the y^k factor, then expand the cofactor
            k = state.current.y_multiplicity()
            branches = [self._series(state, exact=True, multiplicity=k)]
            cofactor = replace(state, current=state.current.divide_y(k))
            segments = segments_of(cofactor.current)
            if not segments:
                return branches
            remaining = max(state.multiplicity - k, 1)
            budget_spent = len(state.accumulated) >= self.opts.max_terms or state.depth >= self.opts.max_depth
            if budget_spent:
                branches.append(self._series(cofactor, exact=False, multiplicity=remaining))
                return branches
            return branches + self._explore_children(cofactor, segments)

        if status is Termination.TERM_BUDGET_REACHED:
            return [self._series(state, exact=False, multiplicity=state.multiplicity)]

        if status is Termination.NO_SEGMENT:
            raise InconsistentStateError(
                f"branch {state.branch_id} has pure-x terms but no negative-slope segment; "
                "coefficients were probably lost to roundoff, retry with a higher precision"
            )

        if self.opts.fast_path and not fast_forwarded:
            seg = regular_segment(state.current)
            if seg is not None:
                advanced = self._fast_forward(state, seg)
                if advanced is not None:
                    return self._explore(advanced, fast_forwarded=True)

        return self._explore_children(state, segments_of(state.current))

    def _child_states(self, state: ExpansionState, segments: list[Segment]) -> list[ExpansionState]:
        fld = state.current.field
        children = []
        for seg in segments:
            phi = characteristic_poly(state.current, seg)
            try:
                roots = find_roots(phi, fld.default_tolerance)
            except NonRationalRootError as e:
                e.branch_id = state.branch_id
                logger.warning(
                    "Characteristic polynomial has no rational root",
                    branch_id=state.branch_id,
                    gamma=str(seg.gamma),
                    factor=[str(c) for c in e.factor],
                )
                raise
            for c, multiplicity in roots:
                if fld.is_zero(c):
                    continue
                child_id = f"{state.branch_id}.{len(children)}"
                logger.debug(
                    "Expansion step",
                    branch_id=child_id,
                    depth=state.depth + 1,
                    gamma=str(seg.gamma),
                    beta=str(seg.beta),
                    root=str(c),
                    multiplicity=multiplicity,
                )
                children.append(expand_step(state, seg, (c, multiplicity), branch_id=child_id))
        return children

    def _explore_children(self, state: ExpansionState, segments: list[Segment]) -> list[PuiseuxSeries]:
        children = self._child_states(state, segments)
        if state.depth == 0 and self._executor is not None:
            nested = list(self._executor.map(self._explore, children))
        else:
            nested = [self._explore(child) for child in children]
        return [series for group in nested for series in group]

    def _fast_forward(self, state: ExpansionState, seg: Segment) -> ExpansionState | None:
        """Jump over a run of regular steps with one composed substitution."""
        need = min(self.opts.max_terms - len(state.accumulated), self.opts.max_depth - state.depth)
        if need <= 0:
            return None
        current = state.current
        fld = current.field
        delta = Fraction(1, current.x_denominator())
        first = int(seg.gamma / delta)
        tail = regular_tail(state, delta, first + 4 * need * max(first, 1))

        # roundoff in a coefficient is relative to the coefficients before it
        picked: list[tuple[Fraction, Coeff]] = []
        scale = 0
        for k, c in enumerate(tail, start=1):
            scale = max(scale, abs(c))
            if not fld.negligible(c, scale):
                picked.append((k * delta, c))
            if len(picked) == need:
                break
        if not picked:
            return None

        last = picked[-1][0]
        replacement = XYPoly(fld, [((0, e), c) for e, c in picked] + [((1, last), fld.one())])
        advanced = current.substitute_y(replacement).scale_x(-last)
        if (0, Fraction(0)) in advanced:
            raise ConstantTermNonzeroError(f"regular tail of branch {state.branch_id} left a constant term")

        logger.debug(
            "Regular tail",
            branch_id=state.branch_id,
            delta=str(delta),
            terms=len(picked),
        )
        return ExpansionState(
            current=advanced,
            accumulated=state.accumulated
            + tuple((state.exponent_offset + e, c) for e, c in picked),
            exponent_offset=state.exponent_offset + last,
            depth=state.depth + len(picked),
            multiplicity=state.multiplicity,
            branch_id=state.branch_id + ".0" * len(picked),
        )


@timed("expand_all")
def expand_all(
    f: XYPoly,
    opts: ExpandOptions | None = None,
    observer: StepObserver | None = None,
) -> ExpansionResult:
    """Expand every branch of f(x, y) = 0 through the origin.

    Args:
        f: Nonzero polynomial
        opts: Expansion options (defaults from settings)
        observer: Called with a StepEvent for every visited state

    Raises:
        NonRationalRootError: exact backend met an irrational characteristic root
    """
    opts = opts or ExpandOptions.from_settings(backend=f.field.backend, precision=f.field.precision)
    return ExpansionWorkflow(opts, observer).run(f)
