# -*- coding: utf-8 -*-
"""Expansion data: Puiseux series, expansion states and diagnostics."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm

from src.services.field import Coeff, Field
from src.services.mpoly import XYPoly

Term = tuple[Fraction, Coeff]


@dataclass(frozen=True)
class PuiseuxSeries:
    """Truncated Puiseux series y = sum c x^e.

    Attributes:
        field: Coefficient field of the run
        terms: (exponent, coefficient) pairs, exponents strictly increasing
        truncation_order: Exponent of the first omitted term, None for exact series
        exact: Whether the series is a polynomial solution
        multiplicity: Number of branches this series stands for
        branch_id: Path of (segment, root) choices that produced it
    """

    field: Field
    terms: tuple[Term, ...]
    truncation_order: Fraction | None = None
    exact: bool = False
    multiplicity: int = 1
    branch_id: str = ""

    @property
    def ramification(self) -> int:
        """lcm of the exponent denominators."""
        return lcm(1, *(e.denominator for e, _ in self.terms))

    @property
    def exponents(self) -> list[Fraction]:
        return [e for e, _ in self.terms]

    @property
    def coefficients(self) -> list[Coeff]:
        return [c for _, c in self.terms]

    def prefix(self, count: int) -> "PuiseuxSeries":
        """The first ``count`` terms as a non-exact series."""
        terms = self.terms[:count]
        exact = self.exact and count >= len(self.terms)
        next_order = None if exact else (self.terms[count][0] if count < len(self.terms) else self.truncation_order)
        return PuiseuxSeries(self.field, terms, next_order, exact, self.multiplicity, self.branch_id)

    def sort_key(self) -> tuple:
        return tuple((e, *self.field.sort_key(c)) for e, c in self.terms)


@dataclass(frozen=True)
class ExpansionState:
    """One node of the branch tree.

    Attributes:
        current: The iterate f_i
        accumulated: Series terms found so far
        exponent_offset: Sum of the gammas used so far
        depth: Number of expansion steps taken
        multiplicity: Multiplicity of the root that led here
        branch_id: Dotted path of child indices
    """

    current: XYPoly
    accumulated: tuple[Term, ...] = ()
    exponent_offset: Fraction = Fraction(0)
    depth: int = 0
    multiplicity: int = 1
    branch_id: str = "0"


class Termination(str, Enum):
    """Outcome of the termination check of one state."""

    CONTINUE = "continue"
    EXACT_SOLUTION = "exact_solution"
    TERM_BUDGET_REACHED = "term_budget_reached"
    NO_SEGMENT = "no_segment"


@dataclass(frozen=True)
class Diagnostic:
    """Note attached to an expansion result."""

    kind: str
    message: str
    branch_id: str | None = None


@dataclass
class ExpansionResult:
    """Branches of one expansion run plus diagnostics."""

    field: Field
    branches: list[PuiseuxSeries] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def branch_count(self) -> int:
        """Branches counted with multiplicity."""
        return sum(series.multiplicity for series in self.branches)


@dataclass(frozen=True)
class StepEvent:
    """Emitted to step observers before each state is examined."""

    state: ExpansionState
    chain: list
