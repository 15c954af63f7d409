# -*- coding: utf-8 -*-
"""Coefficient fields, univariate polynomials and root finding.

Two backends share one interface:

- ``exact``: coefficients are ``fractions.Fraction``; only rational roots
  are found (rational-root enumeration plus synthetic division).
- ``numeric``: coefficients are ``mpmath`` complex numbers bound to a
  private context at the configured precision; roots are found by Aberth
  iteration and clustered into multiple roots.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Any, Sequence

import mpmath
from mpmath.libmp import prec_to_dps
from sympy import divisors

from src.core.errors import NoConvergenceError, NonRationalRootError, ZeroPolynomialError
from src.core.logging import get_logger

logger = get_logger(__name__)

# Coefficient element: Fraction (exact) or mpc (numeric)
Coeff = Any


class Backend(str, Enum):
    """Coefficient field backends."""

    EXACT = "exact"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class Field:
    """Coefficient field with a backend tag and a working precision.

    Attributes:
        backend: Backend tag shared by every coefficient of one run
        precision: Binary precision of the numeric backend (ignored when exact)
    """

    backend: Backend = Backend.EXACT
    precision: int = 256
    drop_bits: int | None = None
    _ctx: Any = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.precision < 64:
            raise ValueError(f"precision must be at least 64 bits, got {self.precision}")
        if self.backend is Backend.NUMERIC:
            ctx = mpmath.MPContext()
            ctx.prec = self.precision
            object.__setattr__(self, "_ctx", ctx)

    @property
    def is_exact(self) -> bool:
        return self.backend is Backend.EXACT

    @property
    def ctx(self) -> Any:
        """mpmath context of the numeric backend."""
        if self._ctx is None:
            raise TypeError("exact field has no mpmath context")
        return self._ctx

    @cached_property
    def threshold(self) -> Any:
        """Relative magnitude below which numeric coefficients count as zero."""
        bits = self.drop_bits or self.precision // 2
        if self.is_exact:
            return Fraction(0)
        return self.ctx.ldexp(1, -bits)

    @cached_property
    def default_tolerance(self) -> Any:
        """Root clustering tolerance 2^-(precision/2)."""
        if self.is_exact:
            return Fraction(0)
        return self.ctx.ldexp(1, -(self.precision // 2))

    # Construction

    def zero(self) -> Coeff:
        return Fraction(0) if self.is_exact else self.ctx.mpc(0)

    def one(self) -> Coeff:
        return Fraction(1) if self.is_exact else self.ctx.mpc(1)

    def coerce(self, value: Any) -> Coeff:
        """Convert an int, Fraction, string or foreign number into this field."""
        if self.is_exact:
            if isinstance(value, (int, Fraction, str)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {type(value).__name__} into the exact field")
        if isinstance(value, Fraction):
            return self.ctx.mpc(self.ctx.mpf(value.numerator) / value.denominator)
        # unary plus rounds values coming from wider contexts
        return +self.ctx.mpc(value)

    def complex(self, re: Fraction, im: Fraction) -> Coeff:
        """Build re + im*i in the numeric field."""
        if self.is_exact:
            if im:
                raise TypeError("exact field has no imaginary unit")
            return Fraction(re)
        ctx = self.ctx
        return ctx.mpc(
            ctx.mpf(re.numerator) / re.denominator,
            ctx.mpf(im.numerator) / im.denominator,
        )

    # Queries

    def is_zero(self, value: Coeff) -> bool:
        return value == 0

    def negligible(self, value: Coeff, scale: Any) -> bool:
        """Whether ``value`` is zero, or below the drop threshold relative to ``scale``."""
        if value == 0:
            return True
        if self.is_exact:
            return False
        return abs(value) <= self.threshold * scale

    def close(self, a: Coeff, b: Coeff, tol: Any | None = None) -> bool:
        """Exact equality, or relative closeness for numeric coefficients."""
        if self.is_exact:
            return a == b
        tol = self.default_tolerance if tol is None else tol
        return abs(a - b) <= tol * max(1, abs(a), abs(b))

    def sort_key(self, value: Coeff) -> tuple:
        """Deterministic ordering key (real part, imaginary part).

        Numeric parts are rounded to multiples of the clustering tolerance so
        roundoff cannot swap conjugate roots.
        """
        if self.is_exact:
            return (value, Fraction(0))
        ctx = self.ctx
        quantum = self.default_tolerance
        return (int(ctx.nint(value.real / quantum)), int(ctx.nint(value.imag / quantum)))

    def real_parts(self, value: Coeff) -> tuple[Any, Any]:
        if self.is_exact:
            return value, Fraction(0)
        return value.real, value.imag

    def digits(self) -> int:
        """Decimal digits needed to print a numeric value without loss."""
        return prec_to_dps(self.precision) + 2


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial, index = degree.

    Trailing zero coefficients are trimmed on construction so the leading
    coefficient is nonzero unless the polynomial is zero.
    """

    field: Field
    coeffs: tuple

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and self.field.is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_values(cls, fld: Field, values: Sequence[Any]) -> "UniPoly":
        return cls(fld, tuple(fld.coerce(v) for v in values))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def order(self) -> int:
        """Multiplicity of the root 0."""
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                return i
        raise ZeroPolynomialError("zero polynomial has no order")

    def __call__(self, value: Coeff) -> Coeff:
        result = self.field.zero()
        for c in reversed(self.coeffs):
            result = result * value + c
        return result


def _deflate(coeffs: list, root: Coeff) -> tuple[list, Coeff]:
    """Synthetic division by (c - root). Returns quotient and remainder."""
    quotient = [coeffs[-1]]
    for c in reversed(coeffs[1:-1]):
        quotient.append(c + quotient[-1] * root)
    remainder = coeffs[0] + quotient[-1] * root
    quotient.reverse()
    return quotient, remainder


def _exact_roots(coeffs: list[Fraction]) -> list[tuple[Fraction, int]]:
    """Rational roots of a polynomial with nonzero constant term."""
    denominator = lcm(*(c.denominator for c in coeffs))
    integral = [int(c * denominator) for c in coeffs]
    constant, leading = abs(integral[0]), abs(integral[-1])

    candidates = sorted(
        {Fraction(sign * p, q) for p in divisors(constant) for q in divisors(leading) for sign in (1, -1)}
    )

    roots: list[tuple[Fraction, int]] = []
    remaining = list(coeffs)
    for candidate in candidates:
        if len(remaining) < 2:
            break
        multiplicity = 0
        while len(remaining) >= 2:
            quotient, remainder = _deflate(remaining, candidate)
            if remainder != 0:
                break
            remaining = quotient
            multiplicity += 1
        if multiplicity:
            roots.append((candidate, multiplicity))

    if len(remaining) >= 2:
        raise NonRationalRootError(
            f"factor of degree {len(remaining) - 1} has no rational root",
            factor=remaining,
        )
    return roots


def _aberth(fld: Field, coeffs: list) -> list:
    """All complex roots by Aberth iteration at an elevated working precision."""
    wctx = mpmath.MPContext()
    wctx.prec = 2 * fld.precision + 64
    a = [wctx.convert(c) for c in coeffs]
    n = len(a) - 1
    leading = a[-1]
    a = [c / leading for c in a]
    da = [c * i for i, c in enumerate(a) if i > 0]

    def horner(poly, z):
        result = wctx.mpc(0)
        for c in reversed(poly):
            result = result * z + c
        return result

    # Cauchy bound, perturbed roots of unity
    radius = 1 + max(abs(c) for c in a[:-1])
    z = [
        radius * wctx.expjpi(wctx.mpf(2 * k) / n + wctx.mpf(1) / (2 * n) + wctx.mpf(1) / 7)
        for k in range(n)
    ]
    abs_a = [abs(c) for c in a]
    eps = wctx.ldexp(1, -wctx.prec + 4) * n
    converged = [False] * n
    max_iterations = 4 * wctx.prec + 50 * n

    for _ in range(max_iterations):
        for k in range(n):
            if converged[k]:
                continue
            zk = z[k]
            value = horner(a, zk)
            bound = eps * sum(c * abs(zk) ** i for i, c in enumerate(abs_a))
            if abs(value) <= bound:
                converged[k] = True
                continue
            slope = horner(da, zk)
            ratio = value / slope if slope != 0 else wctx.mpc(eps)
            repulsion = sum(
                (1 / (zk - z[j]) for j in range(n) if j != k and z[j] != zk),
                wctx.mpc(0),
            )
            denominator = 1 - ratio * repulsion
            z[k] = zk - (ratio / denominator if denominator != 0 else ratio)
        if all(converged):
            return z
    raise NoConvergenceError(
        f"Aberth iteration did not converge in {max_iterations} steps",
        precision=fld.precision,
    )


def _cluster(fld: Field, approximations: list, tol: Any) -> list[tuple[Coeff, int]]:
    """Merge approximations closer than ``tol`` into centroids with multiplicity."""
    n = len(approximations)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            zi, zj = approximations[i], approximations[j]
            if abs(zi - zj) <= tol * max(1, abs(zi), abs(zj)):
                parent[find(i)] = find(j)

    groups: dict[int, list] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(approximations[i])
    return [(_snap(fld, fld.coerce(sum(g) / len(g))), len(g)) for g in groups.values()]


def _snap(fld: Field, value: Coeff) -> Coeff:
    """Zero a real or imaginary part that is roundoff relative to |value|."""
    scale = abs(value)
    re_part = 0 if fld.negligible(value.real, scale) else value.real
    im_part = 0 if fld.negligible(value.imag, scale) else value.imag
    return fld.ctx.mpc(re_part, im_part)


def find_roots(p: UniPoly, tol: Any | None = None) -> list[tuple[Coeff, int]]:
    """Find all roots of ``p`` with multiplicities.

    Args:
        p: Nonzero polynomial of degree >= 1
        tol: Clustering tolerance of the numeric backend, ignored when exact

    Returns:
        (root, multiplicity) pairs sorted by (real, imaginary) part;
        multiplicities sum to the degree

    Raises:
        ZeroPolynomialError: p is zero
        NonRationalRootError: exact backend met a factor without rational roots
        NoConvergenceError: numeric iteration failed at the working precision
    """
    if p.is_zero:
        raise ZeroPolynomialError("cannot find roots of the zero polynomial")
    fld = p.field

    zero_multiplicity = p.order
    roots: list[tuple[Coeff, int]] = []
    if zero_multiplicity:
        roots.append((fld.zero(), zero_multiplicity))
    rest = list(p.coeffs[zero_multiplicity:])

    if len(rest) >= 2:
        if fld.is_exact:
            roots.extend(_exact_roots(rest))
        else:
            tol = fld.default_tolerance if tol is None else tol
            roots.extend(_cluster(fld, _aberth(fld, rest), tol))

    roots.sort(key=lambda item: fld.sort_key(item[0]))
    logger.debug("Roots found", degree=p.degree, roots=len(roots), backend=fld.backend.value)
    return roots
