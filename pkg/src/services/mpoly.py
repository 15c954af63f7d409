# -*- coding: utf-8 -*-
"""Sparse bivariate polynomials with rational x-exponents.

A term ``k x^a y^b`` is stored under the key ``(b, a)`` so that keys are
the Newton polygon support points directly.
"""

from collections import defaultdict
from fractions import Fraction
from math import comb, lcm
from typing import Any, Iterable, Iterator, Mapping

from src.core.errors import (
    ConstantTermNonzeroError,
    FractionalExponentError,
    NegativeExponentError,
    NegativeResultExponentError,
    ZeroPolynomialError,
)
from src.services.field import Coeff, Field

Point = tuple[int, Fraction]


class XYPoly:
    """Immutable sparse polynomial in x (rational exponents) and y (integer exponents).

    Construction canonicalizes: like terms are combined, zero coefficients are
    dropped, and in the numeric backend coefficients below the field's drop
    threshold relative to the largest coefficient are dropped as roundoff.

    Example:
        ```python
        fld = Field()
        f = XYPoly(fld, {(1, Fraction(0)): Fraction(1), (0, Fraction(2)): Fraction(-1)})  # y - x^2
        f.y_multiplicity()  # 0
        ```
    """

    __slots__ = ("field", "_terms")

    def __init__(self, fld: Field, terms: Mapping[Point, Coeff] | Iterable[tuple[Point, Coeff]] = ()):
        self.field = fld
        items = terms.items() if isinstance(terms, Mapping) else terms
        combined: dict[Point, Coeff] = {}
        for (b, a), coeff in items:
            a = Fraction(a)
            if b < 0 or a < 0:
                raise NegativeExponentError(f"negative exponent in term x^{a} y^{b}")
            key = (int(b), a)
            coeff = fld.coerce(coeff)
            combined[key] = combined[key] + coeff if key in combined else coeff
        self._terms = _canonical(fld, combined)

    @classmethod
    def _raw(cls, fld: Field, terms: dict[Point, Coeff]) -> "XYPoly":
        poly = cls.__new__(cls)
        poly.field = fld
        poly._terms = _canonical(fld, terms)
        return poly

    @classmethod
    def monomial(cls, fld: Field, b: int, a: Fraction | int, coeff: Any = 1) -> "XYPoly":
        return cls(fld, {(b, Fraction(a)): fld.coerce(coeff)})

    # Mapping-like access

    @property
    def terms(self) -> dict[Point, Coeff]:
        """Copy of the term map (y_exp, x_exp) -> coefficient."""
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Point, Coeff]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, key: Point) -> Coeff:
        b, a = key
        return self._terms.get((b, Fraction(a)), self.field.zero())

    def __contains__(self, key: Point) -> bool:
        b, a = key
        return (b, Fraction(a)) in self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XYPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset((k, str(v)) for k, v in self._terms.items()))

    def __repr__(self) -> str:
        from src.services.poly_parser import format_poly

        return f"XYPoly({format_poly(self)!r})"

    # Arithmetic

    def __add__(self, other: "XYPoly") -> "XYPoly":
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result[key] + coeff if key in result else coeff
        return XYPoly._raw(self.field, result)

    def __neg__(self) -> "XYPoly":
        return XYPoly._raw(self.field, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "XYPoly") -> "XYPoly":
        return self + (-other)

    def __mul__(self, other: "XYPoly") -> "XYPoly":
        result: dict[Point, Coeff] = {}
        for (b1, a1), c1 in self._terms.items():
            for (b2, a2), c2 in other._terms.items():
                key = (b1 + b2, a1 + a2)
                product = c1 * c2
                result[key] = result[key] + product if key in result else product
        return XYPoly._raw(self.field, result)

    def __pow__(self, exponent: int) -> "XYPoly":
        result = XYPoly.monomial(self.field, 0, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale_x(self, shift: Fraction) -> "XYPoly":
        """Multiply by x^shift (shift may be negative)."""
        shifted = {}
        for (b, a), coeff in self._terms.items():
            if a + shift < 0:
                raise NegativeResultExponentError(f"x-exponent {a + shift} is negative")
            shifted[(b, a + shift)] = coeff
        return XYPoly._raw(self.field, shifted)

    # Structural queries

    def support_points(self) -> set[Point]:
        """Exponent pairs (b, a) of the nonzero terms."""
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no support")
        return set(self._terms)

    def y_multiplicity(self) -> int:
        """Largest m such that y^m divides every term."""
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no y-multiplicity")
        return min(b for b, _ in self._terms)

    def y_degree(self) -> int:
        return max((b for b, _ in self._terms), default=0)

    def pure_x_part(self) -> "XYPoly":
        """The terms free of y, i.e. f(x, 0)."""
        return XYPoly._raw(self.field, {k: v for k, v in self._terms.items() if k[0] == 0})

    def divide_y(self, power: int) -> "XYPoly":
        """Divide by y^power; y^power must divide every term."""
        return XYPoly._raw(self.field, {(b - power, a): v for (b, a), v in self._terms.items()})

    def x_denominator(self) -> int:
        """lcm of the denominators of all x-exponents."""
        return lcm(1, *(a.denominator for _, a in self._terms))

    def has_integer_x_exponents(self) -> bool:
        return all(a.denominator == 1 for _, a in self._terms)

    def to_unipoly_in_y(self) -> list["XYPoly"]:
        """Split into x-coefficients of each y power: f = sum G_b(x) y^b."""
        buckets: dict[int, dict[Point, Coeff]] = defaultdict(dict)
        for (b, a), coeff in self._terms.items():
            buckets[b][(0, a)] = coeff
        return [XYPoly._raw(self.field, buckets.get(b, {})) for b in range(self.y_degree() + 1)]

    def substitute_y(self, replacement: "XYPoly") -> "XYPoly":
        """Compose f(x, replacement(x, y))."""
        parts = self.to_unipoly_in_y()
        result = XYPoly(self.field)
        for part in reversed(parts):
            result = result * replacement + part
        return result


def _canonical(fld: Field, terms: dict[Point, Coeff]) -> dict[Point, Coeff]:
    """Drop zero coefficients, and numeric roundoff below the drop threshold."""
    nonzero = {k: v for k, v in terms.items() if not fld.is_zero(v)}
    if fld.is_exact or not nonzero:
        return nonzero
    scale = max(abs(v) for v in nonzero.values())
    return {k: v for k, v in nonzero.items() if not fld.negligible(v, scale)}


def shift_substitute(f: XYPoly, gamma: Fraction, c: Coeff, beta: Fraction) -> XYPoly:
    """Compute x^-beta * f(x, x^gamma * (c + y)).

    Args:
        f: Current iterate
        gamma: Exponent increment, positive
        c: Root of the segment's characteristic polynomial
        beta: Vertical intercept of the segment

    Raises:
        NegativeResultExponentError: beta exceeds the minimum of a + gamma*b
        ConstantTermNonzeroError: c is not a characteristic root
    """
    fld = f.field
    gamma, beta = Fraction(gamma), Fraction(beta)
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")

    powers = [fld.one()]
    for _ in range(f.y_degree()):
        powers.append(powers[-1] * c)

    result: dict[Point, Coeff] = {}
    for (b, a), coeff in f._terms.items():
        exponent = a + gamma * b - beta
        if exponent < 0:
            raise NegativeResultExponentError(
                f"term x^{a} y^{b} gives x-exponent {exponent} after the shift by beta={beta}"
            )
        for j in range(b + 1):
            key = (j, exponent)
            value = coeff * comb(b, j) * powers[b - j]
            result[key] = result[key] + value if key in result else value

    shifted = XYPoly._raw(fld, result)
    if (0, Fraction(0)) in shifted._terms:
        raise ConstantTermNonzeroError(
            f"constant term {shifted._terms[(0, Fraction(0))]} remains; c is not a characteristic root"
        )
    return shifted


def translate(f: XYPoly, x0: Coeff, y0: Coeff) -> XYPoly:
    """Compute g(x, y) = f(x + x0, y + y0).

    Raises:
        FractionalExponentError: f has a fractional x-exponent
    """
    if not f.has_integer_x_exponents():
        raise FractionalExponentError("translation requires integer x-exponents")
    fld = f.field
    x0, y0 = fld.coerce(x0), fld.coerce(y0)

    result: dict[Point, Coeff] = {}
    for (b, a), coeff in f._terms.items():
        a = int(a)
        for i in range(a + 1):
            x_part = comb(a, i) * x0 ** (a - i)
            for j in range(b + 1):
                key = (j, Fraction(i))
                value = coeff * x_part * comb(b, j) * y0 ** (b - j)
                result[key] = result[key] + value if key in result else value
    return XYPoly._raw(fld, result)
