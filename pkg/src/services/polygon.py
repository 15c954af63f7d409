# -*- coding: utf-8 -*-
"""Newton polygon geometry.

Support points are ``(b, a)`` pairs for terms ``k x^a y^b``. All geometry is
exact over ``Fraction``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from src.core.errors import EmptySegmentError
from src.services.field import UniPoly
from src.services.mpoly import Point, XYPoly


@dataclass(frozen=True)
class Segment:
    """One lower-hull edge of a Newton polygon.

    Attributes:
        start: Left endpoint (b, a)
        end: Right endpoint (b, a), end.b > start.b
        slope: (end.a - start.a) / (end.b - start.b)
        gamma: Negative slope, the next exponent increment
        beta: Intercept of the supporting line on the x-exponent axis
        span: end.b - start.b
    """

    start: Point
    end: Point
    slope: Fraction
    gamma: Fraction
    beta: Fraction
    span: int

    @classmethod
    def between(cls, start: Point, end: Point) -> "Segment":
        span = end[0] - start[0]
        slope = Fraction(end[1] - start[1]) / span
        gamma = -slope
        return cls(
            start=start,
            end=end,
            slope=slope,
            gamma=gamma,
            beta=start[1] + gamma * start[0],
            span=span,
        )

    def height(self, point: Point) -> Fraction:
        """a + gamma*b; equals beta on the supporting line, larger above it."""
        b, a = point
        return a + self.gamma * b

    def contains(self, point: Point) -> bool:
        return self.height(point) == self.beta


def _cross(o: Point, p: Point, q: Point) -> Fraction:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def newton_polygon(points: Iterable[Point]) -> list[Point]:
    """Lower-left hull chain of the support points.

    The chain runs from the point of minimal b (ties: minimal a) to the point
    of minimal a (ties: minimal b). Collinear interior points are not vertices.
    """
    ordered = sorted({(int(b), Fraction(a)) for b, a in points})
    if not ordered:
        raise ValueError("newton_polygon needs at least one point")

    # Monotone chain, lower half
    lower: list[Point] = []
    for point in ordered:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], point) <= 0:
            lower.pop()
        lower.append(point)

    lowest = min(a for _, a in ordered)
    for index, (_, a) in enumerate(lower):
        if a == lowest:
            return lower[: index + 1]
    return lower


def expansion_segments(chain: list[Point]) -> list[Segment]:
    """Strictly negative-slope edges of the chain, ordered by increasing b."""
    segments = [Segment.between(p, q) for p, q in zip(chain, chain[1:])]
    return [segment for segment in segments if segment.slope < 0]


def segments_of(f: XYPoly) -> list[Segment]:
    """Expansion segments of f, ordered by increasing gamma."""
    segments = expansion_segments(newton_polygon(f.support_points()))
    return sorted(segments, key=lambda segment: segment.gamma)


def characteristic_poly(f: XYPoly, seg: Segment) -> UniPoly:
    """phi(c) = sum of coeff(b, a) * c^b over support points on the segment's line.

    The raw polynomial is returned, including the c^start.b factor, so
    deg(phi) = end.b and ord(phi) = start.b.

    Raises:
        EmptySegmentError: no support point of f lies on the line
    """
    fld = f.field
    coeffs = [fld.zero()] * (seg.end[0] + 1)
    found = False
    for (b, a), coeff in f.terms.items():
        if seg.contains((b, a)):
            if b >= len(coeffs):
                coeffs.extend([fld.zero()] * (b + 1 - len(coeffs)))
            coeffs[b] = coeffs[b] + coeff
            found = True
    if not found:
        raise EmptySegmentError(f"no support point lies on the segment {seg.start}-{seg.end}")
    return UniPoly(fld, tuple(coeffs))
