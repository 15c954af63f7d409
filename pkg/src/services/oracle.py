# -*- coding: utf-8 -*-
"""Undetermined-coefficients oracle for Puiseux branches.

Works on F(t, y) = f(t^e, y) with a ramification bound e large enough for
every branch, and solves F(t, sum a_k t^k) = 0 order by order. Admissible
next orders are found by scanning integer slopes of the points
(j, ord_t R_j) where F(t, P(t) + z) = sum R_j(t) z^j, so no hull or
shift-substitution code is shared with the expansion workflow.
"""

from fractions import Fraction
from math import comb, lcm
from typing import Any, Sequence

from src.core.errors import AmbiguousBranchError, NoSolutionError
from src.core.logging import get_logger
from src.models.series import PuiseuxSeries, Term
from src.services.field import Coeff, Field, UniPoly, find_roots
from src.services.mpoly import XYPoly

logger = get_logger(__name__)

# t-polynomial: exponent -> coefficient
TPoly = dict[int, Coeff]


def _tmul(fld: Field, p: TPoly, q: TPoly) -> TPoly:
    result: TPoly = {}
    for i, a in p.items():
        for j, b in q.items():
            result[i + j] = result[i + j] + a * b if i + j in result else a * b
    return result


def _norm(p: TPoly) -> Any:
    return max((abs(c) for c in p.values()), default=0)


def ramification_bound(f: XYPoly, prefix: Sequence[Term] = ()) -> int:
    """A multiple of the ramification index of every branch of f."""
    degree = max(f.y_degree(), 1)
    return lcm(f.x_denominator(), lcm(*range(1, degree + 1)), *(Fraction(e).denominator for e, _ in prefix))


class _Oracle:
    def __init__(self, f: XYPoly, prefix: Sequence[Term], terms: int):
        self.field = f.field
        self.e = ramification_bound(f, prefix)
        self.terms = terms
        self.prefix = [(Fraction(e), self.field.coerce(c)) for e, c in prefix]
        self.degree = f.y_degree()
        self.rows: list[TPoly] = [{} for _ in range(self.degree + 1)]
        for (b, a), coeff in f.terms.items():
            self.rows[b][int(a * self.e)] = coeff

    def components(self, P: TPoly) -> list[TPoly]:
        """R_j with F(t, P + z) = sum R_j z^j, roundoff dropped."""
        fld = self.field
        powers: list[TPoly] = [{0: fld.one()}]
        for _ in range(self.degree):
            powers.append(_tmul(fld, powers[-1], P))
        p_norm = _norm(P)

        components = []
        for j in range(self.degree + 1):
            total: TPoly = {}
            scale = 0
            for b in range(j, self.degree + 1):
                if not self.rows[b]:
                    continue
                product = _tmul(fld, self.rows[b], powers[b - j])
                weight = comb(b, j)
                for k, c in product.items():
                    total[k] = total[k] + weight * c if k in total else weight * c
                scale += weight * _norm(self.rows[b]) * max(p_norm, 1) ** (b - j)
            components.append({k: c for k, c in total.items() if not fld.negligible(c, scale)})
        return components

    def search(self, terms: list[tuple[int, Coeff]], multiplicity: int) -> list[PuiseuxSeries]:
        fld = self.field
        P: TPoly = {k: c for k, c in terms}
        components = self.components(P)
        nonzero = [j for j, r in enumerate(components) if r]
        lowest = nonzero[0]
        exact_here = lowest > 0
        level = len(terms)

        if level >= self.terms:
            return [self._series(terms, exact_here, multiplicity)]

        found: list[PuiseuxSeries] = []
        if exact_here and level >= len(self.prefix):
            found.append(self._series(terms, True, lowest))

        valuation = {j: min(components[j]) for j in nonzero}
        start = terms[-1][0] + 1 if terms else 1
        for k in range(start, valuation[lowest] + 1):
            order = min(valuation[j] + j * k for j in nonzero)
            tied = [j for j in nonzero if valuation[j] + j * k == order]
            if len(tied) < 2:
                continue
            coeffs = [fld.zero()] * (tied[-1] + 1)
            for j in tied:
                coeffs[j] = components[j][valuation[j]]
            for root, root_multiplicity in find_roots(UniPoly(fld, tuple(coeffs))):
                if fld.is_zero(root):
                    continue
                if level < len(self.prefix):
                    exponent, expected = self.prefix[level]
                    if Fraction(k, self.e) != exponent or not fld.close(root, expected):
                        continue
                found.extend(self.search(terms + [(k, root)], root_multiplicity))
        return found

    def _series(self, terms: list[tuple[int, Coeff]], exact: bool, multiplicity: int) -> PuiseuxSeries:
        return PuiseuxSeries(
            field=self.field,
            terms=tuple((Fraction(k, self.e), c) for k, c in terms),
            exact=exact,
            multiplicity=multiplicity,
        )


def oracle_branches(f: XYPoly, prefix: Sequence[Term] = (), terms: int = 5) -> list[PuiseuxSeries]:
    """Every continuation of ``prefix`` up to ``terms`` terms.

    Continuations that become exact solutions earlier stop there.
    """
    oracle = _Oracle(f, prefix, terms)
    branches = oracle.search([], f.y_degree())
    logger.debug("Oracle continuations", prefix=len(prefix), terms=terms, found=len(branches), e=oracle.e)
    return branches


def _same(fld: Field, a: PuiseuxSeries, b: PuiseuxSeries) -> bool:
    if len(a.terms) != len(b.terms) or a.exact != b.exact:
        return False
    return all(ea == eb and fld.close(ca, cb) for (ea, ca), (eb, cb) in zip(a.terms, b.terms))


def oracle_expand(f: XYPoly, leading: Term | Sequence[Term], terms: int) -> PuiseuxSeries:
    """The unique continuation of a leading term (or prefix) up to ``terms`` terms.

    Args:
        f: Polynomial
        leading: (gamma, c) or a list of leading (exponent, coefficient) terms
        terms: Number of terms K of the result, prefix included

    Raises:
        AmbiguousBranchError: several distinct continuations share the prefix
        NoSolutionError: the prefix is not the jet of any branch
    """
    if leading and isinstance(leading[0], (int, Fraction)):
        leading = [leading]  # type: ignore[list-item]
    candidates = oracle_branches(f, leading, terms)  # type: ignore[arg-type]

    distinct: list[PuiseuxSeries] = []
    for candidate in candidates:
        if not any(_same(f.field, candidate, seen) for seen in distinct):
            distinct.append(candidate)
    if not distinct:
        raise NoSolutionError(f"no branch of f starts with {leading}")
    if len(distinct) > 1:
        raise AmbiguousBranchError(
            f"{len(distinct)} continuations share the prefix; extend the prefix",
            candidates=len(distinct),
        )
    return distinct[0]
