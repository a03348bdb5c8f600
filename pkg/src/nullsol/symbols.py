"""Symbolic invariants of a PDE symbol p(X1..Xd, T).

Degree test, principal part, characteristic normals, the ideal generated
by the T-coefficients of p, and the substitution X -> i*xi that turns the
imaginary-axis slice of its zero set into a real polynomial system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gaussian import GaussianRational, I
from .multipoly import NEG_INF, MultiPoly


@dataclass(frozen=True)
class ContentGenerators:
    """Nonzero T-coefficients of p, as polynomials in X1..Xd."""

    dimension: int
    generators: tuple[MultiPoly, ...]

    def is_zero_ideal(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class RealPolySystem:
    """Real-coefficient polynomials in xi1..xid.

    Common real zeros correspond exactly to the points i*xi at which every
    content generator vanishes.
    """

    dimension: int
    polys: tuple[MultiPoly, ...]


def restrict_to_time(p: MultiPoly) -> MultiPoly:
    """p with every spatial variable set to 0 (a polynomial in T alone)."""
    return MultiPoly(p.nvars, {e: c for e, c in p.terms.items()
                               if all(x == 0 for x in e[:-1])})


def degree_test(p: MultiPoly) -> bool:
    """True iff total degree is unchanged by setting all Xk to 0."""
    return p.total_degree() == restrict_to_time(p).total_degree()


def principal_part(p: MultiPoly) -> MultiPoly:
    """Top-total-degree homogeneous component of a nonzero polynomial."""
    if p.is_zero():
        raise ValueError("principal part of the zero polynomial is undefined")
    m = p.total_degree()
    return MultiPoly(p.nvars, {e: c for e, c in p.terms.items() if sum(e) == m})


def is_characteristic_normal(p: MultiPoly, n: Sequence[Fraction]) -> bool:
    """True iff the hyperplane with normal n is characteristic for p."""
    if p.is_zero():
        raise ValueError("zero polynomial has no principal part")
    vec = [Fraction(x) for x in n]
    if len(vec) != p.nvars:
        raise ValueError(f"normal has length {len(vec)}, expected {p.nvars}")
    if all(x == 0 for x in vec):
        raise ValueError("normal vector must be nonzero")
    return principal_part(p).evaluate(vec).is_zero()


def x_content(p: MultiPoly) -> ContentGenerators:
    """Generators of the ideal of T-coefficients (zero entries dropped)."""
    gens = tuple(a for a in p.coefficients_in_T() if not a.is_zero())
    return ContentGenerators(dimension=p.nvars - 1, generators=gens)


def substitute_i_xi(a: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Split a(i*xi) into real and imaginary part polynomials in xi.

    Each term c * X^e picks up a factor i^|e|; the result is returned as a
    pair (real part, imaginary part), both with real coefficients.
    """
    re_terms: dict[tuple[int, ...], GaussianRational] = {}
    im_terms: dict[tuple[int, ...], GaussianRational] = {}
    for exps, c in a.terms.items():
        cc = c * I ** sum(exps)
        if cc.re != 0:
            prev = re_terms.get(exps)
            re_terms[exps] = GaussianRational(cc.re) if prev is None else prev + cc.re
        if cc.im != 0:
            prev = im_terms.get(exps)
            im_terms[exps] = GaussianRational(cc.im) if prev is None else prev + cc.im
    return MultiPoly(a.nvars, re_terms), MultiPoly(a.nvars, im_terms)


def imaginary_slice(content: ContentGenerators) -> RealPolySystem:
    """Real system whose zeros are the points xi with i*xi in the variety.

    Every generator contributes its real and imaginary parts under
    X -> i*xi; zero parts are dropped and structural duplicates removed.
    """
    polys: list[MultiPoly] = []
    seen = set()
    for a in content.generators:
        for part in substitute_i_xi(a):
            if part.is_zero() or part in seen:
                continue
            seen.add(part)
            polys.append(part)
    return RealPolySystem(dimension=content.dimension, polys=tuple(polys))
