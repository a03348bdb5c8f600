"""Buchberger's algorithm over Q(i), graded-reverse-lexicographic order.

Used only as a sound shortcut: if the ideal generated by a system contains
a nonzero constant, the system has no common complex zero, hence no common
real zero.  A reduction-step cap keeps runtime bounded; hitting the cap is
reported as inconclusive, never as a verdict.
"""

from __future__ import annotations

from .gaussian import GaussianRational, ONE
from .multipoly import MultiPoly


class GroebnerCapExceeded(Exception):
    """Reduction budget exhausted before the basis stabilized."""


def grevlex_key(exps: tuple[int, ...]):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def leading_term(p: MultiPoly) -> tuple[tuple[int, ...], GaussianRational]:
    exps = max(p.terms, key=grevlex_key)
    return exps, p.terms[exps]


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_mul(p: MultiPoly, exps: tuple[int, ...], coeff: GaussianRational) -> MultiPoly:
    return MultiPoly(p.nvars, {
        tuple(a + b for a, b in zip(e, exps)): c * coeff
        for e, c in p.terms.items()
    })


class _Budget:
    __slots__ = ("left",)

    def __init__(self, cap: int):
        self.left = cap

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise GroebnerCapExceeded()


def reduce_poly(f: MultiPoly, basis: list[MultiPoly], budget: _Budget | None = None) -> MultiPoly:
    """Full normal form of f modulo basis (leading-term reduction)."""
    remainder: dict[tuple[int, ...], GaussianRational] = {}
    work = f
    while not work.is_zero():
        lt_e, lt_c = leading_term(work)
        reduced = False
        for g in basis:
            g_e, g_c = leading_term(g)
            if _divides(g_e, lt_e):
                if budget is not None:
                    budget.spend()
                quot_e = tuple(a - b for a, b in zip(lt_e, g_e))
                work = work - _monomial_mul(g, quot_e, lt_c / g_c)
                reduced = True
                break
        if not reduced:
            remainder[lt_e] = lt_c
            work = MultiPoly(work.nvars, {e: c for e, c in work.terms.items() if e != lt_e})
    return MultiPoly(f.nvars, remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    f_e, f_c = leading_term(f)
    g_e, g_c = leading_term(g)
    lcm = tuple(max(a, b) for a, b in zip(f_e, g_e))
    sf = _monomial_mul(f, tuple(a - b for a, b in zip(lcm, f_e)), ONE / f_c)
    sg = _monomial_mul(g, tuple(a - b for a, b in zip(lcm, g_e)), ONE / g_c)
    return sf - sg


def buchberger(polys: list[MultiPoly], cap: int = 50000) -> list[MultiPoly]:
    """Groebner basis (grevlex) of the given generators.

    Raises GroebnerCapExceeded when the reduction budget runs out.
    """
    basis = [p for p in polys if not p.is_zero()]
    if not basis:
        return []
    budget = _Budget(cap)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]

    def pair_key(pair):
        i, j = pair
        lcm = tuple(max(a, b) for a, b in
                    zip(leading_term(basis[i])[0], leading_term(basis[j])[0]))
        return grevlex_key(lcm)

    while pairs:
        pairs.sort(key=pair_key)
        i, j = pairs.pop(0)
        f_e = leading_term(basis[i])[0]
        g_e = leading_term(basis[j])[0]
        # Buchberger's first criterion: coprime leading monomials.
        if all(min(a, b) == 0 for a, b in zip(f_e, g_e)):
            continue
        s = s_polynomial(basis[i], basis[j])
        r = reduce_poly(s, basis, budget)
        if not r.is_zero():
            k = len(basis)
            basis.append(r)
            pairs.extend((m, k) for m in range(k))
            if r.is_constant():
                # Unit in the ideal; basis is the whole ring.
                return [MultiPoly.constant(r.nvars, 1)]
    return basis


def unit_ideal_test(polys: list[MultiPoly], cap: int = 50000) -> bool | None:
    """True/False for a decided unit-ideal question; None if cap exceeded."""
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return False
    if any(p.is_constant() for p in nonzero):
        return True
    try:
        basis = buchberger(nonzero, cap)
    except GroebnerCapExceeded:
        return None
    return any(p.is_constant() and not p.is_zero() for p in basis)
