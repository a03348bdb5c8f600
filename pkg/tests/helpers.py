"""Shared test utilities: random inputs and independent numeric oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from nullsol.gaussian import GaussianRational
from nullsol.multipoly import MultiPoly
from nullsol.symbols import RealPolySystem


def random_rational(rng: random.Random, height: int = 8) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_gaussian(rng: random.Random, height: int = 8,
                    complex_coeffs: bool = True) -> GaussianRational:
    re = random_rational(rng, height)
    im = random_rational(rng, height) if complex_coeffs else 0
    return GaussianRational(re, im)


def random_multipoly(rng: random.Random, nvars: int, max_deg: int = 3,
                     max_terms: int = 5, height: int = 8,
                     complex_coeffs: bool = True) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * nvars
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            if nvars:
                exps[rng.randrange(nvars)] += 1
        terms[tuple(exps)] = random_gaussian(rng, height, complex_coeffs)
    return MultiPoly(nvars, terms)


def random_point(rng: random.Random, nvars: int, height: int = 8,
                 complex_coeffs: bool = True) -> list[GaussianRational]:
    return [random_gaussian(rng, height, complex_coeffs) for _ in range(nvars)]


# -- dense-grid oracle -----------------------------------------------------

def _poly_on_grid(poly: MultiPoly, grids: list[np.ndarray]) -> np.ndarray:
    acc = np.zeros_like(grids[0]) if grids else np.zeros(())
    for exps, coeff in poly.terms.items():
        term = float(coeff.re) * np.ones_like(acc)
        for g, e in zip(grids, exps):
            if e:
                term = term * g ** e
        acc = acc + term
    return acc


def grid_min_sum_squares(system: RealPolySystem, lo: float, hi: float,
                         step: float = 1 / 64,
                         exclude_halfwidth: float | None = None) -> float:
    """Minimum of sum(q^2) over a regular grid, chunked along the 1st axis.

    With ``exclude_halfwidth`` the closed inner cube [-h, h]^d is masked
    out (used for annulus checks outside a certified radius).
    """
    axis = np.arange(lo, hi + step / 2, step)
    d = system.dimension
    if d == 0:
        val = sum(float(p.constant_value().re) ** 2 for p in system.polys)
        return val
    best = np.inf
    chunk = max(1, int(4e6 // max(1, len(axis) ** (d - 1))))
    for start in range(0, len(axis), chunk):
        first = axis[start:start + chunk]
        grids = np.meshgrid(first, *([axis] * (d - 1)), indexing="ij")
        total = np.zeros_like(grids[0])
        for p in system.polys:
            total += _poly_on_grid(p, grids) ** 2
        if exclude_halfwidth is not None:
            inner = np.ones_like(total, dtype=bool)
            for g in grids:
                inner &= np.abs(g) <= exclude_halfwidth
            total = np.where(inner, np.inf, total)
        m = float(total.min()) if total.size else np.inf
        best = min(best, m)
    return best


def exact_common_zero(system: RealPolySystem, point) -> bool:
    pt = [Fraction(x) for x in point]
    return all(p.evaluate(pt).is_zero() for p in system.polys)
