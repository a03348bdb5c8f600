"""Explicit nonzero zero-past solutions with exact residual certificates.

A witness is the symbolic solution  exp(i<x, xi0>) (x) Theta(t), where
Theta vanishes for t <= 0 and equals exp(-1/t) for t > 0.  It solves the
PDE exactly because every T-coefficient of the symbol vanishes at i*xi0;
the certificate stores those exact zero values.  Numeric evaluation is a
sanity layer only, never part of the guarantee.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gaussian import GaussianRational
from .multipoly import MultiPoly
from .pipoly import PiGaussian


class CertificateFailure(Exception):
    """A supposed frequency does not annihilate every T-coefficient."""

    def __init__(self, order: int, value):
        super().__init__(f"coefficient a_{order} evaluates to {value} != 0 at the frequency")
        self.order = order
        self.value = value


@dataclass(frozen=True)
class ThetaDerivPoly:
    """P_j with Theta^(j)(t) = P_j(1/t) * exp(-1/t) for t > 0.

    Recurrence: P_0 = 1 and P_{j+1}(s) = s^2 * (P_j(s) - P_j'(s)).
    Coefficient k is the integer coefficient of s^k.
    """

    order: int
    coeffs: tuple[int, ...]

    def eval_at(self, s: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def theta_value(self, t: float) -> float:
        """Theta^(order)(t); identically 0 for t <= 0."""
        if t <= 0:
            return 0.0
        return self.eval_at(1.0 / t) * math.exp(-1.0 / t)


def theta_derivatives(n: int) -> list[ThetaDerivPoly]:
    """P_0 .. P_n by the recurrence."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    polys = [ThetaDerivPoly(0, (1,))]
    coeffs = [1]
    for j in range(n):
        deriv = [k * coeffs[k] for k in range(1, len(coeffs))]
        diff = [c - (deriv[k] if k < len(deriv) else 0) for k, c in enumerate(coeffs)]
        coeffs = [0, 0] + diff
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        polys.append(ThetaDerivPoly(j + 1, tuple(coeffs)))
    return polys


@dataclass(frozen=True)
class Witness:
    """Symbolic nonzero zero-past solution plus its exact certificate.

    For the periodic kind the stored frequency is the rational vector v0
    with actual frequency 2*pi*v0 (pi_factor True), the coefficient
    polynomials carry a trailing PI slot, and certificate entries live in
    Q(i)[pi]; otherwise the frequency is the exact rational xi0 itself.
    """

    kind: str  # ExponentialTensorTheta | ConstantTensorTheta | PeriodicExponentialTheta
    frequency: tuple[Fraction, ...]
    pi_factor: bool
    theta: tuple[ThetaDerivPoly, ...]
    certificate: tuple
    coeff_polys: tuple[MultiPoly, ...]

    def exact_point(self) -> list:
        """The exact evaluation point i*frequency for the coefficients."""
        if self.pi_factor:
            pt = [PiGaussian((0, GaussianRational(0, 2 * v))) for v in self.frequency]
            pt.append(PiGaussian.pi())
            return pt
        return [GaussianRational(0, f) for f in self.frequency]

    def complex_point(self) -> list[complex]:
        if self.pi_factor:
            pt = [2j * math.pi * float(v) for v in self.frequency]
            pt.append(complex(math.pi))
            return pt
        return [1j * float(f) for f in self.frequency]

    def frequency_floats(self) -> list[float]:
        scale = 2 * math.pi if self.pi_factor else 1.0
        return [scale * float(v) for v in self.frequency]


def _check_certificate(coeff_polys: Sequence[MultiPoly], point) -> tuple:
    values = []
    for j, a in enumerate(coeff_polys):
        v = a.evaluate(point)
        if not v.is_zero():
            raise CertificateFailure(j, v)
        values.append(v)
    return tuple(values)


def build_witness(p: MultiPoly, frequency: Sequence[Fraction]) -> Witness:
    """Witness exp(i<x, xi0>) (x) Theta for a symbol whose T-coefficients
    all vanish at i*xi0; raises CertificateFailure otherwise."""
    freq = tuple(Fraction(f) for f in frequency)
    if len(freq) != p.nvars - 1:
        raise ValueError(f"frequency has length {len(freq)}, expected {p.nvars - 1}")
    coeff_polys = tuple(p.coefficients_in_T())
    if not coeff_polys:
        coeff_polys = (MultiPoly.zero(p.nvars - 1),)
    point = [GaussianRational(0, f) for f in freq]
    certificate = _check_certificate(coeff_polys, point)
    kind = "ConstantTensorTheta" if all(f == 0 for f in freq) else "ExponentialTensorTheta"
    return Witness(kind=kind, frequency=freq, pi_factor=False,
                   theta=tuple(theta_derivatives(len(coeff_polys) - 1)),
                   certificate=certificate, coeff_polys=coeff_polys)


def build_periodic_witness(p: MultiPoly, v0: Sequence[Fraction]) -> Witness:
    """Periodic witness at lattice frequency 2*pi*v0.

    ``p`` must carry the PI slot just before T (lattice-periodic parse
    mode); certificates are exact elements of Q(i)[pi].
    """
    v = tuple(Fraction(x) for x in v0)
    if len(v) != p.nvars - 2:
        raise ValueError(f"frequency has length {len(v)}, expected {p.nvars - 2}")
    coeff_polys = tuple(p.coefficients_in_T())
    if not coeff_polys:
        coeff_polys = (MultiPoly.zero(p.nvars - 1),)
    point = [PiGaussian((0, GaussianRational(0, 2 * x))) for x in v]
    point.append(PiGaussian.pi())
    values = []
    for j, a in enumerate(coeff_polys):
        val = a.evaluate(point)
        if not (isinstance(val, PiGaussian) and val.is_zero()) \
                and not (isinstance(val, GaussianRational) and val.is_zero()):
            raise CertificateFailure(j, val)
        values.append(PiGaussian())
    return Witness(kind="PeriodicExponentialTheta", frequency=v, pi_factor=True,
                   theta=tuple(theta_derivatives(len(coeff_polys) - 1)),
                   certificate=tuple(values), coeff_polys=coeff_polys)


@dataclass(frozen=True)
class ResidualReport:
    exact_certificate_ok: bool
    max_numeric_residual: float
    past_ok: bool
    grid_points: int


def verify_residual(w: Witness, p: MultiPoly,
                    sample_grid: Sequence[tuple[Sequence[float], float]]) -> ResidualReport:
    """Exact re-check of the certificate plus a floating-point sweep.

    Each grid entry is (x, t) with t != 0.  The numeric layer evaluates
    |sum_j a_j(i*xi0) * Theta^(j)(t) * exp(i<x, xi0>)| with the a_j values
    recomputed in floating point, so only rounding noise remains.
    """
    _check_certificate(w.coeff_polys, w.exact_point())
    cpoint = w.complex_point()
    coeff_vals = [a.evaluate_complex(cpoint) for a in w.coeff_polys]
    freq = w.frequency_floats()
    max_res = 0.0
    for x, t in sample_grid:
        if t == 0:
            raise ValueError("grid points must have t != 0")
        phase = cmath.exp(1j * sum(xi * fi for xi, fi in zip(x, freq)))
        val = sum(c * th.theta_value(t) for c, th in zip(coeff_vals, w.theta))
        max_res = max(max_res, abs(val * phase))
    # Theta and all derivatives vanish identically for t < 0 by construction.
    past_ok = all(th.theta_value(-1.0) == 0.0 for th in w.theta)
    return ResidualReport(exact_certificate_ok=True, max_numeric_residual=max_res,
                          past_ok=past_ok, grid_points=len(sample_grid))
