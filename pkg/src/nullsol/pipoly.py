"""Exact arithmetic in Q(i)[pi].

Elements are polynomials in the transcendental constant pi with Gaussian-
rational coefficients.  Because pi is transcendental over Q, such an
element is zero exactly when every coefficient is zero, which makes the
zero test exact — the foundation of the periodic-lattice certificates.
"""

from __future__ import annotations

import math

from .gaussian import GaussianRational, ZERO


def _coerce(value):
    if isinstance(value, PiGaussian):
        return value
    g = GaussianRational._coerce(value)
    if g is None:
        return None
    return PiGaussian((g,))


class PiGaussian:
    """Polynomial in pi over Q(i); index k holds the pi^k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, GaussianRational) else GaussianRational(c)
              for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def pi(cls) -> "PiGaussian":
        return cls((ZERO, GaussianRational(1)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return PiGaussian(
            (self.coeffs[k] if k < len(self.coeffs) else ZERO)
            + (o.coeffs[k] if k < len(o.coeffs) else ZERO)
            for k in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return PiGaussian(-c for c in self.coeffs)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return PiGaussian()
        out = [ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            for b, cb in enumerate(o.coeffs):
                out[a + b] = out[a + b] + ca * cb
        return PiGaussian(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power in Q(i)[pi]")
        result = PiGaussian((GaussianRational(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __complex__(self):
        return sum((complex(c) * math.pi ** k for k, c in enumerate(self.coeffs)), 0j)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*pi")
            else:
                parts.append(f"({c})*pi^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PiGaussian({self.coeffs!r})"
