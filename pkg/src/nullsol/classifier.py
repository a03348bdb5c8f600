"""Map (PDE symbol, solution space) to a triviality verdict.

Each solution space has its own criterion on the symbol p: nonzero symbol
for the compactly-supported and spatial-profile spaces, degree
preservation under X -> 0 for smooth functions and general distributions,
emptiness of the imaginary-axis slice of the T-coefficient variety for
spatially tempered distributions, and a lattice resonance search for
spatially periodic distributions.  The zero symbol is nontrivial in every
space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .config import DEFAULT_CONFIG, SolverConfig
from .gaussian import GaussianRational
from .multipoly import MultiPoly
from .pipoly import PiGaussian
from .symbols import ContentGenerators, degree_test, imaginary_slice, restrict_to_time, x_content
from .variety import EMPTY, NONEMPTY, boundedness_radius, decide_emptiness
from .witness import Witness, build_periodic_witness, build_witness

TRIVIAL = "TRIVIAL"
NONTRIVIAL = "NONTRIVIAL"
UNKNOWN = "UNKNOWN"

# Rational bracket 223/71 < pi used for safe lattice enumeration bounds.
PI_LOWER = Fraction(223, 71)


class SolutionSpace(Enum):
    SMOOTH = "smooth"
    DISTRIBUTIONS = "distributions"
    TEST_FUNCTIONS = "test"
    COMPACT_DISTRIBUTIONS = "compact"
    SPATIALLY_TEMPERED = "tempered"
    BESOV = "besov"
    SOBOLEV = "sobolev"
    SCHWARTZ_SPATIAL = "schwartz"
    COMPACT_SPATIAL = "compact-spatial"
    PERIODIC = "periodic"


# Spaces where triviality is exactly "p is not the zero polynomial".
_NONZERO_RULE_SPACES = {
    SolutionSpace.TEST_FUNCTIONS: "compact-support-nonzero-symbol",
    SolutionSpace.COMPACT_DISTRIBUTIONS: "compact-support-nonzero-symbol",
    SolutionSpace.BESOV: "spatial-profile-nonzero-symbol",
    SolutionSpace.SOBOLEV: "spatial-profile-nonzero-symbol",
    SolutionSpace.SCHWARTZ_SPATIAL: "spatial-profile-nonzero-symbol",
    SolutionSpace.COMPACT_SPATIAL: "spatial-profile-nonzero-symbol",
}


@dataclass(frozen=True)
class LatticeSpec:
    """Invertible d x d rational matrix; rows are the transposed periods."""

    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "LatticeSpec":
        mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
        d = len(mat)
        if d == 0 or any(len(row) != d for row in mat):
            raise ValueError("lattice matrix must be square and nonempty")
        spec = cls(mat)
        spec.inverse()  # raises if singular
        return spec

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact inverse by Gauss-Jordan elimination."""
        d = self.dimension
        aug = [list(row) + [Fraction(int(i == j)) for j in range(d)]
               for i, row in enumerate(self.rows)]
        for col in range(d):
            pivot = next((r for r in range(col, d) if aug[r][col] != 0), None)
            if pivot is None:
                raise ValueError("lattice matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(d):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
        return tuple(tuple(row[d:]) for row in aug)

    def max_row_abs_sum(self) -> Fraction:
        return max(sum(abs(x) for x in row) for row in self.rows)

    def frequency_vector(self, k: tuple[int, ...]) -> tuple[Fraction, ...]:
        """A^-1 * k (the actual lattice frequency is 2*pi times this)."""
        inv = self.inverse()
        return tuple(sum(row[j] * k[j] for j in range(self.dimension)) for row in inv)


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str
    witness: Witness | None = None
    evidence: dict = field(default_factory=dict)


def _zero_verdict() -> Verdict:
    return Verdict(NONTRIVIAL, rule="zero-symbol",
                   evidence={"note": "the zero symbol annihilates everything"})


def classify(p: MultiPoly, space: SolutionSpace,
             config: SolverConfig = DEFAULT_CONFIG,
             lattice: LatticeSpec | None = None) -> Verdict:
    """Triviality verdict for p in the given solution space.

    ``p`` uses the standard slot layout X1..Xd, T.  For PERIODIC, ``p``
    must instead come from lattice-periodic parsing (PI slot before T) and
    a lattice must be supplied; see :func:`periodic_test`.
    """
    if space is SolutionSpace.PERIODIC:
        if lattice is None:
            raise ValueError("PERIODIC classification requires a lattice")
        return periodic_test(p, lattice, config)

    if p.is_zero():
        return _zero_verdict()

    if space in _NONZERO_RULE_SPACES:
        return Verdict(TRIVIAL, rule=_NONZERO_RULE_SPACES[space])

    if space in (SolutionSpace.SMOOTH, SolutionSpace.DISTRIBUTIONS):
        deg = p.total_degree()
        tdeg = restrict_to_time(p).total_degree()
        evidence = {"total_degree": int(deg),
                    "time_restricted_degree": None if tdeg == float("-inf") else int(tdeg)}
        if degree_test(p):
            return Verdict(TRIVIAL, rule="degree-preservation", evidence=evidence)
        return Verdict(NONTRIVIAL, rule="characteristic-time-normal", evidence=evidence)

    if space is SolutionSpace.SPATIALLY_TEMPERED:
        system = imaginary_slice(x_content(p))
        emptiness = decide_emptiness(system, config)
        evidence = {"emptiness": emptiness}
        if emptiness.status == EMPTY:
            return Verdict(TRIVIAL, rule="content-variety-empty", evidence=evidence)
        if emptiness.status == NONEMPTY:
            w = build_witness(p, emptiness.witness)
            return Verdict(NONTRIVIAL, rule="content-variety-nonempty",
                           witness=w, evidence=evidence)
        return Verdict(UNKNOWN, rule="content-variety-undecided", evidence=evidence)

    raise ValueError(f"unhandled solution space {space}")


# -- periodic lattice test -------------------------------------------------

def _lattice_shell(dim: int, radius: int):
    """Integer vectors with max-norm exactly ``radius``, largest-first.

    Ordered so that positive entries come before negative ones; the first
    resonance found is therefore deterministic and prefers, e.g., k = 1
    over k = -1.
    """
    shell = [k for k in itertools.product(range(radius, -radius - 1, -1), repeat=dim)
             if max((abs(x) for x in k), default=0) == radius]
    return shell


def _gen_depends_on_x(gen: MultiPoly, dim: int) -> bool:
    return any(any(x > 0 for x in exps[:dim]) for exps in gen.terms)


def _resonates(generators, dim: int, v: tuple[Fraction, ...]) -> bool:
    """True iff every generator vanishes at the frequency 2*pi*v, exactly.

    Generators carry the PI slot; evaluation happens in Q(i)[pi], where the
    zero test is exact because pi is transcendental.
    """
    point = [PiGaussian((0, GaussianRational(0, 2 * x))) for x in v]
    point.append(PiGaussian.pi())
    for gen in generators:
        val = gen.evaluate(point)
        if isinstance(val, GaussianRational):
            if not val.is_zero():
                return False
        elif not val.is_zero():
            return False
    return True


def periodic_test(p: MultiPoly, lattice: LatticeSpec,
                  config: SolverConfig = DEFAULT_CONFIG) -> Verdict:
    """Resonance search over the frequency lattice 2*pi * A^-1 * Z^d.

    The space is nontrivial exactly when some lattice frequency annihilates
    every T-coefficient of p.  When the symbol is PI-free and the slice
    zeros are certified bounded, the enumeration is finite and the verdict
    decisive; otherwise the search is truncated and may return UNKNOWN.
    """
    dim = lattice.dimension
    if p.nvars != dim + 2:
        raise ValueError(f"symbol has {p.nvars} slots, expected {dim + 2} "
                         "(X1..Xd, PI, T) for the periodic test")
    if p.is_zero():
        return _zero_verdict()

    generators = [a for a in p.coefficients_in_T() if not a.is_zero()]

    # A generator free of spatial variables is a nonzero element of Q(i)[pi]
    # after PI -> pi; it vanishes at no frequency at all.
    for gen in generators:
        if not _gen_depends_on_x(gen, dim):
            return Verdict(TRIVIAL, rule="nonvanishing-generator",
                           evidence={"generator_pi_free_of_x": True})

    uses_pi = any(any(exps[dim] > 0 for exps in gen.terms) for gen in generators)

    radius_bound: int | None = None
    evidence: dict = {}
    if not uses_pi:
        stripped = [gen.drop_unused_last_var() for gen in generators]
        system = imaginary_slice(ContentGenerators(dim, tuple(stripped)))
        emptiness = decide_emptiness(system, config)
        evidence["emptiness"] = emptiness
        if emptiness.status == EMPTY:
            return Verdict(TRIVIAL, rule="content-variety-empty", evidence=evidence)
        r0 = None
        if system.polys and not all(q.is_constant() for q in system.polys):
            r0 = boundedness_radius(system, config)
        if r0 is not None:
            # ||2*pi*A^-1*k||_max <= R0 forces ||k||_max <= rowsum(A)*R0/(2*pi);
            # the rational lower bracket for pi makes the bound safe.
            bound = lattice.max_row_abs_sum() * r0 / (2 * PI_LOWER)
            radius_bound = int(bound) + 1
            evidence["complete_radius"] = radius_bound

    search_radius = radius_bound if radius_bound is not None else config.lattice_radius
    for radius in range(search_radius + 1):
        for k in _lattice_shell(dim, radius):
            v = lattice.frequency_vector(k)
            if _resonates(generators, dim, v):
                w = build_periodic_witness(p, v)
                evidence["lattice_point"] = list(k)
                return Verdict(NONTRIVIAL, rule="lattice-resonance",
                               witness=w, evidence=evidence)

    evidence["searched_radius"] = search_radius
    if radius_bound is not None:
        return Verdict(TRIVIAL, rule="lattice-resonance-free", evidence=evidence)
    return Verdict(UNKNOWN, rule="lattice-search-exhausted", evidence=evidence)
