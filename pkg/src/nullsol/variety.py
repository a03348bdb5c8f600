"""Certified three-valued emptiness decision for real polynomial systems.

Pipeline: unit-ideal shortcut (no common complex zero implies no common
real zero), then a boundedness reduction that confines all real zeros to
an exact cube, then certified branch-and-bound subdivision with exact
rational interval arithmetic.  NONEMPTY always carries an exact rational
common zero; EMPTY always carries a machine-checkable certificate;
UNKNOWN is an honest inconclusive outcome, never silently coerced.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .config import DEFAULT_CONFIG, SolverConfig
from .groebner import unit_ideal_test
from .intervals import Interval, IntervalBox, enclose
from .multipoly import MultiPoly
from .symbols import RealPolySystem

EMPTY = "EMPTY"
NONEMPTY = "NONEMPTY"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class EmptinessVerdict:
    status: str
    witness: tuple[Fraction, ...] | None = None
    certificate: dict | None = None
    diagnostics: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SubdivisionResult:
    # kind: "NoZeroInBox" | "ExactZero" | "CandidateBoxes"
    kind: str
    zero: tuple[Fraction, ...] | None = None
    candidates: tuple[IntervalBox, ...] = ()
    stats: dict = field(default_factory=dict)


def _system_terms(sys: RealPolySystem) -> list[dict[tuple[int, ...], Fraction]]:
    return [p.real_terms() for p in sys.polys]


def _substitute_value(terms: dict[tuple[int, ...], Fraction], index: int,
                      value: Fraction) -> dict[tuple[int, ...], Fraction]:
    """Set one variable to an exact value, dropping its slot."""
    out: dict[tuple[int, ...], Fraction] = {}
    for exps, c in terms.items():
        cc = c * value ** exps[index]
        if cc == 0:
            continue
        e = exps[:index] + exps[index + 1:]
        out[e] = out.get(e, Fraction(0)) + cc
    return {e: c for e, c in out.items() if c != 0}


def _certify_positive_on_faces(top_terms: dict[tuple[int, ...], Fraction],
                               dim: int, depth_cap: int) -> Fraction | None:
    """Certified positive lower bound of a form on the max-norm unit sphere.

    The sphere is the union of the 2*dim faces of the cube [-1,1]^dim; each
    face is a (dim-1)-box handled by interval subdivision.  Returns None if
    positivity cannot be certified at the configured depth.
    """
    best: Fraction | None = None
    for axis in range(dim):
        for sign in (Fraction(1), Fraction(-1)):
            face = _substitute_value(top_terms, axis, sign)
            if dim == 1:
                val = face.get((), Fraction(0))
                if val <= 0:
                    return None
                best = val if best is None else min(best, val)
                continue
            work = [IntervalBox.cube(dim - 1, 1)]
            for _ in range(depth_cap + 1):
                next_work = []
                for box in work:
                    enc = enclose(face, box)
                    if enc.lo > 0:
                        best = enc.lo if best is None else min(best, enc.lo)
                    else:
                        next_work.append(box)
                if not next_work:
                    break
                if len(next_work) > 4096:
                    return None
                work = [half for box in next_work for half in box.split()]
            else:
                return None
    return best


def boundedness_radius(sys: RealPolySystem,
                       config: SolverConfig = DEFAULT_CONFIG) -> Fraction | None:
    """Exact radius R0 with every common real zero in [-R0, R0]^d, or None.

    Works on F = sum of squares of the system polynomials.  If the top
    homogeneous part of F is certified >= c > 0 on the max-norm unit
    sphere, then F(xi) >= c*r^(2D) - sum_j C_j*r^j for ||xi||_max = r >= 1,
    where C_j sums |coefficients| of the degree-j part of F; the smallest
    integer r making that positive bounds all real zeros.
    """
    if not sys.polys or all(p.is_constant() for p in sys.polys):
        raise ValueError("system must contain a nonconstant polynomial")
    f = MultiPoly.zero(sys.dimension)
    for p in sys.polys:
        f = f + p * p
    terms = f.real_terms()
    deg = max(sum(e) for e in terms)
    top = {e: c for e, c in terms.items() if sum(e) == deg}
    lower_weight: dict[int, Fraction] = {}
    for e, c in terms.items():
        j = sum(e)
        if j < deg:
            lower_weight[j] = lower_weight.get(j, Fraction(0)) + abs(c)

    c = _certify_positive_on_faces(top, sys.dimension, config.sphere_depth)
    if c is None:
        return None

    def dominates(r: int) -> bool:
        return c * Fraction(r) ** deg > sum(w * Fraction(r) ** j
                                            for j, w in lower_weight.items())

    hi = 1
    while not dominates(hi):
        hi *= 2
        if hi > 1 << 40:
            return None
    lo = max(1, hi // 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if dominates(mid):
            hi = mid
        else:
            lo = mid + 1
    return Fraction(hi)


def _candidate_points(box: IntervalBox, denominator_bound: int):
    """Deterministic rational candidates inside a box.

    Midpoint, the midpoint with zero-containing coordinates snapped to 0,
    and small-denominator roundings of both, each clamped into the box.
    """
    mid = box.midpoint()
    snapped = tuple(Fraction(0) if iv.contains_zero() else m
                    for iv, m in zip(box.intervals, mid))
    candidates = [mid, snapped]
    for base in (mid, snapped):
        limited = []
        for iv, m in zip(box.intervals, base):
            q = m.limit_denominator(denominator_bound)
            limited.append(q if iv.contains(q) else m)
        candidates.append(tuple(limited))
    seen = set()
    for pt in candidates:
        if pt not in seen:
            seen.add(pt)
            yield pt


def _is_exact_common_zero(terms_list, point) -> bool:
    for terms in terms_list:
        acc = Fraction(0)
        for exps, c in terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x ** e
            acc += v
        if acc != 0:
            return False
    return True


def subdivision_search(sys: RealPolySystem, box: IntervalBox,
                       config: SolverConfig = DEFAULT_CONFIG) -> SubdivisionResult:
    """Branch-and-bound over a box with exact interval arithmetic.

    A box is discarded when some system polynomial's enclosure excludes 0;
    discarding every box proves there is no zero in the original box.  An
    exact rational common zero among the deterministic candidates of any
    surviving box yields ExactZero (the lexicographically smallest zero
    found in that wave, so the result is independent of processing order).
    """
    terms_list = _system_terms(sys)

    def process(b: IntervalBox):
        for terms in terms_list:
            if not enclose(terms, b).contains_zero():
                return ("discard", None)
        zeros = [pt for pt in _candidate_points(b, config.denominator_bound)
                 if _is_exact_common_zero(terms_list, pt)]
        return ("keep", zeros)

    wave = [box]
    processed = discarded = 0
    depth = 0
    pool = ThreadPoolExecutor(max_workers=config.threads) if config.threads > 1 else None
    try:
        while True:
            results = list(pool.map(process, wave)) if pool else [process(b) for b in wave]
            processed += len(wave)
            zeros_found: list[tuple[Fraction, ...]] = []
            survivors: list[IntervalBox] = []
            for b, (action, zeros) in zip(wave, results):
                if action == "discard":
                    discarded += 1
                    continue
                if zeros:
                    zeros_found.extend(zeros)
                survivors.append(b)
            stats = {"boxes_processed": processed, "boxes_discarded": discarded,
                     "depth_reached": depth}
            if zeros_found:
                return SubdivisionResult("ExactZero", zero=min(zeros_found), stats=stats)
            if not survivors:
                return SubdivisionResult("NoZeroInBox", stats=stats)
            if depth >= config.max_depth or 2 * len(survivors) > config.box_budget:
                stats["unresolved_boxes"] = len(survivors)
                return SubdivisionResult("CandidateBoxes",
                                         candidates=tuple(survivors), stats=stats)
            wave = [half for b in survivors for half in b.split()]
            depth += 1
    finally:
        if pool:
            pool.shutdown(wait=False)


def decide_emptiness(sys: RealPolySystem,
                     config: SolverConfig = DEFAULT_CONFIG) -> EmptinessVerdict:
    """Three-valued emptiness decision; see module docstring for pipeline."""
    diagnostics: dict = {"pipeline": []}

    sys = RealPolySystem(sys.dimension,
                         tuple(p for p in sys.polys if not p.is_zero()))
    if not sys.polys:
        # Vacuous system: every point is a common zero.
        origin = tuple(Fraction(0) for _ in range(sys.dimension))
        return EmptinessVerdict(NONEMPTY, witness=origin,
                                certificate={"kind": "ExactPoint"},
                                diagnostics={"pipeline": ["empty-system"]})

    for p in sys.polys:
        if p.is_constant() and not p.is_zero():
            diagnostics["pipeline"].append("constant-generator")
            return EmptinessVerdict(EMPTY, certificate={"kind": "UnitIdeal"},
                                    diagnostics=diagnostics)

    unit = unit_ideal_test(list(sys.polys), config.groebner_cap)
    diagnostics["pipeline"].append("groebner")
    diagnostics["groebner_unit"] = unit
    if unit:
        return EmptinessVerdict(EMPTY, certificate={"kind": "UnitIdeal"},
                                diagnostics=diagnostics)

    radius = boundedness_radius(sys, config)
    diagnostics["pipeline"].append("boundedness")
    diagnostics["radius"] = None if radius is None else str(radius)

    halfwidth = radius if radius is not None else config.default_box_halfwidth
    box = IntervalBox.cube(sys.dimension, halfwidth)
    result = subdivision_search(sys, box, config)
    diagnostics["pipeline"].append("subdivision")
    diagnostics["subdivision"] = dict(result.stats)

    if result.kind == "ExactZero":
        return EmptinessVerdict(NONEMPTY, witness=result.zero,
                                certificate={"kind": "ExactPoint"},
                                diagnostics=diagnostics)
    if result.kind == "NoZeroInBox" and radius is not None:
        return EmptinessVerdict(
            EMPTY,
            certificate={"kind": "ExhaustiveSubdivision", "radius": str(radius)},
            diagnostics=diagnostics)
    diagnostics["unresolved_boxes"] = len(result.candidates)
    return EmptinessVerdict(UNKNOWN, diagnostics=diagnostics)
