import dataclasses
from fractions import Fraction

import pytest

from nullsol.config import DEFAULT_CONFIG
from nullsol.intervals import IntervalBox
from nullsol.multipoly import MultiPoly
from nullsol.symbols import RealPolySystem
from nullsol.variety import (
    EMPTY,
    NONEMPTY,
    UNKNOWN,
    boundedness_radius,
    decide_emptiness,
    subdivision_search,
)

from helpers import exact_common_zero

CIRCLE = MultiPoly(2, {(2, 0): -1, (0, 2): -1, (0, 0): 1})   # 1 - x^2 - y^2
POSDEF = MultiPoly(1, {(2,): 1, (0,): 1})                    # x^2 + 1
HYPERBOLA_AXES = MultiPoly(2, {(1, 1): 1})                   # x*y


def sys_of(*polys):
    return RealPolySystem(polys[0].nvars, tuple(polys))


def test_boundedness_circle():
    r0 = boundedness_radius(sys_of(CIRCLE))
    assert r0 is not None and r0 >= 1
    # all zeros lie on the unit circle, safely inside the certified cube
    assert r0 >= Fraction(1)


def test_boundedness_unbounded_zero_set():
    assert boundedness_radius(sys_of(HYPERBOLA_AXES)) is None


def test_boundedness_posdef():
    r0 = boundedness_radius(sys_of(POSDEF))
    assert r0 is not None


def test_boundedness_rejects_constant_system():
    with pytest.raises(ValueError):
        boundedness_radius(sys_of(MultiPoly.constant(1, 2)))


def test_subdivision_no_zero():
    box = IntervalBox.cube(1, 10)
    res = subdivision_search(sys_of(POSDEF), box)
    assert res.kind == "NoZeroInBox"


def test_subdivision_finds_exact_zero():
    box = IntervalBox.cube(2, 2)
    res = subdivision_search(sys_of(CIRCLE), box)
    assert res.kind == "ExactZero"
    assert exact_common_zero(sys_of(CIRCLE), res.zero)


def test_subdivision_candidate_boxes_on_budget():
    cfg = dataclasses.replace(DEFAULT_CONFIG, max_depth=0)
    # x^2 - 2 has no rational zero; depth 0 leaves a candidate box
    p = MultiPoly(1, {(2,): 1, (0,): -2})
    res = subdivision_search(sys_of(p), IntervalBox.cube(1, 2), cfg)
    assert res.kind == "CandidateBoxes"
    assert res.candidates


def test_decide_empty_unit_generator():
    verdict = decide_emptiness(sys_of(MultiPoly.constant(2, 1)))
    assert verdict.status == EMPTY
    assert verdict.certificate["kind"] == "UnitIdeal"


def test_decide_empty_posdef():
    verdict = decide_emptiness(sys_of(POSDEF))
    assert verdict.status == EMPTY
    assert verdict.certificate["kind"] == "ExhaustiveSubdivision"


def test_decide_nonempty_circle():
    verdict = decide_emptiness(sys_of(CIRCLE))
    assert verdict.status == NONEMPTY
    assert exact_common_zero(sys_of(CIRCLE), verdict.witness)


def test_decide_nonempty_vacuous_system():
    verdict = decide_emptiness(RealPolySystem(2, ()))
    assert verdict.status == NONEMPTY
    assert verdict.witness == (Fraction(0), Fraction(0))


def test_decide_ignores_zero_polys():
    verdict = decide_emptiness(sys_of(MultiPoly.zero(2), CIRCLE))
    assert verdict.status == NONEMPTY


def test_decide_unknown_is_honest():
    # sqrt(2) point: no rational zero exists, zero set bounded but the
    # candidate generator can never certify it; verdict must be UNKNOWN
    p = MultiPoly(1, {(2,): 1, (0,): -2})
    verdict = decide_emptiness(sys_of(p))
    assert verdict.status == UNKNOWN
    assert verdict.witness is None


def test_witness_is_exact_never_float():
    verdict = decide_emptiness(sys_of(CIRCLE))
    assert all(isinstance(x, Fraction) for x in verdict.witness)


def test_determinism_across_threads():
    results = []
    for threads in (1, 2, 8):
        cfg = dataclasses.replace(DEFAULT_CONFIG, threads=threads)
        v = decide_emptiness(sys_of(CIRCLE), cfg)
        results.append((v.status, v.witness))
    assert results[0] == results[1] == results[2]


def test_monotone_in_depth():
    # deeper searches never flip a decisive verdict
    statuses = []
    for depth in (6, 12, 24):
        cfg = dataclasses.replace(DEFAULT_CONFIG, max_depth=depth)
        statuses.append(decide_emptiness(sys_of(CIRCLE), cfg).status)
    decisive = [s for s in statuses if s != UNKNOWN]
    assert len(set(decisive)) <= 1
    assert statuses[-1] == NONEMPTY
