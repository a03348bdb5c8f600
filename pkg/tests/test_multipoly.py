import random
from fractions import Fraction

import pytest

from nullsol.gaussian import GaussianRational
from nullsol.multipoly import NEG_INF, MultiPoly, grlex_key

from helpers import random_multipoly, random_point


def P(nvars, terms):
    return MultiPoly(nvars, terms)


def test_canonical_no_zero_terms():
    p = P(2, {(1, 0): 1, (0, 1): 0})
    assert list(p.terms) == [(1, 0)]
    q = P(2, {(1, 0): 1}) - P(2, {(1, 0): 1})
    assert q.is_zero()
    assert q == MultiPoly.zero(2)


def test_add_sub_examples():
    x = MultiPoly.variable(2, 0)
    t = MultiPoly.variable(2, 1)
    assert (x + t) + (x - t) == x.scale(2)
    assert x + MultiPoly.zero(2) == x


def test_mul_examples():
    x = MultiPoly.variable(1, 0)
    one = MultiPoly.constant(1, 1)
    assert (x + one) * (x - one) == x * x - one
    i = MultiPoly.constant(1, GaussianRational(0, 1))
    assert i * i == MultiPoly.constant(1, -1)


def test_pow():
    x = MultiPoly.variable(1, 0)
    one = MultiPoly.constant(1, 1)
    assert (x + one) ** 3 == x ** 3 + (x * x).scale(3) + x.scale(3) + one
    assert x ** 0 == one


def test_degrees():
    assert MultiPoly.zero(3).total_degree() == NEG_INF
    p = P(3, {(3, 0, 2): 1, (0, 0, 1): 5})
    assert p.total_degree() == 5
    assert p.degree_in(0) == 3
    assert p.degree_in(1) == 0
    assert p.degree_in(2) == 2


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) + MultiPoly.variable(3, 0)
    with pytest.raises(ValueError):
        P(2, {(1,): 1})
    with pytest.raises(ValueError):
        P(1, {(-1,): 1})


def test_evaluate_examples():
    p = P(2, {(2, 0): 1, (0, 1): -1})  # X1^2 - T
    assert p.evaluate([Fraction(3), Fraction(9)]).is_zero()
    v = p.evaluate([GaussianRational(0, 1), GaussianRational(0)])
    assert v == GaussianRational(-1)
    with pytest.raises(ValueError):
        p.evaluate([Fraction(1)])


def test_partial_derivative():
    p = P(2, {(2, 1): 3, (0, 1): 1})  # 3*X1^2*T + T
    assert p.partial_derivative(0) == P(2, {(1, 1): 6})
    assert p.partial_derivative(1) == P(2, {(2, 0): 3, (0, 0): 1})
    with pytest.raises(ValueError):
        p.partial_derivative(5)


def test_coefficients_in_T():
    # T - (X1^2 + X2^2): a0 = -(X1^2+X2^2), a1 = 1
    p = P(3, {(0, 0, 1): 1, (2, 0, 0): -1, (0, 2, 0): -1})
    a = p.coefficients_in_T()
    assert len(a) == 2
    assert a[0] == P(2, {(2, 0): -1, (0, 2): -1})
    assert a[1] == MultiPoly.constant(2, 1)
    # X1*X2*T: interior zero a0 retained
    q = P(3, {(1, 1, 1): 1})
    b = q.coefficients_in_T()
    assert len(b) == 2
    assert b[0].is_zero()
    assert b[1] == P(2, {(1, 1): 1})
    assert MultiPoly.zero(3).coefficients_in_T() == []


def test_coefficients_in_T_reconstruction_random():
    rng = random.Random(7)
    t = MultiPoly.variable(3, 2)
    for _ in range(100):
        p = random_multipoly(rng, 3, max_deg=4)
        coeffs = p.coefficients_in_T()
        acc = MultiPoly.zero(3)
        for k, a in enumerate(coeffs):
            lifted = MultiPoly(3, {e + (0,): c for e, c in a.terms.items()})
            acc = acc + lifted * t ** k
        assert acc == p
        if coeffs:
            assert not coeffs[-1].is_zero()


def test_drop_unused_last_var():
    p = P(2, {(2, 0): 1})
    assert p.drop_unused_last_var() == P(1, {(2,): 1})
    with pytest.raises(ValueError):
        P(2, {(0, 1): 1}).drop_unused_last_var()


def test_grlex_key_order():
    exps = [(0, 2), (1, 0), (2, 0), (0, 0), (1, 1)]
    assert sorted(exps, key=grlex_key) == [(0, 0), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_immutability_and_hash():
    p = P(2, {(1, 0): 1})
    with pytest.raises(AttributeError):
        p.nvars = 3
    q = P(2, {(1, 0): Fraction(2, 2)})
    assert hash(p) == hash(q) and p == q


def test_ring_laws_random():
    rng = random.Random(11)
    for _ in range(200):
        a = random_multipoly(rng, 2)
        b = random_multipoly(rng, 2)
        c = random_multipoly(rng, 2)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == MultiPoly.zero(2)


def test_eval_homomorphism_random():
    rng = random.Random(13)
    for _ in range(200):
        a = random_multipoly(rng, 2)
        b = random_multipoly(rng, 2)
        pt = random_point(rng, 2, height=4)
        assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)
        assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)


def test_degree_multiplicative_random():
    rng = random.Random(17)
    for _ in range(100):
        a = random_multipoly(rng, 2)
        b = random_multipoly(rng, 2)
        if a.is_zero() or b.is_zero():
            assert (a * b).total_degree() == NEG_INF
        else:
            assert (a * b).total_degree() == a.total_degree() + b.total_degree()
