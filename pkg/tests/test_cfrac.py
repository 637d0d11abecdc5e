import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brjuno import (CFKind, DomainError, expand, farey_parents,
                    rational_depth)

KINDS = [CFKind.GAUSS, CFKind.BY_EXCESS, CFKind.NEAREST_INTEGER]

SQRT2M1 = math.sqrt(2) - 1


@pytest.mark.parametrize("kind", KINDS)
def test_convergent_determinant_is_unimodular(kind):
    e = expand(Fraction(355, 1130), kind, 40)
    cv = [(1, 0)] + list(e.convergents)
    for (pp, qp), (p, q) in zip(cv, cv[1:]):
        assert abs(p * qp - pp * q) == 1


@pytest.mark.parametrize("kind", KINDS)
def test_beta_equals_linear_form(kind):
    x = Fraction(2971, 10007)
    e = expand(x, kind, 60)
    for (p, q), beta in zip(e.convergents[1:], e.betas[1:]):
        assert abs(q * e.seed_x - p) == beta


@pytest.mark.parametrize("kind", KINDS)
def test_float_expansion_matches_exact_prefix(kind):
    x = Fraction(2971, 10007)
    ee = expand(x, kind, 8)
    ef = expand(float(x), kind, 8)
    n = min(len(ee.digits), len(ef.digits))
    if ee.terminated or ef.terminated:
        n -= 1  # the final digit of a rational tail has two representations
    assert n >= 5
    assert ee.digits[:n] == ef.digits[:n]
    assert ee.convergents[:n + 1] == ef.convergents[:n + 1]


def test_nearest_integer_beta_contraction():
    # |beta_N| <= (sqrt(2)-1)^N / 2 along the nearest-integer expansion
    for x in (Fraction(2971, 10007), Fraction(1234, 56789)):
        e = expand(x, CFKind.NEAREST_INTEGER, 50)
        for n, beta in enumerate(e.betas[1:], start=1):
            assert beta <= Fraction(1, 2) * Fraction(SQRT2M1 + 1e-12) ** n


def test_by_excess_complements_gauss_step():
    for num in range(1, 40):
        x = Fraction(num, 41)
        eg = expand(x, CFKind.GAUSS, 1)
        eb = expand(x, CFKind.BY_EXCESS, 1)
        if eg.iterates[1] == 0:
            continue
        assert eb.iterates[1] == 1 - eg.iterates[1]
        assert eb.digits[0][0] == eg.digits[0][0] + 1


def test_terminates_at_rational_depth():
    for p, q in ((3, 8), (2, 5), (1, 7), (5, 12)):
        e = expand(Fraction(p, q), CFKind.NEAREST_INTEGER, 30)
        assert e.terminated
        assert rational_depth(p, q) == len(e.digits)


def test_rational_depth_values():
    assert rational_depth(1, 2) == 1
    assert rational_depth(1, 3) == 1
    assert rational_depth(2, 5) == 2
    with pytest.raises(DomainError):
        rational_depth(2, 4)
    with pytest.raises(DomainError):
        rational_depth(3, 4)  # outside (0, 1/2]


def test_near_rational_flag_for_double_input():
    e = expand(0.375, CFKind.GAUSS, 30)
    assert e.terminated or e.near_rational
    assert e.final_fraction() == (3, 8)


def test_farey_parents_mediant():
    for q in range(2, 60):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            t = farey_parents(p, q)
            t.check()
            assert t.p1 + t.p2 == p and t.q1 + t.q2 == q
            assert t.p1 * q < p * t.q1 or t.q1 == 0
            assert p * t.q2 < t.p2 * q


def test_farey_parents_integer_convention():
    t = farey_parents(3, 1)
    assert (t.p1, t.q1, t.p2, t.q2) == (2, 1, 1, 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 400), st.integers(2, 400))
def test_expansion_reconstructs_rational(num, den):
    g = math.gcd(num, den)
    p, q = num // g, den // g
    if p >= q:
        p %= q
        if p == 0:
            return
    x = Fraction(p, q)
    for kind in KINDS:
        e = expand(x, kind, 10000)
        assert e.terminated
        assert e.final_fraction() == (p, q)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.001, 0.999))
def test_float_beta_positive_decreasing(x):
    e = expand(x, CFKind.GAUSS, 25)
    b = [float(v) for v in e.betas if v > 0]
    assert all(b2 < b1 for b1, b2 in zip(b, b[1:]))
