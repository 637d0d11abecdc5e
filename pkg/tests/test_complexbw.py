import math

import numpy as np
import pytest

from brjuno import (DomainError, TruncationPlan, brjuno, complex_brjuno,
                    complex_semi, complex_wilton, enumerate_fractions,
                    term_contributions, wilton)


def test_upper_half_plane_only():
    plan = TruncationPlan(q_max=20)
    with pytest.raises(DomainError):
        complex_brjuno(0.5, plan)
    with pytest.raises(DomainError):
        complex_wilton(complex(0.5, -0.1), plan)
    with pytest.raises(DomainError):
        TruncationPlan(q_max=0)


def test_enumerated_fractions_are_reduced_with_valid_parents():
    plan = TruncationPlan(q_max=25, window=2.0)
    seen = set()
    for t in enumerate_fractions(plan, center=0.5):
        assert math.gcd(t.p % t.q if t.q > 1 else 1, t.q) == 1
        t.check()
        key = (t.p, t.q)
        assert key not in seen
        seen.add(key)
        assert abs(t.p / t.q - 0.5) <= 2.0


def test_semi_is_half_sum_term_by_term():
    plan = TruncationPlan(q_max=40, window=2.0)
    z = complex(0.3319, 0.21)
    worst = 0.0
    for t in term_contributions(z, plan):
        worst = max(worst, abs(0.5 * (t.value_b + t.value_w) - t.value_semi))
    assert worst < 1e-12


def test_totals_match_term_sums():
    plan = TruncationPlan(q_max=30, window=2.0)
    z = complex(0.77, 0.4)
    terms = term_contributions(z, plan)
    tb = sum(t.value_b for t in terms)
    tw = sum(t.value_w for t in terms)
    ts = sum(t.value_semi for t in terms)
    assert abs(tb - complex_brjuno(z, plan)) < 1e-12
    assert abs(tw - complex_wilton(z, plan)) < 1e-12
    assert abs(ts - complex_semi(z, plan)) < 1e-12


def test_translation_invariance():
    plan = TruncationPlan(q_max=50, window=3.0)
    z = complex(0.37, 0.15)
    for shift in (1.0, -2.0, 5.0):
        assert abs(complex_brjuno(z, plan)
                   - complex_brjuno(z + shift, plan)) < 1e-12


def test_imaginary_part_approaches_brjuno_on_boundary():
    x = (math.sqrt(5) - 1) / 2
    plan = TruncationPlan(q_max=400)
    b = brjuno(x).value
    gaps = [abs(complex_brjuno(complex(x, y), plan).imag - b)
            for y in (1e-1, 1e-2, 1e-3)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 0.2


def test_imaginary_part_approaches_wilton_on_boundary():
    x = (math.sqrt(5) - 1) / 2
    plan = TruncationPlan(q_max=400)
    w = wilton(x).value
    v = complex_wilton(complex(x, 1e-3), plan)
    assert abs(v.imag - w) < 0.02


def test_determinism():
    plan = TruncationPlan(q_max=120)
    z = complex(0.123, 0.05)
    assert complex_brjuno(z, plan) == complex_brjuno(z, plan)
