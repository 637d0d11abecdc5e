import itertools
import math
import random

import mpmath
import pytest

from brjuno import (CFKind, DomainError, PeriodicCF, RationalInputError,
                    brjuno, closed_form_B, periodic_value, recheck,
                    semi_brjuno, wilton)


def test_periodic_value_known_surds():
    g = periodic_value(PeriodicCF(CFKind.GAUSS, period=(1,)))
    assert abs(float(g) - (math.sqrt(5) - 1) / 2) < 1e-15
    s = periodic_value(PeriodicCF(CFKind.GAUSS, period=(2,)))
    assert abs(float(s) - (math.sqrt(2) - 1)) < 1e-15
    b = periodic_value(PeriodicCF(CFKind.BY_EXCESS, period=(3,)))
    assert abs(float(b) - (3 - math.sqrt(5)) / 2) < 1e-15
    n = periodic_value(PeriodicCF(CFKind.NEAREST_INTEGER, period=((2, 1),)))
    assert abs(float(n) - (math.sqrt(2) - 1)) < 1e-15


def test_preperiod_applies():
    # [0; 2, 1, 1, 1, ...] = 1/(2 + g)
    g = (math.sqrt(5) - 1) / 2
    v = periodic_value(PeriodicCF(CFKind.GAUSS, preperiod=(2,), period=(1,)))
    assert abs(float(v) - 1 / (2 + g)) < 1e-15


def test_closed_form_matches_recheck_on_grid():
    # every purely periodic Gauss expansion with period <= 2, digits <= 4
    periods = [(a,) for a in range(1, 5)]
    periods += [(a, b) for a in range(1, 5) for b in range(1, 5)]
    for per in periods:
        p = PeriodicCF(CFKind.GAUSS, period=per)
        # recheck needs the input accurate to twice the target precision:
        # an x known to b bits only determines the series value to ~b/2
        x = periodic_value(p, 2 * 128 + 16)
        for which in ("brjuno", "wilton"):
            cf = closed_form_B(p, which, 128)
            rc = recheck(x, which, 128)
            assert abs(float(cf - rc)) < 1e-30


def test_closed_form_matches_recheck_by_excess():
    for per in [(3,), (4,), (5,), (3, 4), (4, 2), (2, 3)]:
        p = PeriodicCF(CFKind.BY_EXCESS, period=per)
        x = periodic_value(p, 2 * 128 + 16)
        cf = closed_form_B(p, "semi", 128)
        rc = recheck(x, "semi", 128)
        assert abs(float(cf - rc)) < 1e-30


def test_high_precision_agreement():
    # at 256 bits, closed form and recheck agree far below 1e-50
    p = PeriodicCF(CFKind.GAUSS, preperiod=(3, 2), period=(1, 2))
    x = periodic_value(p, 2 * 256 + 16)
    with mpmath.workprec(300):
        diff = abs(closed_form_B(p, "brjuno", 256) - recheck(x, "brjuno", 256))
        assert diff < mpmath.mpf(10) ** -50


def test_invalid_expansions_rejected():
    with pytest.raises(DomainError):
        PeriodicCF(CFKind.GAUSS, period=())
    with pytest.raises(DomainError):
        PeriodicCF(CFKind.GAUSS, period=(0,))
    with pytest.raises(DomainError):
        PeriodicCF(CFKind.BY_EXCESS, period=(1,))
    with pytest.raises(DomainError):
        PeriodicCF(CFKind.NEAREST_INTEGER, period=((2, -1),))
    with pytest.raises(DomainError):
        # the constant by-excess digit 2 fixes 1, outside the open domain
        closed_form_B(PeriodicCF(CFKind.BY_EXCESS, period=(2,)), "semi")


def test_recheck_rejects_rationals():
    with pytest.raises(RationalInputError):
        recheck(0.375, "brjuno", 64)


def test_double_series_tail_bounds_are_honest():
    # |double-precision value - high-precision recheck| <= reported bound
    rng = random.Random(31)
    checked = 0
    while checked < 40:
        x = rng.random()
        try:
            r = brjuno(x)
            ref = recheck(x, "brjuno", 128)
        except RationalInputError:
            continue
        checked += 1
        assert abs(float(r.value) - float(ref)) <= r.tail_bound + 1e-10


def test_recheck_semi_brjuno_tail_bound():
    rng = random.Random(32)
    checked = 0
    while checked < 12:
        x = rng.random()
        try:
            r = semi_brjuno(x)
            ref = recheck(x, "semi", 128)
        except RationalInputError:
            continue
        except DomainError:
            # recheck iterates the by-excess map literally and gives up on
            # orbits that crawl past its term budget near the fixed point
            continue
        checked += 1
        assert abs(float(r.value) - float(ref)) <= r.tail_bound + 1e-10
