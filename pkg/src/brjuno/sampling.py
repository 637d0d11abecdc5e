"""Seeded sampling plans and empirical defect reports.

Samples are drawn with numpy's default_rng (PCG64, portable and
seedable) by rejection against a rational-exclusion rule: no sample
may fall within exclusion_radius_scale / q**2 of any reduced p/q with
q <= exclusion_q.  That keeps the unbounded functions evaluable and
makes every figure's point cloud reproducible from (n, interval, seed).
"""

import math
from dataclasses import dataclass

import numpy as np

from .delta import delta_minus_direct, delta_plus
from .errors import DomainError, RationalInputError
from .realfuncs import DEFAULT_CONFIG


@dataclass(frozen=True)
class SamplePlan:
    n: int
    interval: tuple = (0.0, 1.0)
    seed: int = 0
    exclusion_q: int = 50
    exclusion_radius_scale: float = 1e-4

    def __post_init__(self):
        lo, hi = self.interval
        if self.n < 1 or not lo < hi:
            raise DomainError("invalid SamplePlan")
        if self.exclusion_q < 1 or self.exclusion_radius_scale <= 0:
            raise DomainError("invalid exclusion rule")


@dataclass(frozen=True)
class DefectReport:
    function_pair: str
    n: int
    sup_abs: float
    mean_abs: float
    argmax: float
    seed: int

    def __post_init__(self):
        if not self.sup_abs >= self.mean_abs >= 0.0:
            raise DomainError("inconsistent DefectReport")


def near_excluded_rational(x, exclusion_q=50, scale=1e-4):
    """True when x is within scale/q^2 of some reduced p/q, q <= exclusion_q."""
    for q in range(1, exclusion_q + 1):
        p = round(x * q)
        if math.gcd(int(p), q) == 1 and abs(x - p / q) < scale / (q * q):
            return True
    return False


def sample_points(plan):
    """Deterministic array of plan.n samples respecting the exclusion rule.

    The stream is consumed in fixed order (rejection included), so the
    output depends only on the plan, never on evaluation order or
    thread count downstream.
    """
    rng = np.random.default_rng(plan.seed)
    lo, hi = plan.interval
    out = []
    attempts = 0
    while len(out) < plan.n:
        attempts += 1
        if attempts > 1000 * plan.n + 1000:
            raise DomainError("exclusion rule rejects almost everything")
        x = lo + (hi - lo) * rng.random()
        if not near_excluded_rational(x, plan.exclusion_q, plan.exclusion_radius_scale):
            out.append(x)
    return np.asarray(out)


_PAIRS = {
    "B-2B0+": delta_plus,
    "W-2B0-": delta_minus_direct,
}


def defect_report(function_pair, plan, cfg=DEFAULT_CONFIG):
    """Empirical sup/mean of a bounded-defect combination over a plan.

    ``function_pair`` is 'B-2B0+' (Theorem 1, plus part) or 'W-2B0-'
    (minus part).  Samples whose evaluation detects a rational at
    working precision are skipped; they do not count toward n.
    """
    if function_pair not in _PAIRS:
        raise DomainError(f"unknown function pair {function_pair!r}")
    f = _PAIRS[function_pair]
    xs = sample_points(plan)
    sup = -1.0
    acc = 0.0
    argmax = float("nan")
    used = 0
    for x in xs:
        try:
            v = abs(float(f(float(x), cfg)))
        except RationalInputError:
            continue
        used += 1
        acc += v
        if v > sup:
            sup, argmax = v, float(x)
    if used == 0:
        raise DomainError("no evaluable samples in plan")
    return DefectReport(function_pair, used, sup, acc / used, argmax, plan.seed)
