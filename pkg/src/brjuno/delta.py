"""The defect functions Delta+ and Delta-.

Delta+(x) = B+(x) - 2*B0+(x) extends to a Holder-continuous function;
Delta-(x) = W-(x) - 2*B0-(x) is continuous off the rationals but jumps
by 2/q at every reduced p/q.  Besides direct evaluation this module
provides the signed nearest-integer series for Delta-, one-sided jump
measurement at rationals, a scaling-based Holder exponent estimator and
the popcorn function for qualitative comparison.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from ._numctx import ctx_for, working_precision
from .cfrac import CFKind, expand, rational_depth
from .errors import DomainError, RationalInputError
from .realfuncs import (DEFAULT_CONFIG, b_minus_ext, brjuno, f_func, frac,
                        semi_brjuno, w_plus_ext, wilton)

_JITTER = (math.sqrt(5.0) - 2.0) * 1e-2  # irrationalizing offset fudge


@dataclass(frozen=True)
class JumpReport:
    p: int
    q: int
    depth: int
    left_limit: float
    right_limit: float
    jump: float
    expected: float
    offset_used: float


@dataclass(frozen=True)
class HolderReport:
    exponent_estimate: float
    scales: tuple
    moduli: tuple
    fit_residual: float
    degenerate: bool = False


def delta_plus(x, cfg=DEFAULT_CONFIG):
    """B+(x) - 2*B0+(x), with B+ = B - (closed-form odd part)."""
    with working_precision(x):
        u = frac(x)
        b_plus = brjuno(u, cfg).value - b_minus_ext(u)
        two_b0_plus = semi_brjuno(u, cfg).value + semi_brjuno(1 - u, cfg).value
        return b_plus - two_b0_plus


def delta_minus_direct(x, cfg=DEFAULT_CONFIG):
    """W-(x) - B0(x) + B0(1-x), evaluated from the three series directly."""
    with working_precision(x):
        u = frac(x)
        w_minus = wilton(u, cfg).value - w_plus_ext(u)
        return w_minus - semi_brjuno(u, cfg).value + semi_brjuno(1 - u, cfg).value


def delta_minus_series(x, M=40, cfg=DEFAULT_CONFIG):
    """Partial sum Delta-_M via the signed nearest-integer expansion.

    Terms (-1)^i * (eps_0 x_0 ... eps_{i-1} x_{i-1}) * f~(eps_i x_i) for
    i = 0..M.  Rational inputs use the digits available before the
    expansion terminates, which is what the one-sided limit machinery
    needs.
    """
    if M < 1:
        raise DomainError("M must be >= 1")
    with working_precision(x):
        u = frac(x)
        if u == 0:
            return u * 0
        if u > 0.5:
            return -_dm_series_half(1 - u, M)
        return _dm_series_half(u, M)


def _dm_series_half(x, M):
    """Series on the fundamental domain x in (0, 1/2]."""
    ctx = ctx_for(x)
    tiny = ctx.tiny
    total = x * 0
    beta_prev = 1 + x * 0
    sgn = 1
    eps_i, x_i = 1, x
    for _ in range(M + 1):
        ft = x_i * 0 if x_i == 0.5 else f_func(x_i)
        total += sgn * beta_prev * (eps_i * ft)
        y = 1 / x_i
        a = ctx.floor(y + 0.5)
        r = y - a
        eps_next = 1 if r > 0 else (-1 if r < 0 else 0)
        x_next = abs(r)
        beta_prev = beta_prev * (eps_i * x_i)
        sgn = -sgn
        if eps_next == 0 or x_next <= tiny:
            break
        eps_i, x_i = eps_next, x_next
    return total


_DEFAULT_OFFSETS = (1e-4, 1e-5, 1e-6, 1e-7)


def jump_at(p, q, offsets=_DEFAULT_OFFSETS, M=40, cfg=DEFAULT_CONFIG):
    """Measure the jump of Delta- at the reduced rational p/q in (0, 1/2).

    Evaluates the truncated series on both sides at decreasing offsets
    (with an irrationalizing jitter) and extrapolates linearly to 0 from
    the two smallest offsets.  The theorem predicts right - left = 2/q.
    """
    p, q = int(p), int(q)
    if math.gcd(p, q) != 1 or not 0 < Fraction(p, q) < Fraction(1, 2):
        raise DomainError("need reduced p/q in (0, 1/2)")
    offs = sorted(float(d) for d in offsets)
    if len(offs) < 2:
        raise DomainError("need at least two offsets")
    if offs[-1] >= 1.0 / (4.0 * q * q):
        raise DomainError(
            f"offset {offs[-1]} too large for denominator {q}: "
            f"may cross a neighboring low-denominator rational")
    depth = rational_depth(p, q)
    x0 = p / q
    left_vals, right_vals = [], []
    for d in offs:
        eff = d * (1.0 + _JITTER)
        left_vals.append(float(delta_minus_series(x0 - eff, M, cfg)))
        right_vals.append(float(delta_minus_series(x0 + eff, M, cfg)))

    def extrap(vals):
        v1, v2 = vals[0], vals[1]
        d1, d2 = offs[0], offs[1]
        return v1 + (v1 - v2) * d1 / (d2 - d1)

    left = extrap(left_vals)
    right = extrap(right_vals)
    return JumpReport(p, q, depth, left, right, right - left, 2.0 / q, offs[0])


def holder_estimate(F, interval, scales, n_pairs=400, seed=0, centers=None):
    """Estimate a Holder exponent from the scaling of a median modulus.

    For each scale h the modulus is the median of |F(x+h) - F(x)| over
    ``n_pairs`` pairs; the exponent is the slope of log(modulus) against
    log(scale).  With ``centers`` given (e.g. rationals), every pair
    straddles one of the centers, which exposes jump discontinuities.
    The median (not the max) is used so near-rational blowups of the
    underlying functions do not dominate.
    """
    lo, hi = float(interval[0]), float(interval[1])
    if not lo < hi:
        raise DomainError("empty interval")
    scales = sorted((float(h) for h in scales), reverse=True)
    if scales[0] >= hi - lo:
        raise DomainError("largest scale exceeds the interval")
    rng = np.random.default_rng(seed)
    moduli = []
    for h in scales:
        diffs = []
        attempts = 0
        while len(diffs) < n_pairs:
            attempts += 1
            if attempts > 20 * n_pairs:
                raise DomainError("too few valid samples per scale")
            if centers is not None:
                c = float(centers[rng.integers(len(centers))])
                x = c - h * rng.uniform(0.05, 0.95)
            else:
                x = lo + (hi - lo - h) * rng.uniform()
            try:
                diffs.append(abs(F(x + h) - F(x)))
            except RationalInputError:
                continue
        moduli.append(float(np.median(diffs)))
    logs = np.log(np.asarray(scales))
    logm_raw = np.asarray(moduli)
    degenerate = bool(np.any(logm_raw < 1e-13))
    if degenerate:
        return HolderReport(float("nan"), tuple(scales), tuple(moduli),
                            float("nan"), degenerate=True)
    logm = np.log(logm_raw)
    slope, intercept = np.polyfit(logs, logm, 1)
    resid = float(np.sqrt(np.mean((logm - (slope * logs + intercept)) ** 2)))
    return HolderReport(float(slope), tuple(scales), tuple(moduli), resid)


def popcorn(x):
    """1/q at rationals p/q (detected at working precision), 0 at irrationals."""
    if isinstance(x, Rational):
        return 1.0 / Fraction(x).denominator
    e = expand(x, CFKind.GAUSS, 64)
    if e.terminated or e.near_rational:
        _, den = e.final_fraction()
        return 1.0 / den
    return 0.0
