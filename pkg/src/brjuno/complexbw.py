"""Complex Brjuno and Wilton functions on the upper half-plane.

Both are evaluated as truncated sums of dilogarithm terms over reduced
fractions p/q with their Farey parents p1/q1 < p/q < p2/q2.  The sum
runs over all of Q: restricting it to one period does not reproduce
the boundary values (the slowly decaying left/right tails around Re z
cancel only pairwise), so fractions are kept for every denominator
q <= q_max within ``window`` of Re z on the real line.  The
combination (B + W)/2 cancels the left-parent dilogarithm bracket term
by term, which doubles as the internal consistency check of the two
formulas.

Terms are accumulated in (q, p) order with numpy's pairwise summation,
so results are reproducible.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cfrac import FareyTriple, farey_parents
from .dilog import li2
from .errors import DomainError


@dataclass(frozen=True)
class TruncationPlan:
    q_max: int
    window: float = 10.0

    def __post_init__(self):
        if self.q_max < 1 or self.window < 1.0:
            raise DomainError("invalid TruncationPlan")


@dataclass(frozen=True)
class TermContribution:
    """Per-fraction contribution (already scaled by -1/pi) to B, W and (B+W)/2."""
    farey: object
    value_b: complex
    value_w: complex
    value_semi: complex


@lru_cache(maxsize=4096)
def _reduced_parents(q):
    """Farey parents of every reduced p/q with 0 <= p < q, as arrays."""
    rows = []
    for p in range(q) if q > 1 else [0]:
        if math.gcd(p, q) != 1:
            continue
        t = farey_parents(p, q)
        rows.append((p, t.p1, t.q1, t.p2, t.q2))
    a = np.asarray(rows, dtype=float)
    return a[:, 0], a[:, 1], a[:, 2], a[:, 3], a[:, 4]


def _fraction_arrays(q, center, window):
    """Arrays (p, p1, q1, p2, q2) for all kept fractions with denominator q.

    Fractions are the translates (p_r + k*q)/q of the reduced ones;
    parents translate with them, preserving mediant and determinant.
    """
    pr, p1, q1, p2, q2 = _reduced_parents(q)
    ks = np.arange(math.floor(center - window), math.ceil(center + window) + 1)
    p = pr[None, :] + q * ks[:, None]
    keep = np.abs(p / q - center) <= window
    kq1 = ks[:, None] * q1[None, :]
    kq2 = ks[:, None] * q2[None, :]
    return (p[keep],
            (p1[None, :] + kq1)[keep], np.broadcast_to(q1, p.shape)[keep],
            (p2[None, :] + kq2)[keep], np.broadcast_to(q2, p.shape)[keep])


def enumerate_fractions(plan, center=0.0):
    """FareyTriples for all kept fractions, sorted by (q, p).

    Materializes one object per fraction; intended for diagnostics and
    the term-cancellation tests at small q_max.
    """
    c = float(center)
    out = []
    for q in range(1, plan.q_max + 1):
        p, p1, q1, p2, q2 = _fraction_arrays(q, c, plan.window)
        for i in range(len(p)):
            out.append(FareyTriple(int(p[i]), q, int(p1[i]), int(q1[i]),
                                   int(p2[i]), int(q2[i])))
    return out


def _term_arrays(z, p, q, p1, q1, p2, q2):
    """Vectorized per-fraction contributions; returns (b, w, semi) arrays."""
    denom = q * z - p
    a1 = p1 - q1 * z
    a2 = p2 - q2 * z
    br1 = li2(a1 / denom) - li2(-q1 / q)
    br2 = li2(a2 / denom) - li2(-q2 / q)
    right = a2 * br2
    left = a1 * br1
    tb = left + right + np.log((q + q2) / (q + q1)) / q
    tw = -left + right + np.log((q + q1) * (q + q2) / (q * q)) / q
    ts = right + np.log((q + q2) / q) / q
    scale = -1.0 / math.pi
    return scale * tb, scale * tw, scale * ts


def _prepare(z, plan):
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("argument must lie in the upper half-plane")
    # the full sum is invariant under z -> z + 1 (fractions translate)
    return complex(z.real % 1.0, z.imag)


def _sums(z, plan):
    zr = _prepare(z, plan)
    tb = tw = ts = 0.0 + 0.0j
    for q in range(1, plan.q_max + 1):
        p, p1, q1, p2, q2 = _fraction_arrays(q, zr.real, plan.window)
        b, w, s = _term_arrays(zr, p, float(q), p1, q1, p2, q2)
        tb += np.sum(b)
        tw += np.sum(w)
        ts += np.sum(s)
    return complex(tb), complex(tw), complex(ts)


def complex_brjuno(z, plan):
    """Truncated complex Brjuno function; Im converges to B(Re z) as Im z -> 0."""
    return _sums(z, plan)[0]


def complex_wilton(z, plan):
    """Truncated complex Wilton function."""
    return _sums(z, plan)[1]


def complex_semi(z, plan):
    """Truncated (B + W)/2; per term the left-parent bracket cancels exactly."""
    return _sums(z, plan)[2]


def term_contributions(z, plan):
    """Per-fraction TermContributions (diagnostics and cancellation tests)."""
    zr = _prepare(z, plan)
    out = []
    for q in range(1, plan.q_max + 1):
        p, p1, q1, p2, q2 = _fraction_arrays(q, zr.real, plan.window)
        b, w, s = _term_arrays(zr, p, float(q), p1, q1, p2, q2)
        for i in range(len(p)):
            t = FareyTriple(int(p[i]), q, int(p1[i]), int(q1[i]),
                            int(p2[i]), int(q2[i]))
            out.append(TermContribution(t, complex(b[i]), complex(w[i]),
                                        complex(s[i])))
    return out
