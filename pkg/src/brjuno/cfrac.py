"""Continued-fraction expansions under three interval maps.

Supported maps:

* Gauss map            ``x -> frac(1/x)``            (regular CF, digits >= 1)
* by-excess map        ``x -> floor(1/x + 1) - 1/x`` (minus CF, digits >= 2)
* nearest-integer map  ``x -> |1/x - round(1/x)|``   (signed digits, |eps| = 1)

Expansions carry the iterates, the signed digits, the integer
convergents P_i/Q_i and the products beta_i = x_0 x_1 ... x_i, which
satisfy beta_i = |Q_i x_0 - P_i|.

Two arithmetic modes: `fractions.Fraction` inputs are iterated exactly
(all integer facts, terminating at the rational's depth); float /
gmpy2.mpfr / mpmath.mpf inputs are iterated in that type's precision
with a snapping guard at the maps' discontinuities.
"""

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from ._numctx import ctx_for, working_precision
from .errors import DomainError

DIGIT_CAP = 10 ** 15


class CFKind(enum.Enum):
    GAUSS = "gauss"
    BY_EXCESS = "by_excess"
    NEAREST_INTEGER = "nearest_integer"


@dataclass(frozen=True)
class CFExpansion:
    """One continued-fraction expansion together with its derived data.

    ``digits[i-1] = (a_i, eps_i)`` produces ``convergents[i] = (P_i, Q_i)``;
    ``iterates[i]`` is x_i with ``iterates[0]`` the reduced seed, and
    ``betas[i] = x_0 * ... * x_i``.  ``terminated`` is True only when some
    iterate is exactly zero (rational fully expanded); ``near_rational``
    flags a floating seed indistinguishable from a rational at working
    precision.
    """

    kind: CFKind
    seed_x: object
    a0: int
    eps0: int
    digits: tuple
    iterates: tuple
    convergents: tuple
    betas: tuple
    terminated: bool
    near_rational: bool = False
    boundary_ambiguous: bool = False

    @property
    def depth(self):
        return len(self.digits)

    def final_fraction(self):
        """The rational represented by the deepest convergent, including a0."""
        p, q = self.convergents[-1]
        # a by-excess expansion may terminate at iterate exactly 1 (the
        # map's other fixed endpoint); fold that tail into the convergent
        if (self.kind is CFKind.BY_EXCESS and self.terminated
                and len(self.convergents) >= 2 and self.iterates[-1] == 1):
            pp, qp = self.convergents[-2]
            p, q = p - pp, q - qp
        num = self.a0 * q + self.eps0 * p
        g = math.gcd(num, q)
        return num // g, q // g


@dataclass(frozen=True)
class FareyTriple:
    """A reduced fraction p/q with its Farey parents p1/q1 < p/q < p2/q2."""

    p: int
    q: int
    p1: int
    q1: int
    p2: int
    q2: int

    def check(self):
        assert self.p == self.p1 + self.p2 and self.q == self.q1 + self.q2
        assert self.p2 * self.q1 - self.p1 * self.q2 == 1


def _seed(x, kind, ctx=None):
    """Reduce x to the map's domain; returns (a0, eps0, x0)."""
    floor = math.floor if ctx is None else ctx.floor
    if kind is CFKind.NEAREST_INTEGER:
        a0 = floor(x + type(x)(1) / 2) if isinstance(x, Rational) else floor(x + 0.5)
        d = x - a0
        eps0 = 1 if d > 0 else (-1 if d < 0 else 0)
        return int(a0), eps0, abs(d)
    a0 = floor(x)
    return int(a0), 1, x - a0


def _step_exact(x, kind):
    """One exact map step on a Fraction; returns (a, eps, x_next)."""
    y = 1 / x
    if kind is CFKind.GAUSS:
        a = y.__floor__()
        return int(a), 1, y - a
    if kind is CFKind.BY_EXCESS:
        a = y.__floor__() + 1 if y.denominator != 1 else int(y) + 1
        return int(a), -1, a - y
    a = (y + Fraction(1, 2)).__floor__()
    r = y - a
    eps = 1 if r > 0 else (-1 if r < 0 else 0)
    return int(a), eps, abs(r)


# ceiling on the forward-error guard: beyond this the orbit has decohered
# anyway and snapping would misclassify genuinely small iterates
_GUARD_CAP = 1e-8


def _step_float(x, kind, ctx, xerr=0.0):
    """One map step with a discontinuity guard.

    Returns (a, eps, x_next, snapped, xerr_next).  ``xerr`` is a running
    forward-error bound on the iterate: each step amplifies it by
    (1/x)^2 and adds the division roundoff, so the guard widens with
    depth instead of staying at a fixed few ulp.  When 1/x lies within
    the guard of the map's discontinuity the digit is snapped to the
    boundary value and the expansion is flagged boundary-ambiguous.
    """
    y = 1 / x
    yf = float(y)
    rerr = xerr * yf * yf + 4.0 * float(ctx.eps) * abs(yf)
    guard = min(rerr, _GUARD_CAP)
    if kind is CFKind.NEAREST_INTEGER:
        a = ctx.floor(y + type(y)(1) / 2) if not isinstance(y, float) else math.floor(y + 0.5)
        r = y - a
        if abs(r) < guard:
            return int(a), 0, y * 0, True, 0.0  # rational at precision
        eps = 1 if r > 0 else -1
        return int(a), eps, abs(r), False, rerr
    n = ctx.floor(y)
    r = y - n
    snapped = False
    if r < guard:            # 1/x just above an integer
        r = y * 0
        snapped = True
    elif 1 - r < guard:      # 1/x just below an integer
        n = n + 1
        r = y * 0
        snapped = True
    if kind is CFKind.GAUSS:
        return int(n), 1, r, snapped, 0.0 if snapped else rerr
    # by-excess: digit floor(1/x + 1), iterate a - 1/x = 1 - r
    if snapped:
        return int(n), -1, r, True, 0.0  # exact reciprocal of an integer: stop here
    return int(n) + 1, -1, 1 - r, False, rerr


def expand(x, kind, max_depth):
    """Expand ``x`` under the chosen map up to ``max_depth`` digits.

    Fraction inputs are expanded exactly and terminate at the rational's
    depth; floating inputs stop early (flagged ``near_rational``) when an
    iterate drops below the working-precision threshold.
    """
    if isinstance(kind, str):
        kind = CFKind(kind)
    if max_depth < 0:
        raise DomainError("max_depth must be nonnegative")
    exact = isinstance(x, Rational)
    if exact:
        x = Fraction(x)
        return _expand_exact(x, kind, max_depth)
    if isinstance(x, float) and not math.isfinite(x):
        raise DomainError("non-finite seed")
    with working_precision(x):
        return _expand_float(x, kind, max_depth)


def _expand_exact(x, kind, max_depth):
    a0, eps0, x0 = _seed(x, kind)
    iterates = [x0]
    digits, convergents, betas = [], [(0, 1)], [x0]
    p_prev, q_prev, p, q = 1, 0, 0, 1
    eps_prev = 1
    cur = x0
    terminated = cur == 0
    for _ in range(max_depth):
        if cur == 0 or (kind is CFKind.BY_EXCESS and cur == 1):
            terminated = True
            break
        a, eps, nxt = _step_exact(cur, kind)
        p, p_prev = a * p + eps_prev * p_prev, p
        q, q_prev = a * q + eps_prev * q_prev, q
        eps_prev = eps
        digits.append((a, eps))
        convergents.append((p, q))
        iterates.append(nxt)
        betas.append(betas[-1] * nxt if nxt != 0 else Fraction(0))
        cur = nxt
        if cur == 0 or (kind is CFKind.BY_EXCESS and cur == 1):
            terminated = True
            break
    return CFExpansion(kind, x0, a0, eps0, tuple(digits), tuple(iterates),
                       tuple(convergents), tuple(betas), terminated)


def _expand_float(x, kind, max_depth):
    ctx = ctx_for(x)
    a0, eps0, x0 = _seed(x, kind, ctx)
    iterates = [x0]
    digits, convergents, betas = [], [(0, 1)], [x0]
    p_prev, q_prev, p, q = 1, 0, 0, 1
    eps_prev = 1
    cur = x0
    terminated = cur == 0
    near_rational = False
    ambiguous = False
    xerr = 0.0
    for _ in range(max_depth):
        if cur == 0:
            terminated = True
            break
        if cur < ctx.tiny:
            near_rational = True
            break
        if kind is CFKind.BY_EXCESS and 1 - cur < ctx.tiny:
            near_rational = True
            break
        if 1 / cur > DIGIT_CAP:
            near_rational = True
            break
        a, eps, nxt, snapped, xerr = _step_float(cur, kind, ctx, xerr)
        ambiguous = ambiguous or snapped
        p, p_prev = a * p + eps_prev * p_prev, p
        q, q_prev = a * q + eps_prev * q_prev, q
        eps_prev = eps
        digits.append((a, eps))
        convergents.append((p, q))
        iterates.append(nxt)
        betas.append(betas[-1] * nxt)
        cur = nxt
        if kind is CFKind.NEAREST_INTEGER and eps == 0:
            terminated = True
            break
        if snapped and kind is not CFKind.NEAREST_INTEGER and nxt == 0:
            terminated = True
            break
    return CFExpansion(kind, x0, a0, eps0, tuple(digits), tuple(iterates),
                       tuple(convergents), tuple(betas), terminated,
                       near_rational=near_rational, boundary_ambiguous=ambiguous)


def convergent_table(e):
    """Integer convergents (P_i, Q_i), i = 0..depth, of an expansion."""
    return list(e.convergents)


def rational_depth(p, q):
    """Smallest i with A_{1/2}^i(p/q) = 0, in exact rational arithmetic."""
    p, q = int(p), int(q)
    if q <= 0 or math.gcd(p, q) != 1:
        raise DomainError("p/q must be reduced with q >= 1")
    x = Fraction(p, q)
    if not 0 < x <= Fraction(1, 2):
        raise DomainError("p/q must lie in (0, 1/2]")
    depth = 0
    while x != 0:
        _, _, x = _step_exact(x, CFKind.NEAREST_INTEGER)
        depth += 1
    return depth


def farey_parents(p, q):
    """Farey parents of the reduced fraction p/q (mediant decomposition).

    For q = 1 the convention (p-1)/1 and 1/0 applies.
    """
    p, q = int(p), int(q)
    if q <= 0 or math.gcd(p, q) != 1:
        raise DomainError("p/q must be reduced with q >= 1")
    if q == 1:
        return FareyTriple(p, 1, p - 1, 1, 1, 0)
    q2 = (-pow(p, -1, q)) % q
    p2 = (1 + p * q2) // q
    return FareyTriple(p, q, p - p2, q - q2, p2, q2)
