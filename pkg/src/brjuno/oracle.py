"""Independent reference values for the Brjuno-type functions.

Quadratic irrationals with a periodic expansion admit a closed form:
around one period of length k the functional equation linearizes, so

    B(x) = [sum_{j<k} sigma_j beta_{j-1} log(1/x_j)] / (1 - sigma_k beta_{k-1})

with sigma_j = (-1)^j for the Wilton case and 1 otherwise.  This module
reconstructs the quadratic surd from the digit sequence (fixed point of
the period's Moebius map), evaluates the closed form in extended
precision, and re-runs the plain series at elevated precision for spot
checks of double-precision results.  Everything here is written against
mpmath directly and deliberately shares no series code with `realfuncs`.
"""

import math
from dataclasses import dataclass

import mpmath

from .cfrac import CFKind
from .errors import DomainError, RationalInputError

_WHICH_KIND = {
    "brjuno": CFKind.GAUSS,
    "wilton": CFKind.GAUSS,
    "semi": CFKind.BY_EXCESS,
}


def _signed_digits(kind, digits):
    """Normalize a digit sequence to (a, eps) pairs and validate it."""
    out = []
    for d in digits:
        if kind is CFKind.NEAREST_INTEGER:
            a, eps = d
            if a < 2 or eps not in (-1, 1) or (a == 2 and eps == -1):
                raise DomainError(f"invalid nearest-integer digit {d!r}")
        elif kind is CFKind.GAUSS:
            a, eps = int(d), 1
            if a < 1:
                raise DomainError(f"invalid Gauss digit {d!r}")
        else:
            a, eps = int(d), -1
            if a < 2:
                raise DomainError(f"invalid by-excess digit {d!r}")
        out.append((int(a), eps))
    return tuple(out)


@dataclass(frozen=True)
class PeriodicCF:
    """An eventually periodic expansion: preperiod then repeating period.

    Digits are plain integers for the Gauss and by-excess kinds and
    (a, eps) pairs for the nearest-integer kind.
    """

    kind: CFKind
    preperiod: tuple = ()
    period: tuple = ()

    def __post_init__(self):
        if not self.period:
            raise DomainError("period must be nonempty")
        _signed_digits(self.kind, self.preperiod)
        _signed_digits(self.kind, self.period)


def _domain_interval(kind):
    if kind is CFKind.NEAREST_INTEGER:
        return 0.0, 0.5
    return 0.0, 1.0


def periodic_value(p, precision_bits=256):
    """The real number whose expansion is ``p``, as an mpmath mpf.

    The periodic tail is the fixed point of the period's Moebius map
    x -> 1/(a_1 + eps_1/(a_2 + ...)); the preperiod is then applied on
    top.  The in-domain root of the fixed-point quadratic is selected.
    """
    pre = _signed_digits(p.kind, p.preperiod)
    per = _signed_digits(p.kind, p.period)
    # compose integer Moebius matrices [[0, 1], [eps, a]] over the period;
    # each digit acts as t -> 1/(a + eps t) and composition is the product
    m = ((1, 0), (0, 1))
    for (dig, eps) in per:
        (ma, mb), (mc, md) = m
        na, nb, nc, nd = 0, 1, eps, dig
        m = ((ma * na + mb * nc, ma * nb + mb * nd),
             (mc * na + md * nc, mc * nb + md * nd))
    (ma, mb), (mc, md) = m
    lo, hi = _domain_interval(p.kind)
    with mpmath.workprec(precision_bits):
        if mc == 0:
            if ma == md:
                raise DomainError("degenerate period: identity Moebius map")
            x = mpmath.mpf(mb) / (md - ma)
        else:
            disc = (md - ma) ** 2 + 4 * mb * mc
            if disc < 0:
                raise DomainError("degenerate period: no real fixed point")
            root = mpmath.sqrt(mpmath.mpf(disc))
            cands = [((ma - md) + root) / (2 * mc), ((ma - md) - root) / (2 * mc)]
            inside = [t for t in cands if lo < t < hi]
            if not inside:
                raise DomainError("no fixed point inside the map's domain")
            x = inside[0]
        # rebuild the full value through the preperiod, innermost first
        for (dig, eps) in reversed(pre):
            x = 1 / (dig + eps * x)
        return +x


def _iterate(x, kind):
    """One exact-precision map step from a known expansion's viewpoint."""
    y = 1 / x
    if kind is CFKind.GAUSS:
        a = mpmath.floor(y)
        return int(a), 1, y - a
    if kind is CFKind.BY_EXCESS:
        a = mpmath.floor(y) + 1
        return int(a), -1, a - y
    a = mpmath.floor(y + mpmath.mpf(1) / 2)
    r = y - a
    eps = 1 if r > 0 else -1
    return int(a), eps, abs(r)


def closed_form_B(p, which, precision_bits=256):
    """Series value at periodic_value(p) via the k-step linear recursion.

    ``which`` is 'brjuno', 'wilton' or 'semi'; the expansion kind must
    match (Gauss for the first two, by-excess for the last).
    """
    if which not in _WHICH_KIND:
        raise DomainError(f"unknown series {which!r}")
    if p.kind is not _WHICH_KIND[which]:
        raise DomainError(f"{which} needs a {_WHICH_KIND[which].value} expansion")
    alternating = which == "wilton"
    pre = _signed_digits(p.kind, p.preperiod)
    k = len(p.period)
    with mpmath.workprec(precision_bits):
        x = periodic_value(p, precision_bits)
        total = mpmath.mpf(0)
        beta = mpmath.mpf(1)
        sgn = 1
        for _ in pre:
            total += sgn * beta * (-mpmath.log(x))
            beta *= x
            _, _, x = _iterate(x, p.kind)
            if alternating:
                sgn = -sgn
        psum = mpmath.mpf(0)
        pbeta = mpmath.mpf(1)
        psgn = 1
        for _ in range(k):
            psum += psgn * pbeta * (-mpmath.log(x))
            pbeta *= x
            _, _, x = _iterate(x, p.kind)
            if alternating:
                psgn = -psgn
        if abs(pbeta) >= 1:
            raise DomainError("period does not contract; invalid expansion")
        return total + sgn * beta * psum / (1 - psgn * pbeta)


def recheck(x, which, precision_bits=256, max_terms=100000):
    """Recompute a series value by plain iteration at elevated precision.

    The continued-fraction digits are recomputed from scratch at double
    the target precision (orbit decoherence costs half the working
    digits), never reused from a double expansion.  Rational (at the
    elevated precision) inputs raise; failure to reach a negligible
    beta within ``max_terms`` raises DomainError.
    """
    if which not in _WHICH_KIND:
        raise DomainError(f"unknown series {which!r}")
    kind = _WHICH_KIND[which]
    alternating = which == "wilton"
    with mpmath.workprec(2 * precision_bits + 16):
        cur = mpmath.mpf(x)
        cur -= mpmath.floor(cur)
        eps_cut = mpmath.mpf(2) ** (8 - 2 * precision_bits)
        if cur < eps_cut:
            raise RationalInputError(int(round(float(x))), 1)
        total = mpmath.mpf(0)
        beta = mpmath.mpf(1)
        sgn = 1
        cutoff = mpmath.mpf(2) ** (-precision_bits - 8)
        for _ in range(max_terms):
            total += sgn * beta * (-mpmath.log(cur))
            beta *= cur
            if alternating:
                sgn = -sgn
            _, _, nxt = _iterate(cur, kind)
            if nxt < eps_cut or (kind is CFKind.BY_EXCESS and 1 - nxt < eps_cut):
                raise RationalInputError(0, 1)
            cur = nxt
            if beta < cutoff:
                with mpmath.workprec(precision_bits):
                    return +total
        raise DomainError(f"no convergence within {max_terms} terms")
