"""Complex dilogarithm Li2 on the principal branch (cut along [1, inf)).

Vectorized over numpy arrays; scalars in, scalars out.  The argument is
reduced into the region |w| <= 1, Re w <= 1/2 with the inversion and
reflection identities, then summed there via the rapidly converging
series Li2(w) = sum_k B_{k-1} u^k / k! in u = -log(1-w).  Values on the
cut are the limit from the lower half-plane.
"""

from fractions import Fraction
from math import comb, factorial, pi

import numpy as np

from .errors import DomainError

_PI2_6 = pi * pi / 6.0


def _bernoulli(n):
    """First n Bernoulli numbers B_0..B_{n-1} (B_1 = -1/2), exact."""
    out = []
    for m in range(n):
        b = Fraction(1) if m == 0 else -sum(
            Fraction(comb(m + 1, j)) * out[j] for j in range(m)) / (m + 1)
        out.append(b)
    return out


# coefficients of sum_{k>=1} c_k u^k with c_k = B_{k-1}/k!
_COEFFS = np.array([float(b / factorial(k + 1))
                    for k, b in enumerate(_bernoulli(36))])


def _series(w):
    """Li2 on |w| <= 1, Re w <= 1/2 via the Bernoulli series in -log(1-w).

    Tiny arguments go through the raw power series instead: forming
    1 - w there would cap the relative accuracy at eps/|w|.
    """
    out = np.empty_like(w)
    small = np.abs(w) <= 0.01
    if small.any():
        ws = w[small]
        acc = np.zeros_like(ws)
        for n in range(9, 0, -1):
            acc = acc * ws + 1.0 / (n * n)
        out[small] = acc * ws
    big = ~small
    if big.any():
        u = -np.log(1.0 - w[big])
        acc = np.zeros_like(u)
        for c in _COEFFS[::-1]:
            acc = acc * u + c
        out[big] = acc * u
    return out


def li2(z):
    """Principal-branch dilogarithm; relative error ~1e-13 away from the cut."""
    z_in = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(z_in)):
        raise DomainError("non-finite argument to li2")
    scalar = z_in.ndim == 0
    w = np.atleast_1d(z_in).ravel().copy()
    # on-cut points: evaluate on the upper edge, conjugate at the end
    oncut = (w.imag == 0) & (w.real > 1.0)
    w[oncut] = w[oncut].real + 0.0j
    one = (w == 1.0)
    w[one] = 0.0  # placeholder; fixed after the sweep
    add = np.zeros_like(w)
    sgn = np.ones(len(w))
    m = np.abs(w) > 1.0
    if m.any():
        lw = np.log(-w[m])
        add[m] -= _PI2_6 + 0.5 * lw * lw
        sgn[m] = -1.0
        w[m] = 1.0 / w[m]
    m = w.real > 0.5
    if m.any():
        add[m] += sgn[m] * (_PI2_6 - np.log(w[m]) * np.log(1.0 - w[m]))
        sgn[m] = -sgn[m]
        w[m] = 1.0 - w[m]
    out = sgn * _series(w) + add
    out[one] = _PI2_6
    out[oncut] = out[oncut].conj()
    return complex(out[0]) if scalar else out.reshape(z_in.shape)
