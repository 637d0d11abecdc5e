"""Arithmetic backend dispatch.

All real-valued evaluators in this package are written against a small
numeric context so the same code runs on python floats (fast path),
gmpy2.mpfr (extended precision) and mpmath.mpf (arbitrary precision,
used by the oracle module).  Exact rationals take separate code paths
in `cfrac` and never go through a context.
"""

import math
from contextlib import nullcontext

import gmpy2
import mpmath


class NumCtx:
    """Bundle of elementary functions plus precision metadata for one backend."""

    __slots__ = ("log", "lgamma", "floor", "eps", "tiny", "convert")

    def __init__(self, log, lgamma, floor, eps, tiny, convert):
        self.log = log
        self.lgamma = lgamma
        self.floor = floor
        self.eps = eps      # unit roundoff of the backend
        self.tiny = tiny    # iterate threshold below which the seed counts as rational
        self.convert = convert


def _float_ctx():
    return NumCtx(
        log=math.log,
        lgamma=math.lgamma,
        floor=math.floor,
        eps=2.0 ** -52,
        tiny=1e-15,
        convert=float,
    )


def _mpfr_ctx(prec):
    def lgamma(v):
        return gmpy2.lgamma(v)[0]

    return NumCtx(
        log=gmpy2.log,
        lgamma=lgamma,
        floor=math.floor,
        eps=gmpy2.mpfr(2) ** (1 - prec),
        tiny=gmpy2.mpfr(2) ** (4 - prec),
        convert=lambda v: gmpy2.mpfr(v, prec),
    )


def _mpmath_ctx():
    prec = mpmath.mp.prec
    return NumCtx(
        log=mpmath.log,
        lgamma=mpmath.loggamma,
        floor=math.floor,
        eps=mpmath.mpf(2) ** (1 - prec),
        tiny=mpmath.mpf(2) ** (4 - prec),
        convert=mpmath.mpf,
    )


_FLOAT_CTX = _float_ctx()


def ctx_for(x):
    """Return the numeric context matching the type of ``x``."""
    if isinstance(x, float) or isinstance(x, int):
        return _FLOAT_CTX
    if isinstance(x, type(gmpy2.mpfr(0))):
        return _mpfr_ctx(x.precision)
    if isinstance(x, mpmath.mpf):
        return _mpmath_ctx()
    raise TypeError(f"unsupported numeric type: {type(x)!r}")


def working_precision(x):
    """Context manager pinning the gmpy2 working precision to that of ``x``.

    A no-op for float and mpmath inputs (mpmath callers manage mp.prec
    themselves).
    """
    if isinstance(x, type(gmpy2.mpfr(0))):
        return gmpy2.context(precision=x.precision)
    return nullcontext()
