"""Brjuno-type functions of a real argument.

Evaluators for

* ``brjuno``       B(x)      = sum_j beta_{j-1} log(1/x_j), Gauss iterates
* ``wilton``       W(x)      = same series with alternating signs
* ``semi_brjuno``  B0(x)     = same series over by-excess iterates
* ``brjuno_half``  B_1/2(x)  = same series over nearest-integer iterates

plus the bounded closed forms for the odd part of B and the even part
of W, the auxiliary functions Phi, g, f and the odd 1-periodic
extension of f, and the log-of-denominator approximants used as
bounded-defect diagnostics.

All evaluators accept float (default), gmpy2.mpfr or mpmath.mpf
arguments and compute in the argument's precision.  The reported
``tail_bound`` is a heuristic geometric-decay estimate, not a rigorous
enclosure; ``depth_used`` is exposed so callers can run convergence
studies.
"""

import math
from dataclasses import dataclass

from ._numctx import ctx_for, working_precision
from .cfrac import DIGIT_CAP, CFKind, expand
from .errors import DomainError, RationalInputError

# tail-bound fudge: stands in for the (unbounded) value of the series at
# the truncated iterate; documented heuristic
_TAIL_K = 10.0


@dataclass(frozen=True)
class EvalConfig:
    max_depth: int = 64
    tail_tol: float = 1e-12
    min_iterate: float = 1e-15

    def __post_init__(self):
        if self.max_depth < 1 or not 0 < self.tail_tol < 1 or self.min_iterate <= 0:
            raise DomainError("invalid EvalConfig")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class EvalResult:
    value: object
    depth_used: int
    tail_bound: float
    converged: bool


def _check_finite(x):
    if isinstance(x, float) and not math.isfinite(x):
        raise DomainError("non-finite argument")


def frac(x):
    """Fractional part in the argument's own arithmetic and precision."""
    with working_precision(x):
        return x - ctx_for(x).floor(x)


def _raise_rational(a0, eps0, p, q):
    num = a0 * q + eps0 * p
    g = math.gcd(int(num), int(q))
    raise RationalInputError(num // g, q // g)


def _series(x, kind, alternating, cfg):
    """Truncated Brjuno-type series over the iterates of one map."""
    _check_finite(x)
    with working_precision(x):
        ctx = ctx_for(x)
        log = ctx.log
        tiny = max(ctx.tiny, cfg.min_iterate) if isinstance(x, float) else ctx.tiny
        if kind is CFKind.NEAREST_INTEGER:
            a0 = ctx.floor(x + 0.5)
            d = x - a0
            eps0 = 1 if d > 0 else (-1 if d < 0 else 0)
            cur = abs(d)
        else:
            a0 = ctx.floor(x)
            eps0 = 1
            cur = x - a0
        if cur <= tiny:
            raise RationalInputError(int(a0) if eps0 >= 0 else -int(a0), 1)
        p_prev, q_prev, p, q = 1, 0, 0, 1
        eps_prev = 1
        total = cur * 0
        beta_prev = 1 + cur * 0  # typed one
        window = []
        depth_used = 0
        tail = math.inf
        converged = False
        rho_last = 0.5
        eps_f = float(ctx.eps)
        aerr = 0.0  # forward-error bound on the current iterate
        verr = 0.0  # estimated roundoff already committed to the value
        j = 0       # digit depth; a telescoped run advances it by its length
        events = 0  # loop budget: a whole run counts as one event
        while events < cfg.max_depth:
            events += 1
            verr += float(beta_prev) * aerr / max(float(cur), 1e-300)
            if kind is CFKind.BY_EXCESS and cur > 0.75:
                # The by-excess map crawls through a neighborhood of 1
                # (runs of digit 2, one step per ~delta); telescope the
                # whole run in closed form instead of iterating it.
                cur, beta_prev, run_len, run_sum, aerr = _two_run(
                    cur, beta_prev, ctx, aerr)
                if run_len == 0:
                    _raise_rational(a0, eps0, p, q)
                total += run_sum
                # the run contributes run_len digits (2, -1); the first
                # uses the incoming eps_prev, the rest are linear steps
                p1r, q1r = 2 * p + eps_prev * p_prev, 2 * q + eps_prev * q_prev
                p, p_prev = p1r + (run_len - 1) * (p1r - p), p1r + (run_len - 2) * (p1r - p)
                q, q_prev = q1r + (run_len - 1) * (q1r - q), q1r + (run_len - 2) * (q1r - q)
                eps_prev = -1
                j += run_len
                depth_used = j
                if cur <= tiny or float(cur) <= min(4.0 * aerr, 1e-8):
                    # unresolvable at working precision; harmless if the
                    # remaining weight is already below the tolerance
                    tail = float(beta_prev) * (35.0 + _TAIL_K)
                    if tail <= cfg.tail_tol:
                        converged = True
                        break
                    _raise_rational(a0, eps0, p, q)
                window = [beta_prev]
                tail = float(beta_prev) * (abs(float(log(cur))) + _TAIL_K) / (1.0 - rho_last)
                if tail <= cfg.tail_tol:
                    converged = True
                    break
                continue
            term = -log(cur) * beta_prev
            if alternating and j % 2 == 1:
                total -= term
            else:
                total += term
            beta = beta_prev * cur
            j += 1
            depth_used = j
            # one map step (digits tracked only to report a detected rational)
            y = 1 / cur
            if y > DIGIT_CAP:
                _raise_rational(a0, eps0, p, q)
            yf = float(y)
            aerr = aerr * yf * yf + 2.0 * eps_f * abs(yf)
            if kind is CFKind.GAUSS:
                a = ctx.floor(y)
                eps = 1
                nxt = y - a
            elif kind is CFKind.BY_EXCESS:
                a = ctx.floor(y) + 1
                eps = -1
                nxt = a - y
            else:
                a = ctx.floor(y + 0.5)
                r = y - a
                eps = 1 if r > 0 else -1
                nxt = abs(r)
            p, p_prev = a * p + eps_prev * p_prev, p
            q, q_prev = a * q + eps_prev * q_prev, q
            eps_prev = eps
            near = min(4.0 * aerr, 1e-8)
            rational_next = (nxt <= tiny or float(nxt) <= near
                             or (kind is CFKind.BY_EXCESS
                                 and (1 - nxt <= tiny or float(1 - nxt) <= near)))
            window.append(beta)
            if len(window) > 6:
                window.pop(0)
            if len(window) > 1:
                rho_last = min(0.999, float(window[-1] / window[0]) ** (1.0 / (len(window) - 1)))
            ref = abs(float(log(nxt))) if not rational_next else 35.0
            tail = float(beta) * (ref + _TAIL_K) / (1.0 - rho_last)
            if rational_next:
                if float(beta) * (35.0 + _TAIL_K) <= cfg.tail_tol:
                    converged = True  # rational end carries negligible weight
                    break
                _raise_rational(a0, eps0, p, q)
            beta_prev = beta
            cur = nxt
            if tail <= cfg.tail_tol:
                converged = True
                break
        return EvalResult(total, depth_used, tail + verr, converged)


def _two_run(cur, beta_prev, ctx, aerr):
    """Closed form for a by-excess run of digit-2 steps starting at cur > 3/4.

    Writing cur = 1 - delta, the iterates are x_j = (1-(j+1)d)/(1-jd) as
    long as they exceed 1/2 (J steps, J ~ 1/delta), the consumed betas
    telescope to 1 - J*delta and the run's series contribution reduces to

        -d * sum_{j=1}^{J-1} log(1-jd) - (1-(J-1)d) * log(1-Jd)

    with the interior sum collapsed through log-Gamma.  Returns the
    iterate after the run, the updated beta, J, the contribution (already
    scaled by the incoming beta) and the amplified error bound; J = 0
    signals an iterate indistinguishable from 1 (rational seed).
    """
    log, lgamma = ctx.log, ctx.lgamma
    delta = 1 - cur
    if delta <= ctx.tiny or float(delta) <= min(4.0 * aerr, 1e-8):
        return cur, beta_prev, 0, cur * 0, aerr
    if float(delta) > 1.0 / 258.0:
        # short run: step it out directly, which keeps the float orbit
        # bitwise-shared with evaluations started further along it
        total = cur * 0
        n = 0
        eps_f = float(ctx.eps)
        while cur > 0.5:
            total += -log(cur) * beta_prev
            beta_prev = beta_prev * cur
            y = 1 / cur
            yf = float(y)
            aerr = aerr * yf * yf + 2.0 * eps_f * abs(yf)
            cur = (ctx.floor(y) + 1) - y
            n += 1
            if cur <= ctx.tiny or float(cur) <= min(4.0 * aerr, 1e-8):
                break
        return cur, beta_prev, n, total, aerr
    inv = 1 / delta
    # largest j with x_j > 1/2, i.e. (j+2)*delta < 1
    jmax = int(ctx.floor(inv)) - 2
    while (jmax + 3) * delta < 1:
        jmax += 1
    while jmax >= 0 and (jmax + 2) * delta >= 1:
        jmax -= 1
    J = jmax + 1
    t_run = 1 - J * delta
    if J >= 2:
        logsum = (J - 1) * log(delta) + lgamma(inv) - lgamma(inv - (J - 1))
    else:
        logsum = delta * 0
    run_sum = beta_prev * (-delta * logsum - (1 - (J - 1) * delta) * log(t_run))
    nxt = (1 - (J + 1) * delta) / t_run
    tf = float(t_run)
    aerr_next = (aerr + 2.0 * float(ctx.eps)) / (tf * tf) if tf > 0 else math.inf
    return nxt, beta_prev * t_run, J, run_sum, aerr_next


def brjuno(x, cfg=DEFAULT_CONFIG):
    """Brjuno function B(x); raises RationalInputError off its domain."""
    return _series(x, CFKind.GAUSS, False, cfg)


def wilton(x, cfg=DEFAULT_CONFIG):
    """Wilton function W(x), the alternating-sign companion of B."""
    return _series(x, CFKind.GAUSS, True, cfg)


def semi_brjuno(x, cfg=DEFAULT_CONFIG):
    """Semi-Brjuno function B0(x), over by-excess iterates; 1-periodic.

    Defined by the series on (0, 1); B0(-x) is evaluated as B0(1 - x)
    via periodicity.  Note the series itself is not even: the odd part
    B0- is exactly what the Wilton comparison is about.
    """
    return _series(x, CFKind.BY_EXCESS, False, cfg)


def brjuno_half(x, cfg=DEFAULT_CONFIG):
    """Nearest-integer variant B_1/2(x); coincides with B up to a bounded defect."""
    return _series(x, CFKind.NEAREST_INTEGER, False, cfg)


def even_part(F, x, cfg=DEFAULT_CONFIG):
    """(F(x) + F(-x)) / 2 with -x reduced mod 1."""
    with working_precision(x):
        u = frac(x)
        return (F(u, cfg).value + F(1 - u, cfg).value) / 2


def odd_part(F, x, cfg=DEFAULT_CONFIG):
    """(F(x) - F(-x)) / 2 with -x reduced mod 1."""
    with working_precision(x):
        u = frac(x)
        return (F(u, cfg).value - F(1 - u, cfg).value) / 2


def _check_half_open(x):
    if not 0 < x < 0.5:
        raise DomainError("argument must lie in (0, 1/2)")


def b_minus_closed(x):
    """Odd part of B on (0,1/2): x/2 * log((1-x)/x)."""
    _check_half_open(x)
    log = ctx_for(x).log
    with working_precision(x):
        return x / 2 * log((1 - x) / x)


def w_plus_closed(x):
    """Even part of W on (0,1/2): x/2 * log((1-x)/x) - log(1-x)."""
    _check_half_open(x)
    log = ctx_for(x).log
    with working_precision(x):
        return x / 2 * log((1 - x) / x) - log(1 - x)


def b_minus_ext(x):
    """Odd 1-periodic extension of b_minus_closed to all reals (0 at 0, 1/2)."""
    with working_precision(x):
        u = frac(x)
        if u == 0 or u == 0.5:
            return u * 0
        if u > 0.5:
            return -b_minus_closed(1 - u)
        return b_minus_closed(u)


def w_plus_ext(x):
    """Even 1-periodic extension of w_plus_closed (0 at 0, log 2 at 1/2)."""
    with working_precision(x):
        u = frac(x)
        if u == 0:
            return u * 0
        if u > 0.5:
            u = 1 - u
        if u == 0.5:
            log = ctx_for(x).log
            return log(1 + u * 0 + 1)  # log 2 in the argument's type
        return w_plus_closed(u)


# switch between the literal product form of Phi's sum and the
# log-Gamma form; the latter is O(1) for tiny x where n = floor(1/x) is huge
_PHI_DIRECT_MAX_N = 33


def phi(x):
    """Phi(x) = x log x + xA(x) log(xA(x)) + x sum_{j<n} log(1-jx), n = floor(1/x).

    Equals x*B0(A(x)) - B0(1-x); tends to -1 at 0+ and -log 2 at 1/2-.
    """
    _check_half_open(x)
    with working_precision(x):
        ctx = ctx_for(x)
        log, lgamma = ctx.log, ctx.lgamma
        y = 1 / x
        n = ctx.floor(y)
        ax = y - n
        if ax == 0:
            raise RationalInputError(1, int(n))
        s = x * log(x) + (x * ax) * log(x * ax)
        if n >= 2:
            if n <= _PHI_DIRECT_MAX_N:
                acc = x * 0
                for j in range(1, int(n)):
                    acc += log(1 - j * x)
                s += x * acc
            else:
                s += x * ((n - 1) * log(x) + lgamma(y) - lgamma(y - (n - 1)))
        return s


def g_func(x):
    """g(x) = -log x - [W+(x) + x W+(A x)], all via the closed form of W+."""
    _check_half_open(x)
    with working_precision(x):
        log = ctx_for(x).log
        ax = frac(1 / x)
        return -log(x) - w_plus_closed(x) - x * w_plus_ext(ax)


def f_func(x):
    """f(x) = g(x) + log x - Phi(x), evaluated without the log cancellation."""
    _check_half_open(x)
    with working_precision(x):
        ax = frac(1 / x)
        return -w_plus_closed(x) - x * w_plus_ext(ax) - phi(x)


def f_tilde(x):
    """Odd 1-periodic extension of f; tends to 1 at 0+ and 0 at 1/2-."""
    with working_precision(x):
        u = frac(x)
        if u == 0:
            raise RationalInputError(0, 1)
        if u == 0.5:
            return u * 0
        if u > 0.5:
            return -f_func(1 - u)
        return f_func(u)


def qlog_approximant(x, kind, depth=40):
    """Log-of-convergent partial sums that track B, W and B0 up to a bounded defect.

    ``kind``: 'brjuno' -> sum log(q_{j+1})/q_j, 'wilton' -> alternating,
    'semi' -> sum log(a_{2j+1})/q_{2j}, over the simple CF of x.
    """
    if kind not in ("brjuno", "wilton", "semi"):
        raise DomainError(f"unknown approximant kind {kind!r}")
    e = expand(frac(x), CFKind.GAUSS, depth)
    if e.terminated or e.near_rational:
        num, den = e.final_fraction()
        raise RationalInputError(num, den)
    qs = [pq[1] for pq in e.convergents]
    if kind == "semi":
        return sum(math.log(e.digits[2 * j][0]) / qs[2 * j]
                   for j in range((len(e.digits) + 1) // 2))
    total = 0.0
    for j in range(len(qs) - 1):
        t = math.log(qs[j + 1]) / qs[j]
        total += -t if (kind == "wilton" and j % 2 == 1) else t
    return total
