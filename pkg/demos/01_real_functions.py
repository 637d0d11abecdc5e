"""Evaluate the real Brjuno-type functions and check their functional equations.

B, W and B0 are sums of beta-weighted logarithms along the orbit of a
continued-fraction map (Gauss, Gauss, by-excess respectively).  Each one
satisfies a cocycle equation relating the value at x to the value at the
next iterate; the residuals below sit at the rounding floor.
"""

import math

from brjuno import brjuno, brjuno_half, frac, semi_brjuno, wilton

GOLDEN = (math.sqrt(5) - 1) / 2

print("values at the golden mean x = (sqrt 5 - 1)/2")
for name, f in (("B      ", brjuno), ("W      ", wilton),
                ("B0     ", semi_brjuno), ("B_1/2  ", brjuno_half)):
    r = f(GOLDEN)
    print(f"  {name}(x) = {r.value:.12f}   depth {r.depth_used:3d}   "
          f"tail bound {r.tail_bound:.1e}")

print("\nfunctional-equation residuals at a few irrationals")
for x in (GOLDEN, math.sqrt(2) - 1, math.pi - 3, 0.7182818284590452):
    ax = frac(1 / x)
    rb = brjuno(x).value + math.log(x) - x * brjuno(ax).value
    rw = wilton(x).value + math.log(x) + x * wilton(ax).value
    rs = semi_brjuno(x).value + math.log(x) - x * semi_brjuno(1 - ax).value
    print(f"  x = {x:.10f}   B: {rb:+.2e}   W: {rw:+.2e}   B0: {rs:+.2e}")

print("\nB diverges at rationals; the evaluator detects them instead:")
try:
    brjuno(0.375)
except Exception as e:  # RationalInputError carries the detected fraction
    print(f"  brjuno(0.375) -> {type(e).__name__}: {e}")
