"""Jump law and Holder regularity of the defect functions.

Delta- = W - 2 B0- is continuous except at rationals, where it jumps
upward by exactly 2/q.  Delta+ = B - 2 B0+ is continuous with Holder
exponent 1/2.  Both claims are measured numerically below.
"""

import math

from brjuno import delta_minus_series, delta_plus, holder_estimate, jump_at

print("increasing jump of Delta- at p/q is 2/q")
print("   p/q      left limit   right limit   jump       2/q")
for p, q in ((1, 3), (1, 4), (2, 5), (3, 7), (5, 12), (7, 16)):
    r = jump_at(p, q)
    print(f"  {p:2d}/{q:<2d}   {r.left_limit:+.6f}   {r.right_limit:+.6f}"
          f"   {r.jump:.6f}   {2 / q:.6f}")

scales = (1e-2, 3e-3, 1e-3, 3e-4, 1e-4)
rp = holder_estimate(lambda x: float(delta_plus(x)), (0.05, 0.45), scales,
                     n_pairs=300, seed=0)
print(f"\nHolder exponent of Delta+ on (0.05, 0.45): "
      f"{rp.exponent_estimate:.4f}  (theory: 1/2)")

centers = [p / q for q in range(2, 12) for p in range(1, q)
           if math.gcd(p, q) == 1]
rm = holder_estimate(lambda x: float(delta_minus_series(x, 40)), (0.05, 0.95),
                     scales, n_pairs=300, seed=0, centers=centers)
print(f"apparent exponent of Delta- near rationals:  "
      f"{rm.exponent_estimate:.4f}  (jumps force it below any positive power)")
