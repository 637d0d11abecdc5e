"""Complex Brjuno and Wilton functions approaching the real line.

Both extend to the upper half-plane as sums of dilogarithm terms over
reduced fractions with their Farey parents.  As Im z -> 0 the imaginary
parts converge to the real Brjuno and Wilton functions, and the
combination (B + W)/2 cancels the left-parent bracket term by term.
"""

import math

from brjuno import (TruncationPlan, brjuno, complex_brjuno, complex_wilton,
                    term_contributions, wilton)

GOLDEN = (math.sqrt(5) - 1) / 2
plan = TruncationPlan(q_max=600)

b = brjuno(GOLDEN).value
w = wilton(GOLDEN).value
print(f"boundary targets at the golden mean: B = {b:.6f}, W = {w:.6f}\n")
print("   Im z      Im complex B   gap        Im complex W   gap")
for y in (1e-1, 1e-2, 1e-3):
    zb = complex_brjuno(complex(GOLDEN, y), plan)
    zw = complex_wilton(complex(GOLDEN, y), plan)
    print(f"  {y:7.0e}   {zb.imag:.6f}     {abs(zb.imag - b):.4f}"
          f"     {zw.imag:.6f}     {abs(zw.imag - w):.4f}")

small = TruncationPlan(q_max=60, window=2.0)
z = complex(0.3319, 0.21)
worst = max(abs(0.5 * (t.value_b + t.value_w) - t.value_semi)
            for t in term_contributions(z, small))
print(f"\nper-term cancellation |(B_term + W_term)/2 - semi_term| "
      f"at z = {z}: max {worst:.2e}")
