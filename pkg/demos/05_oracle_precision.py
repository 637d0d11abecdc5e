"""Reference values at quadratic irrationals via the periodic closed form.

A periodic continued fraction makes the series a geometric telescope:
one period of terms divided by (1 - sigma beta) gives the exact value.
The same number recomputed by plain iteration at elevated precision
agrees to the full requested accuracy — provided the input itself
carries twice the target precision, since an x known to b bits only
determines the series value to about b/2 bits (orbit decoherence).
"""

import mpmath

from brjuno import (CFKind, PeriodicCF, brjuno, closed_form_B,
                    periodic_value, recheck)

cases = [
    ("golden mean, Gauss digits (1,)", PeriodicCF(CFKind.GAUSS, period=(1,)),
     "brjuno"),
    ("sqrt(2)-1, Gauss digits (2,)", PeriodicCF(CFKind.GAUSS, period=(2,)),
     "wilton"),
    ("by-excess fixed point, digits (3,)",
     PeriodicCF(CFKind.BY_EXCESS, period=(3,)), "semi"),
]

bits = 256
for label, p, which in cases:
    x = periodic_value(p, 2 * bits + 16)
    cf = closed_form_B(p, which, bits)
    rc = recheck(x, which, bits)
    with mpmath.workprec(bits):
        print(label)
        print(f"  x            = {mpmath.nstr(+x, 30)}")
        print(f"  closed form  = {mpmath.nstr(cf, 30)} ({which})")
        print(f"  |cf - recheck| = {mpmath.nstr(abs(cf - rc), 3)}")

p = PeriodicCF(CFKind.GAUSS, period=(1,))
x = float(periodic_value(p, 64))
double = brjuno(x)
exact = float(closed_form_B(p, "brjuno", 128))
print("\ndouble-precision evaluation against the oracle at the golden mean:")
print(f"  series {double.value:.15f} vs exact {exact:.15f}  "
      f"(diff {abs(double.value - exact):.1e}, bound {double.tail_bound:.1e})")
