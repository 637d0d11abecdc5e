"""Farey structure and the popcorn function.

Every reduced fraction p/q is the mediant of its two Farey parents;
the jump structure of Delta- lives on exactly this tree.  The popcorn
(Thomae) function 1/q at p/q, 0 elsewhere, doubles as a quick rational
detector for floating-point inputs.
"""

from fractions import Fraction

from brjuno import farey_parents, popcorn, rational_depth

print("Farey parents (p1/q1 < p/q < p2/q2) and nearest-integer depth")
for p, q in ((1, 2), (3, 8), (2, 7), (5, 13), (13, 34)):
    t = farey_parents(p, q)
    d = rational_depth(p, q) if Fraction(p, q) <= Fraction(1, 2) else "-"
    print(f"  {t.p1}/{t.q1} < {p}/{q} < {t.p2}/{t.q2}   depth {d}")

print("\npopcorn values (1/q at rationals, 0 at irrationals)")
import math
for x in (0.5, 0.375, 2 / 7, math.pi - 3, (math.sqrt(5) - 1) / 2):
    print(f"  popcorn({x:.12f}) = {popcorn(x):.12f}")
