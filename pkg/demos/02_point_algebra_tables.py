"""
The point algebra over the rationals
====================================

Read z as the empty relation, e as equality and r as strict "less than" on Q.
Composition and intersection of these three stay inside the set, and the
tables below are computed from the definitions, not typed in.
"""

from fractions import Fraction

from relrep import compose_symbolic, point_algebra, verify_tables, witness
from relrep.point import R
from relrep.specfile import format_algebra

print(format_algebra(point_algebra()), end="")

# r;r = r because between any two rationals sits their midpoint
x, y = Fraction(1, 3), Fraction(1, 2)
w = witness(x, y, R, R)
print(f"\n{x} < {w} < {y}, so ({x}, {y}) is in r;r")
print("r;r =", compose_symbolic(R, R).name)

# every table cell checked against sampled pairs with explicit witnesses
verdict = verify_tables(200, seed=1)
print("sampled check:", "ok" if verdict else verdict.failures[0])
