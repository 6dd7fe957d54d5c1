"""
Why every representation is infinite
====================================

Given z, e, r obeying the point-algebra equations, one can always squeeze a
new point between the last chain point and an anchor y.  Over Q this never
stops.  Over a finite set it has to, and the report says which equation the
finite model breaks and where.
"""

from fractions import Fraction

from relrep import FiniteTriple, Relation, SymbolicTriple, identity, run_chain
from relrep.chain import format_certificate

cert = run_chain(SymbolicTriple(), 4)
print(format_certificate(cert), end="")

deep = run_chain(SymbolicTriple(), 200)
assert deep.points[-1] == 1 - Fraction(1, 2**200)
print(f"\ndepth 200: last point is 1 - 2^-200, {deep.points[-1].denominator.bit_length()} bits")

# the strict order on two points is not dense: there is no room for x_1
two = FiniteTriple(2, Relation(2), identity(2), Relation.from_pairs(2, [(0, 1)]))
print(run_chain(two, 3))
