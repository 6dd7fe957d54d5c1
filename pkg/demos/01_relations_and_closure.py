"""
Relations as bit patterns, and the algebra they generate
========================================================

A relation on {0, ..., n-1} is one Python int with bit x*n + y set when the
pair (x, y) is in it.  Composition sweeps rows; intersection is a bitwise and.
"""

from relrep import Relation, compose, extract_tables, generate_closure, identity
from relrep.specfile import format_algebra

# the strict order on three points, and its square
lt = Relation.from_pairs(3, [(0, 1), (0, 2), (1, 2)])
print("lt      =", lt)
print("lt;lt   =", compose(lt, lt))
print("lt & id =", lt.intersect(identity(3)))

# the successor relation generates its square, then the empty relation
succ = Relation.from_pairs(3, [(0, 1), (1, 2)])
model = generate_closure([("s", succ)])
for name, rel in model.members:
    print(f"{name:>3} = {rel}")

# the closure is closed, so its tables can be read off directly
print()
print(format_algebra(extract_tables(model)), end="")
