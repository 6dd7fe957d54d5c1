"""
No representation of the point algebra over a small finite set
===============================================================

Sizes 1 and 2 are small enough to try every assignment.  From size 3 on,
a backtracking search with bound propagation covers the space instead.
"""

import time

from relrep import FiniteAlgebra, nonrep_certificate, point_algebra, search
from relrep.search import SearchProblem

pa = point_algebra()
start = time.perf_counter()
report = nonrep_certificate(pa, 4)
for size in report.sizes:
    print(f"size {size.base_size}: {size.status:<5} by {size.method}, "
          f"{size.outcome.nodes_explored} nodes")
print(f"verdict: {report.verdict} ({time.perf_counter() - start:.1f} s)")

# a control: two elements, empty and identity, fit on one point
ze = FiniteAlgebra(("z", "e"), ((0, 0), (0, 1)), ((0, 0), (0, 1)))
found = search(SearchProblem(ze, 1))
for name in ze.elements:
    print(f"{name} -> {found.representation.image(name)}")
