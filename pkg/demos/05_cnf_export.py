"""
Handing the question to a SAT solver
====================================

The same question, "is there a representation over n points?", as CNF.
Any DIMACS solver will do; a model it returns decodes back into relations.
"""

import os
import tempfile

from relrep import encode_cnf, point_algebra

inst = encode_cnf(point_algebra(), 2)
text = inst.dimacs()
print("\n".join(text.splitlines()[:8]))
print("...")

path = os.path.join(tempfile.gettempdir(), "point_algebra_2.cnf")
with open(path, "w") as f:
    f.write(text)
print(f"wrote {path}; run e.g. `minisat {path}` and expect UNSATISFIABLE")

# with python-sat installed the check runs in-process
try:
    from pysat.solvers import Minisat22
except ImportError:
    pass
else:
    with Minisat22(bootstrap_with=inst.clauses) as solver:
        print("SAT" if solver.solve() else "UNSAT")
