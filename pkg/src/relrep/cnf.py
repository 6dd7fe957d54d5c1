"""DIMACS CNF export of the representation problem, and decoding of solver models.

Variables, for an algebra with m elements over an n-element base:

* base ``v(a,x,y) = a*n^2 + x*n + y + 1``: element a holds pair (x, y);
* composition auxiliaries ``t(a,b,x,y,z)`` meaning (x,z) in a and (z,y) in b,
  numbered next, looping over entries (a, b) row-major, then x, y, z;
* diversity auxiliaries ``d(a,b,x,y)`` for element pairs a < b meaning
  a and b differ at (x, y), numbered last, looping over (a, b), then x, y.

No solver is bundled: write the instance with :meth:`CnfInstance.dimacs`,
run any external solver, and read its model back with
:func:`parse_assignment` and :func:`decode_cnf`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import FiniteAlgebra, Representation, generate_closure
from .errors import IntegrityError
from .relation import Relation
from .search import representation_from_bits


@dataclass(frozen=True)
class CnfInstance:
    variable_count: int
    clauses: tuple[tuple[int, ...], ...]
    comments: tuple[str, ...] = ()

    def dimacs(self) -> str:
        lines = [f"c {text}" if text else "c" for text in self.comments]
        lines.append(f"p cnf {self.variable_count} {len(self.clauses)}")
        lines += [" ".join(map(str, clause)) + " 0" for clause in self.clauses]
        return "\n".join(lines) + "\n"


def base_variable(a: int, x: int, y: int, n: int) -> int:
    return a * n * n + x * n + y + 1


def encode_cnf(algebra: FiniteAlgebra, n: int) -> CnfInstance:
    if n < 1:
        raise ValueError("base size must be at least 1")
    m = algebra.size
    rng = range(n)

    def v(a, x, y):
        return a * n * n + x * n + y + 1

    clauses = []
    next_var = m * n * n + 1
    t_start = next_var
    for a, b in itertools.product(range(m), repeat=2):
        c = algebra.comp[a][b]
        for x, y in itertools.product(rng, repeat=2):
            aux = []
            for z in rng:
                clauses.append((-v(a, x, z), -v(b, z, y), v(c, x, y)))
                t = next_var
                next_var += 1
                aux.append(t)
                clauses.append((-t, v(a, x, z)))
                clauses.append((-t, v(b, z, y)))
            clauses.append((-v(c, x, y), *aux))
    for a, b in itertools.product(range(m), repeat=2):
        c = algebra.meet[a][b]
        for x, y in itertools.product(rng, repeat=2):
            clauses.append((-v(c, x, y), v(a, x, y)))
            clauses.append((-v(c, x, y), v(b, x, y)))
            clauses.append((-v(a, x, y), -v(b, x, y), v(c, x, y)))
    d_start = next_var
    for a, b in itertools.combinations(range(m), 2):
        diff = []
        for x, y in itertools.product(rng, repeat=2):
            d = next_var
            next_var += 1
            diff.append(d)
            clauses.append((-d, v(a, x, y), v(b, x, y)))
            clauses.append((-d, -v(a, x, y), -v(b, x, y)))
        clauses.append(tuple(diff))

    names = " ".join(f"{i}={name}" for i, name in enumerate(algebra.elements))
    comments = (
        f"relrep: representation of a {m}-element algebra over a base of size {n}",
        f"elements: {names}",
        "base variable v(a,x,y) = a*n^2 + x*n + y + 1: element a holds pair (x,y)",
        f"comp aux t(a,b,x,y,z) = {t_start} + (((a*m + b)*n + x)*n + y)*n + z:"
        " (x,z) in a and (z,y) in b",
        f"diversity aux d(a,b,x,y) for a < b, numbered from {d_start} in order"
        " (a,b), x, y: a and b differ at (x,y)",
    )
    return CnfInstance(next_var - 1, tuple(clauses), comments)


def parse_assignment(text: str) -> list[int]:
    """Signed literals from solver output; skips "c"/"s" lines, strips "v" and 0."""
    literals = []
    for line in text.splitlines():
        tokens = line.split()
        if not tokens or tokens[0] in ("c", "s"):
            continue
        if tokens[0] == "v":
            tokens = tokens[1:]
        for tok in tokens:
            lit = int(tok)
            if lit:
                literals.append(lit)
    return literals


def decode_cnf(instance: CnfInstance, assignment: Iterable[int],
               algebra: FiniteAlgebra, n: int) -> Representation:
    """Read the base variables of a model and rebuild the representation."""
    m = algebra.size
    base_count = m * n * n
    values = {}
    for lit in assignment:
        if abs(lit) > instance.variable_count:
            raise ValueError(f"literal {lit} exceeds variable count {instance.variable_count}")
        values[abs(lit)] = lit > 0
    missing = [k for k in range(1, base_count + 1) if k not in values]
    if missing:
        raise ValueError(f"assignment misses {len(missing)} base variables, first {missing[0]}")

    images = []
    for a in range(m):
        bits = 0
        for x, y in itertools.product(range(n), repeat=2):
            if values[base_variable(a, x, y, n)]:
                bits |= 1 << (x * n + y)
        images.append(bits)
    _check_images(algebra, n, images)
    rep = representation_from_bits(algebra, n, images)
    closed = generate_closure(rep.model.members)
    if len(closed.members) != m:
        raise IntegrityError("image of the assignment is not closed under ; and intersection")
    return rep


def _check_images(algebra: FiniteAlgebra, n: int, images: Sequence[int]) -> None:
    rels = [Relation(n, bits) for bits in images]
    names = algebra.elements
    m = algebra.size
    for a, b in itertools.product(range(m), repeat=2):
        c = algebra.comp[a][b]
        if rels[a].compose(rels[b]) != rels[c]:
            raise IntegrityError(
                f"comp entry {names[a]};{names[b]} = {names[c]} violated")
    for a, b in itertools.product(range(m), repeat=2):
        c = algebra.meet[a][b]
        if rels[a].intersect(rels[b]) != rels[c]:
            raise IntegrityError(
                f"meet entry {names[a]}.{names[b]} = {names[c]} violated")
    for a, b in itertools.combinations(range(m), 2):
        if images[a] == images[b]:
            raise IntegrityError(
                f"injectivity violated: {names[a]} and {names[b]} get the same relation")
