"""Abstract composition/meet algebras and their concrete relational models.

Model members only need ``compose`` and ``intersect`` methods plus value
equality, so the same closure and checking code serves finite
:class:`~relrep.relation.Relation` values and the symbolic
:class:`~relrep.point.BasisSet` values over the rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from .errors import IntegrityError

#: Practical limits on problem sizes; configuration, not semantics.
MAX_ELEMENTS = 16
MAX_BASE_SIZE = 8


@dataclass(frozen=True)
class FiniteAlgebra:
    """Element names plus composition and meet tables of element indices.

    ``comp[i][j]`` is the index of ``elements[i] ; elements[j]`` and
    ``meet[i][j]`` the index of their intersection.
    """

    elements: tuple[str, ...]
    comp: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "comp", tuple(tuple(r) for r in self.comp))
        object.__setattr__(self, "meet", tuple(tuple(r) for r in self.meet))
        m = len(self.elements)
        if m == 0:
            raise ValueError("an algebra needs at least one element")
        if len(set(self.elements)) != m:
            raise ValueError(f"duplicate element names in {self.elements}")
        for label, table in (("comp", self.comp), ("meet", self.meet)):
            if len(table) != m or any(len(row) != m for row in table):
                raise ValueError(f"{label} table is not {m}x{m}")
            for i, row in enumerate(table):
                for j, v in enumerate(row):
                    if not (isinstance(v, int) and 0 <= v < m):
                        raise ValueError(f"{label}[{i}][{j}] = {v!r} is not an element index")

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def relabel(self, order: Sequence[int]) -> FiniteAlgebra:
        """The same algebra listed in a new order: new element k is old ``order[k]``."""
        pos = {old: new for new, old in enumerate(order)}
        comp = [[pos[self.comp[a][b]] for b in order] for a in order]
        meet = [[pos[self.meet[a][b]] for b in order] for a in order]
        return FiniteAlgebra(tuple(self.elements[i] for i in order), comp, meet)


@dataclass(frozen=True)
class ConcreteModel:
    """Named, pairwise distinct relations over a common base.

    ``base_size`` is None for the symbolic model over the rationals.
    """

    base_size: Optional[int]
    members: tuple[tuple[str, Any], ...]

    def __post_init__(self):
        members = tuple((str(name), rel) for name, rel in self.members)
        object.__setattr__(self, "members", members)
        names = [name for name, _ in members]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate member names in {names}")
        seen = {}
        for name, rel in members:
            if getattr(rel, "base_size", None) != self.base_size:
                raise ValueError(f"member {name} is not over base size {self.base_size}")
            if rel in seen:
                raise ValueError(f"members {seen[rel]} and {name} are the same relation")
            seen[rel] = name

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.members)

    @property
    def relations(self) -> tuple:
        return tuple(rel for _, rel in self.members)

    def index_of(self, rel) -> Optional[int]:
        for i, (_, r) in enumerate(self.members):
            if r == rel:
                return i
        return None

    def closure_violation(self) -> Optional[tuple[str, str, str]]:
        """First (operation, left, right) whose result is not a member, or None."""
        rels = self.relations
        present = set(rels)
        for (na, a), (nb, b) in itertools.product(self.members, repeat=2):
            if a.compose(b) not in present:
                return ("comp", na, nb)
            if a.intersect(b) not in present:
                return ("meet", na, nb)
        return None


@dataclass(frozen=True)
class Representation:
    algebra: FiniteAlgebra
    model: ConcreteModel
    assignment: tuple[int, ...]

    def image(self, element) -> Any:
        """The relation assigned to an element, given by index or name."""
        if isinstance(element, str):
            element = self.algebra.index(element)
        return self.model.relations[self.assignment[element]]


@dataclass(frozen=True)
class OperationFailure:
    operation: str
    a: str
    b: str
    expected: str
    actual: Any

    def __str__(self):
        sym = ";" if self.operation == "comp" else "."
        return (f"{self.a}{sym}{self.b} should be {self.expected} "
                f"but the relations give {self.actual}")


@dataclass(frozen=True)
class InjectivityFailure:
    a: str
    b: str

    def __str__(self):
        return f"{self.a} and {self.b} are assigned the same relation"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: OK when ``failures`` is empty."""

    failures: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def _dedup(named: Iterable[tuple[str, Any]]) -> list[tuple[str, Any]]:
    out, seen = [], set()
    for name, rel in named:
        if rel not in seen:
            seen.add(rel)
            out.append((name, rel))
    return out


def generate_closure(seeds: Sequence[tuple[str, Any]]) -> ConcreteModel:
    """Least set of relations containing ``seeds`` closed under ; and intersection.

    Duplicate seeds keep their first name.  New members are named ``m<k>`` with
    k their member index, in discovery order of a breadth-first sweep: each
    round scans pairs (i, j) in index order that involve a member found in the
    previous round, trying composition before intersection.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("generate_closure needs at least one seed")
    bases = {getattr(rel, "base_size", None) for _, rel in seeds}
    if len(bases) != 1:
        raise ValueError(f"seeds span several base sizes: {sorted(bases, key=str)}")
    members = _dedup(seeds)
    names = {name for name, _ in members}
    present = {rel for _, rel in members}

    def add(rel):
        if rel in present:
            return
        present.add(rel)
        name = f"m{len(members)}"
        while name in names:
            name += "_"
        names.add(name)
        members.append((name, rel))

    done = 0
    while done < len(members):
        count = len(members)
        for i in range(count):
            for j in range(count):
                if i < done and j < done:
                    continue
                a, b = members[i][1], members[j][1]
                add(a.compose(b))
                add(a.intersect(b))
        done = count
    return ConcreteModel(bases.pop(), tuple(members))


def extract_tables(model: ConcreteModel) -> FiniteAlgebra:
    """Read the composition and meet tables off a closed model."""
    rels = model.relations
    index = {rel: i for i, rel in enumerate(rels)}
    comp, meet = [], []
    for na, a in model.members:
        crow, mrow = [], []
        for nb, b in model.members:
            c = index.get(a.compose(b))
            if c is None:
                raise IntegrityError(f"model not closed: {na};{nb} is not a member")
            d = index.get(a.intersect(b))
            if d is None:
                raise IntegrityError(f"model not closed: {na}.{nb} is not a member")
            crow.append(c)
            mrow.append(d)
        comp.append(crow)
        meet.append(mrow)
    return FiniteAlgebra(model.names, comp, meet)


def check_representation(rep: Representation) -> Verdict:
    """Check that the assignment is injective and preserves ; and intersection."""
    alg, model, assign = rep.algebra, rep.model, tuple(rep.assignment)
    m = alg.size
    if len(assign) != m:
        raise ValueError(f"assignment has {len(assign)} entries for {m} elements")
    rels = model.relations
    for k in assign:
        if not 0 <= k < len(rels):
            raise ValueError(f"assignment refers to member {k}, model has {len(rels)}")

    failures = []
    names = alg.elements
    seen = {}
    for a in range(m):
        if assign[a] in seen:
            failures.append(InjectivityFailure(names[seen[assign[a]]], names[a]))
        else:
            seen[assign[a]] = a
    for a, b in itertools.product(range(m), repeat=2):
        ra, rb = rels[assign[a]], rels[assign[b]]
        for op, table, result in (("comp", alg.comp, ra.compose(rb)),
                                  ("meet", alg.meet, ra.intersect(rb))):
            want = assign[table[a][b]]
            if result != rels[want]:
                failures.append(OperationFailure(op, names[a], names[b],
                                                 model.names[want], result))
    return Verdict(tuple(failures))


@dataclass(frozen=True)
class LawViolation:
    law: str
    witness: tuple[str, ...]

    def __str__(self):
        return f"{self.law} fails at ({', '.join(self.witness)})"


def necessary_laws(algebra: FiniteAlgebra) -> list[LawViolation]:
    """Laws that hold in every algebra of relations; at most one witness per law.

    ; associative; meet commutative, associative and idempotent; ; monotone
    on both sides for the meet order (a <= b iff a.b = a).
    """
    m, c, t, names = algebra.size, algebra.comp, algebra.meet, algebra.elements
    rng = range(m)

    def first(law, cases):
        for case in cases:
            return [LawViolation(law, tuple(names[i] for i in case))]
        return []

    def leq(a, b):
        return t[a][b] == a

    out = []
    out += first("comp-associative", (
        (a, b, d) for a in rng for b in rng for d in rng
        if c[c[a][b]][d] != c[a][c[b][d]]))
    out += first("meet-commutative", (
        (a, b) for a in rng for b in rng if t[a][b] != t[b][a]))
    out += first("meet-associative", (
        (a, b, d) for a in rng for b in rng for d in rng
        if t[t[a][b]][d] != t[a][t[b][d]]))
    out += first("meet-idempotent", ((a,) for a in rng if t[a][a] != a))
    out += first("comp-monotone-left", (
        (a, b, d) for a in rng for b in rng for d in rng
        if leq(a, b) and not leq(c[a][d], c[b][d])))
    out += first("comp-monotone-right", (
        (a, b, d) for a in rng for b in rng for d in rng
        if leq(a, b) and not leq(c[d][a], c[d][b])))
    return out


def find_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra) -> Optional[tuple[int, ...]]:
    """Brute-force search for p with p[a.comp[i][j]] == b.comp[p[i]][p[j]], same for meet."""
    m = a.size
    if b.size != m:
        return None
    rng = range(m)
    for p in itertools.permutations(rng):
        if all(p[a.comp[i][j]] == b.comp[p[i]][p[j]]
               and p[a.meet[i][j]] == b.meet[p[i]][p[j]]
               for i in rng for j in rng):
            return p
    return None
