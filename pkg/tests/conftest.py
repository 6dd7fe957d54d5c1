import itertools
import random

import pytest

from relrep import FiniteAlgebra, Relation, extract_tables, generate_closure, point_algebra


def naive_compose(a: Relation, b: Relation) -> Relation:
    """Triple loop over pair sets, independent of the bit-row kernel."""
    n = a.base_size
    pa, pb = set(a.pairs), set(b.pairs)
    return Relation.from_pairs(n, {(x, y) for x in range(n) for y in range(n)
                                   if any((x, z) in pa and (z, y) in pb for z in range(n))})


def is_representation(algebra, n, images) -> bool:
    """Pair-set check of an assignment of relation bit patterns."""
    if len(set(images)) != len(images):
        return False
    rels = [Relation(n, b) for b in images]
    m = algebra.size
    for a, b in itertools.product(range(m), repeat=2):
        if naive_compose(rels[a], rels[b]) != rels[algebra.comp[a][b]]:
            return False
        if rels[a].pairs & rels[b].pairs != rels[algebra.meet[a][b]].pairs:
            return False
    return True


def dpll(clauses, num_vars):
    """Tiny DPLL with unit propagation; returns a model (list of literals) or None."""
    clauses = [list(c) for c in clauses]

    def simplify(cls, lit):
        out = []
        for c in cls:
            if lit in c:
                continue
            if -lit in c:
                c = [l for l in c if l != -lit]
                if not c:
                    return None
            out.append(c)
        return out

    def solve(cls, assigned):
        while True:
            unit = next((c[0] for c in cls if len(c) == 1), None)
            if unit is None:
                break
            assigned = assigned + [unit]
            cls = simplify(cls, unit)
            if cls is None:
                return None
        if not cls:
            return assigned
        counts = {}
        for c in cls:
            for l in c:
                counts[l] = counts.get(l, 0) + 1
        lit = max(counts, key=counts.get)
        for choice in (lit, -lit):
            reduced = simplify(cls, choice)
            if reduced is not None:
                res = solve(reduced, assigned + [choice])
                if res is not None:
                    return res
        return None

    model = solve(clauses, [])
    if model is None:
        return None
    fixed = {abs(l): l for l in model}
    return [fixed.get(v, -v) for v in range(1, num_vars + 1)]


def random_algebra(rng: random.Random, m: int) -> FiniteAlgebra:
    names = tuple("abcdefgh"[:m])
    comp = [[rng.randrange(m) for _ in range(m)] for _ in range(m)]
    meet = [[rng.randrange(m) for _ in range(m)] for _ in range(m)]
    return FiniteAlgebra(names, comp, meet)


def closure_algebra(rng: random.Random, n: int, seeds: int, max_members: int = 99):
    """Tables of the closure of random seed relations, or None if too big."""
    rels = [("s%d" % k, Relation(n, rng.randrange(1 << (n * n)))) for k in range(seeds)]
    model = generate_closure(rels)
    if len(model.members) > max_members:
        return None
    return extract_tables(model)


def corpus(count=100, seed=2024):
    """Seeded mix of random tables and closure-derived tables, all with m <= 3."""
    rng = random.Random(seed)
    out = [point_algebra()]
    while len(out) < count:
        if len(out) % 2:
            out.append(random_algebra(rng, rng.randint(1, 3)))
        else:
            alg = closure_algebra(rng, rng.randint(1, 2), rng.randint(1, 2), max_members=3)
            if alg is not None:
                out.append(alg)
    return out


@pytest.fixture
def pa():
    return point_algebra()


@pytest.fixture
def ze():
    # z absorbing, e identity-like
    return FiniteAlgebra(("z", "e"), comp=((0, 0), (0, 1)), meet=((0, 0), (0, 1)))
