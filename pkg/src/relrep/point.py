"""Relations on the rationals definable from the order, and the point algebra.

Every relation here is a union of the three basic relations ``<``, ``=``,
``>`` over Q, so it is a :class:`BasisSet` (one of eight).  The three-element
point algebra consists of the empty relation z, the identity e and the strict
order r.

Composition uses the basic table::

    <;< = <     <;= = <     =;x = x     >;> = >     >;= = >
    <;> = all   >;< = all

The last two cells need Q to be unbounded as well as dense: x < z > y has a
witness z = max(x, y) + 1 for every x, y.  Only the point algebra's three
elements are needed for the non-representability argument and those cells
never arise there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .algebra import ConcreteModel, FiniteAlgebra, Verdict

LT, EQ, GT = 1, 2, 4

_NAMES = {0: "z", LT: "r", EQ: "e", LT | EQ: "le", GT: "gt",
          LT | GT: "ne", EQ | GT: "ge", LT | EQ | GT: "u"}

_BASIC_COMP = {
    (LT, LT): LT, (LT, EQ): LT, (LT, GT): LT | EQ | GT,
    (EQ, LT): LT, (EQ, EQ): EQ, (EQ, GT): GT,
    (GT, LT): LT | EQ | GT, (GT, EQ): GT, (GT, GT): GT,
}


def _basics(mask):
    return [b for b in (LT, EQ, GT) if mask & b]


@dataclass(frozen=True)
class BasisSet:
    """A union of the basic order relations on Q, as a 3-bit mask."""

    mask: int = 0

    #: Symbolic relations have no finite base.
    base_size = None

    def __post_init__(self):
        if not 0 <= self.mask <= 7:
            raise ValueError(f"basis mask must lie in 0..7, got {self.mask}")

    @property
    def name(self) -> str:
        return _NAMES[self.mask]

    def compose(self, other: BasisSet) -> BasisSet:
        return compose_symbolic(self, other)

    def intersect(self, other: BasisSet) -> BasisSet:
        return intersect_symbolic(self, other)

    def __contains__(self, pair) -> bool:
        return member(pair[0], pair[1], self)

    def __str__(self):
        parts = [s for b, s in ((LT, "<"), (EQ, "="), (GT, ">")) if self.mask & b]
        return "{" + ",".join(parts) + "}"


Z = BasisSet(0)
E = BasisSet(EQ)
R = BasisSet(LT)
ALL_BASIS_SETS = tuple(BasisSet(m) for m in range(8))


def compose_symbolic(a: BasisSet, b: BasisSet) -> BasisSet:
    mask = 0
    for p in _basics(a.mask):
        for q in _basics(b.mask):
            mask |= _BASIC_COMP[p, q]
    return BasisSet(mask)


def intersect_symbolic(a: BasisSet, b: BasisSet) -> BasisSet:
    return BasisSet(a.mask & b.mask)


def comparison(x, y) -> int:
    """Basic relation holding between two rationals."""
    # exact cross-multiplication; denominators are positive
    d = x.numerator * y.denominator - y.numerator * x.denominator
    if d < 0:
        return LT
    return EQ if d == 0 else GT


def member(x, y, a: BasisSet) -> bool:
    mask = a.mask
    if mask == 0:
        return False
    if mask == 7:
        return True
    return bool(comparison(x, y) & mask)


def witness(x, y, a: BasisSet, b: BasisSet) -> Optional[Fraction]:
    """A point w with (x, w) in a and (w, y) in b, or None.

    Candidates are tried in a fixed order: the midpoint (x+y)/2 when x != y,
    then x, then y, then max(x, y) + 1, then min(x, y) - 1.  These cover every
    position of w relative to x and y, so None means no witness exists.
    """
    x, y = Fraction(x), Fraction(y)
    lo, hi = min(x, y), max(x, y)
    candidates = [(x + y) / 2] if x != y else []
    candidates += [x, y, hi + 1, lo - 1]
    for w in candidates:
        if member(x, w, a) and member(w, y, b):
            return w
    return None


def point_algebra() -> FiniteAlgebra:
    """The three-element point algebra with elements z, e, r in that order."""
    return FiniteAlgebra(
        ("z", "e", "r"),
        comp=((0, 0, 0),
              (0, 1, 2),
              (0, 2, 2)),
        meet=((0, 0, 0),
              (0, 1, 0),
              (0, 0, 2)),
    )


def symbolic_model(full: bool = False) -> ConcreteModel:
    """The relations z, e, r over Q, or all eight basis sets when ``full``."""
    if full:
        order = (0, EQ, LT, GT, LT | EQ, EQ | GT, LT | GT, 7)
        return ConcreteModel(None, tuple((_NAMES[m], BasisSet(m)) for m in order))
    return ConcreteModel(None, (("z", Z), ("e", E), ("r", R)))


@dataclass(frozen=True)
class TableDiscrepancy:
    operation: str
    a: str
    b: str
    claimed: str
    pair: tuple
    witness: Optional[Fraction]
    reason: str

    def __str__(self):
        sym = ";" if self.operation == "comp" else "."
        x, y = self.pair
        return (f"cell ({self.a},{self.b}): table says {self.a}{sym}{self.b} = "
                f"{self.claimed}, but at ({x}, {y}) {self.reason}")


def _random_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def sample_pairs(sample_count: int, seed: int, bound: int = 10**6):
    """Seeded ordered pairs; each sample x < y yields (x, y), (x, x) and (y, x)."""
    rng = random.Random(seed)
    out = []
    for _ in range(sample_count):
        x = _random_rational(rng, bound)
        y = _random_rational(rng, bound)
        while y == x:
            y = _random_rational(rng, bound)
        x, y = min(x, y), max(x, y)
        out += [(x, y), (x, x), (y, x)]
    return out


def verify_tables(sample_count: int, seed: int = 0,
                  algebra: Optional[FiniteAlgebra] = None,
                  interpretation: Optional[Mapping[str, BasisSet]] = None) -> Verdict:
    """Check an algebra's tables against the order on sampled rational pairs.

    Defaults to the point algebra read as z = {}, e = {=}, r = {<}.  For each
    composition cell, a pair lies in the claimed result exactly when a
    constructive witness exists; for each meet cell, exactly when it lies in
    both arguments.  Returns the first discrepancy found.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be at least 1")
    if algebra is None:
        algebra = point_algebra()
    if interpretation is None:
        interpretation = {"z": Z, "e": E, "r": R}
    names = algebra.elements
    rel = [interpretation[name] for name in names]
    pairs = sample_pairs(sample_count, seed)
    m = algebra.size
    for i in range(m):
        for j in range(m):
            a, b = rel[i], rel[j]
            c = rel[algebra.comp[i][j]]
            for x, y in pairs:
                w = witness(x, y, a, b)
                if w is not None and not (member(x, w, a) and member(w, y, b)):
                    return _fail("comp", names, i, j, algebra.comp, (x, y), w,
                                 f"witness {w} does not validate")
                claimed = member(x, y, c)
                if claimed and w is None:
                    return _fail("comp", names, i, j, algebra.comp, (x, y), None,
                                 "the pair is claimed but has no witness")
                if not claimed and w is not None:
                    return _fail("comp", names, i, j, algebra.comp, (x, y), w,
                                 f"the pair is witnessed by {w} but not claimed")
            d = rel[algebra.meet[i][j]]
            for x, y in pairs:
                both = member(x, y, a) and member(x, y, b)
                if both != member(x, y, d):
                    return _fail("meet", names, i, j, algebra.meet, (x, y), None,
                                 "membership in both arguments disagrees with the claim")
    return Verdict(())


def _fail(op, names, i, j, table, pair, w, reason):
    return Verdict((TableDiscrepancy(op, names[i], names[j], names[table[i][j]],
                                     pair, w, reason),))
