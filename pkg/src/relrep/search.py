"""Search for representations of a finite algebra over an n-element base.

The unknowns are the membership bits "element a holds pair (x, y)".  The
search keeps, for every element, a lower and an upper bound relation and
tightens them after each decision using monotonicity of ; and intersection.
When every bit is fixed the bounds force each table entry to hold exactly,
so a leaf that survives propagation is a representation.

:func:`exhaustive_scan` is the dumb brute-force counterpart used to
cross-check the pruning.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .algebra import (MAX_BASE_SIZE, ConcreteModel, FiniteAlgebra, Representation,
                      check_representation)
from .errors import CeilingExceeded
from .relation import Relation, compose

log = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10**8
DEFAULT_CEILING = 2**24


@dataclass(frozen=True)
class SearchOptions:
    # Search is sequential, so runs are always reproducible; the flag is
    # kept so callers can state the requirement explicitly.
    deterministic: bool = True
    symmetry_pruning: bool = False
    node_limit: int = DEFAULT_NODE_LIMIT


@dataclass(frozen=True)
class SearchProblem:
    algebra: FiniteAlgebra
    base_size: int
    options: SearchOptions = field(default_factory=SearchOptions)

    def __post_init__(self):
        if self.base_size < 1:
            raise ValueError("base size must be at least 1")
        if self.base_size > MAX_BASE_SIZE:
            raise ValueError(f"base size {self.base_size} exceeds limit {MAX_BASE_SIZE}")
        if self.options.node_limit < 1:
            raise ValueError("node_limit must be at least 1")


@dataclass(frozen=True)
class Found:
    representation: Representation
    nodes_explored: int = 0


@dataclass(frozen=True)
class ExhaustedNone:
    nodes_explored: int


@dataclass(frozen=True)
class LimitReached:
    nodes_explored: int


SearchOutcome = Union[Found, ExhaustedNone, LimitReached]


def representation_from_bits(algebra: FiniteAlgebra, n: int, images) -> Representation:
    """Wrap per-element relation bit patterns as a Representation over their image."""
    members = tuple((name, Relation(n, bits)) for name, bits in zip(algebra.elements, images))
    return Representation(algebra, ConcreteModel(n, members), tuple(range(algebra.size)))


def _permuted(bits: int, n: int, perm) -> int:
    out = 0
    while bits:
        low = bits & -bits
        x, y = divmod(low.bit_length() - 1, n)
        out |= 1 << (perm[x] * n + perm[y])
        bits ^= low
    return out


def is_orbit_minimal(images, n: int) -> bool:
    """True if no permutation of the base yields a lexicographically smaller image tuple."""
    images = tuple(images)
    for perm in itertools.permutations(range(n)):
        if tuple(_permuted(b, n, perm) for b in images) < images:
            return False
    return True


class _Propagator:
    def __init__(self, algebra: FiniteAlgebra, n: int):
        self.n = n
        self.m = m = algebra.size
        self.bits = [tuple(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
        self.comp = [(a * n, b * n, algebra.comp[a][b] * n)
                     for a in range(m) for b in range(m)]
        self.meet = [(a * n, b * n, algebra.meet[a][b] * n)
                     for a in range(m) for b in range(m)]

    def propagate(self, low: list, up: list) -> bool:
        """Tighten bounds in place to a fixpoint; False on contradiction."""
        bits, rows = self.bits, range(self.n)
        while True:
            changed = False
            for a, b, c in self.comp:
                for x in rows:
                    ax, cx = a + x, c + x
                    lo = 0
                    for z in bits[low[ax]]:
                        lo |= low[b + z]
                    hi = 0
                    for z in bits[up[ax]]:
                        hi |= up[b + z]
                    lc, uc = low[cx] | lo, up[cx] & hi
                    if lc != low[cx] or uc != up[cx]:
                        low[cx], up[cx] = lc, uc
                        changed = True
                    uc = up[cx]
                    # (x,z) in a and (x,y) not in c rule out (z,y) in b
                    for z in bits[low[ax]]:
                        ub = up[b + z]
                        if ub & ~uc:
                            up[b + z] = ub & uc
                            changed = True
                    # each required (x,y) in c needs some z supporting it
                    need = low[cx]
                    if need:
                        ua = up[ax]
                        for y in bits[need]:
                            ybit = 1 << y
                            support = [z for z in bits[ua] if up[b + z] & ybit]
                            if not support:
                                return False
                            if len(support) == 1:
                                z = support[0]
                                if not low[ax] >> z & 1:
                                    low[ax] |= 1 << z
                                    changed = True
                                if not low[b + z] & ybit:
                                    low[b + z] |= ybit
                                    changed = True
                # (z,y) in b and (x,y) not in c rule out (x,z) in a
                for z in rows:
                    lb = low[b + z]
                    if lb:
                        zbit = 1 << z
                        for x in rows:
                            if lb & ~up[c + x] and up[a + x] & zbit:
                                up[a + x] &= ~zbit
                                changed = True
            for a, b, c in self.meet:
                for x in rows:
                    ax, bx, cx = a + x, b + x, c + x
                    v = low[cx] | (low[ax] & low[bx])
                    if v != low[cx]:
                        low[cx] = v
                        changed = True
                    v = up[cx] & up[ax] & up[bx]
                    if v != up[cx]:
                        up[cx] = v
                        changed = True
                    v = low[ax] | low[cx]
                    if v != low[ax]:
                        low[ax] = v
                        changed = True
                    v = low[bx] | low[cx]
                    if v != low[bx]:
                        low[bx] = v
                        changed = True
                    v = up[bx] & ~(low[ax] & ~up[cx])
                    if v != up[bx]:
                        up[bx] = v
                        changed = True
                    v = up[ax] & ~(low[bx] & ~up[cx])
                    if v != up[ax]:
                        up[ax] = v
                        changed = True
            for lo, hi in zip(low, up):
                if lo & ~hi:
                    return False
            if not changed:
                return self._injective(low, up)

    def _injective(self, low, up) -> bool:
        n, seen = self.n, set()
        for a in range(self.m):
            lo = tuple(low[a * n:(a + 1) * n])
            if lo == tuple(up[a * n:(a + 1) * n]):
                if lo in seen:
                    return False
                seen.add(lo)
        return True

    def first_free(self, low, up) -> Optional[tuple[int, int, int]]:
        """Lexicographically first undecided (element, x, y)."""
        n = self.n
        for i, (lo, hi) in enumerate(zip(low, up)):
            free = hi & ~lo
            if free:
                a, x = divmod(i, n)
                return a, x, (free & -free).bit_length() - 1
        return None

    def images(self, low) -> list[int]:
        n = self.n
        return [Relation.from_rows(n, low[a * n:(a + 1) * n]).bits for a in range(self.m)]


PruneHook = Callable[[tuple], None]


def search(problem: SearchProblem, on_prune: Optional[PruneHook] = None) -> SearchOutcome:
    """Depth-first search over membership bits with bound propagation.

    Decisions are taken on the first undecided (element, x, y) in
    lexicographic order, trying False before True.  ``on_prune`` is called
    with the decision path, a tuple of (element, x, y, value), every time a
    branch is refuted by propagation.
    """
    algebra, n, opts = problem.algebra, problem.base_size, problem.options
    prop = _Propagator(algebra, n)
    full_row = (1 << n) - 1
    size = algebra.size * n
    stack = [([0] * size, [full_row] * size, ())]
    nodes = 0
    while stack:
        low, up, path = stack.pop()
        if path:
            if nodes >= opts.node_limit:
                log.info("node limit %d reached", opts.node_limit)
                return LimitReached(nodes)
            nodes += 1
        if not prop.propagate(low, up):
            if on_prune is not None:
                on_prune(path)
            continue
        var = prop.first_free(low, up)
        if var is None:
            images = prop.images(low)
            if opts.symmetry_pruning and not is_orbit_minimal(images, n):
                continue
            rep = representation_from_bits(algebra, n, images)
            if not check_representation(rep):
                raise AssertionError(f"search produced an invalid representation: {images}")
            return Found(rep, nodes)
        a, x, y = var
        i, bit = a * n + x, 1 << y
        low_t = list(low)
        low_t[i] |= bit
        stack.append((low_t, list(up), path + ((a, x, y, True),)))
        up_f = list(up)
        up_f[i] &= ~bit
        stack.append((list(low), up_f, path + ((a, x, y, False),)))
    return ExhaustedNone(nodes)


def exhaustive_scan(algebra: FiniteAlgebra, n: int,
                    ceiling: int = DEFAULT_CEILING) -> SearchOutcome:
    """Try every assignment of relations to elements; no pruning at all."""
    if n < 1:
        raise ValueError("base size must be at least 1")
    m = algebra.size
    per_element = 1 << (n * n)
    required = per_element ** m
    if required > ceiling:
        raise CeilingExceeded(required, ceiling)

    cache = {}

    def comp(p, q):
        key = (p, q)
        if key not in cache:
            cache[key] = compose(Relation(n, p), Relation(n, q)).bits
        return cache[key]

    entries = [(a, b, algebra.comp[a][b], algebra.meet[a][b])
               for a in range(m) for b in range(m)]
    count = 0
    for images in itertools.product(range(per_element), repeat=m):
        count += 1
        if len(set(images)) != m:
            continue
        if all(comp(images[a], images[b]) == images[c]
               and images[a] & images[b] == images[d]
               for a, b, c, d in entries):
            rep = representation_from_bits(algebra, n, images)
            return Found(rep, count)
    return ExhaustedNone(count)


@dataclass(frozen=True)
class SizeResult:
    base_size: int
    method: str
    outcome: SearchOutcome

    @property
    def status(self) -> str:
        return {Found: "found", ExhaustedNone: "none",
                LimitReached: "inconclusive"}[type(self.outcome)]


@dataclass(frozen=True)
class NonRepReport:
    max_size: int
    sizes: tuple[SizeResult, ...]

    @property
    def verdict(self) -> str:
        """"representable", "none" (for every size up to max_size) or "inconclusive"."""
        statuses = [s.status for s in self.sizes]
        if "found" in statuses:
            return "representable"
        if "inconclusive" in statuses:
            return "inconclusive"
        return "none"


def nonrep_certificate(algebra: FiniteAlgebra, max_n: int,
                       options: Optional[SearchOptions] = None,
                       ceiling: int = DEFAULT_CEILING) -> NonRepReport:
    """Decide representability at each base size 1..max_n.

    Sizes whose assignment space fits under ``ceiling`` are settled by
    :func:`exhaustive_scan`, the rest by :func:`search`.  Stops at the first
    size with a representation.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    options = options or SearchOptions()
    results = []
    for n in range(1, max_n + 1):
        if (1 << (n * n)) ** algebra.size <= ceiling:
            method, outcome = "exhaustive", exhaustive_scan(algebra, n, ceiling)
        else:
            method = "search"
            outcome = search(SearchProblem(algebra, n, options))
        log.info("size %d: %s %s", n, method, type(outcome).__name__)
        results.append(SizeResult(n, method, outcome))
        if isinstance(outcome, Found):
            break
    return NonRepReport(max_n, tuple(results))
