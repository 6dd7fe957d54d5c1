"""Binary relations on a finite base set {0, ..., n-1}.

A relation is stored as an n x n bit matrix packed into a single Python
int: pair (x, y) is bit ``x * n + y``.  Row x of the matrix is therefore the
n-bit slice starting at ``x * n``, and composition is a row-OR sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Relation:
    base_size: int
    bits: int = 0

    def __post_init__(self):
        n = self.base_size
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"base size must be a positive integer, got {n!r}")
        if self.bits < 0 or self.bits >> (n * n):
            raise ValueError(f"bits {self.bits:#x} out of range for base size {n}")

    @classmethod
    def from_pairs(cls, base_size: int, pairs: Iterable[tuple[int, int]]) -> Relation:
        if base_size < 1:
            raise ValueError(f"base size must be a positive integer, got {base_size}")
        bits = 0
        for x, y in pairs:
            if not (0 <= x < base_size and 0 <= y < base_size):
                raise ValueError(f"pair {(x, y)} outside base of size {base_size}")
            bits |= 1 << (x * base_size + y)
        return cls(base_size, bits)

    @classmethod
    def from_rows(cls, base_size: int, rows: Iterable[int]) -> Relation:
        bits = 0
        for x, row in enumerate(rows):
            bits |= row << (x * base_size)
        return cls(base_size, bits)

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(self)

    def rows(self) -> tuple[int, ...]:
        n = self.base_size
        mask = (1 << n) - 1
        return tuple((self.bits >> (x * n)) & mask for x in range(n))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        n, bits = self.base_size, self.bits
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            yield divmod(i, n)
            bits ^= low

    def __contains__(self, pair) -> bool:
        x, y = pair
        n = self.base_size
        return 0 <= x < n and 0 <= y < n and bool(self.bits >> (x * n + y) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def issubset(self, other: Relation) -> bool:
        _check_same_base(self, other)
        return self.bits & ~other.bits == 0

    def compose(self, other: Relation) -> Relation:
        return compose(self, other)

    def intersect(self, other: Relation) -> Relation:
        return intersect(self, other)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({x},{y})" for x, y in sorted(self)) + "}"


def _check_same_base(a: Relation, b: Relation) -> None:
    if a.base_size != b.base_size:
        raise ValueError(
            f"relations over different base sizes: {a.base_size} vs {b.base_size}"
        )


def compose_rows(a_rows, b_rows) -> list[int]:
    """Boolean matrix product of two row-mask sequences."""
    out = []
    for row in a_rows:
        acc = 0
        while row:
            low = row & -row
            acc |= b_rows[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return out


def compose(a: Relation, b: Relation) -> Relation:
    """Relational product a;b: (x, y) such that (x, z) in a and (z, y) in b for some z."""
    _check_same_base(a, b)
    return Relation.from_rows(a.base_size, compose_rows(a.rows(), b.rows()))


def intersect(a: Relation, b: Relation) -> Relation:
    _check_same_base(a, b)
    return Relation(a.base_size, a.bits & b.bits)


def identity(n: int) -> Relation:
    return Relation.from_pairs(n, ((x, x) for x in range(n)))


def full(n: int) -> Relation:
    if n < 1:
        raise ValueError(f"base size must be a positive integer, got {n}")
    return Relation(n, (1 << (n * n)) - 1)


def empty(n: int) -> Relation:
    return Relation(n, 0)


def complement(a: Relation) -> Relation:
    return Relation(a.base_size, full(a.base_size).bits & ~a.bits)


def difference(a: Relation, b: Relation) -> Relation:
    _check_same_base(a, b)
    return Relation(a.base_size, a.bits & ~b.bits)


def all_relations(n: int) -> Iterator[Relation]:
    """Every relation on an n-element base, in increasing bit order."""
    for bits in range(1 << (n * n)):
        yield Relation(n, bits)
