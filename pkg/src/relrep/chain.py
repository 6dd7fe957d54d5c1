"""The infinite-chain argument, run on concrete models.

Given relations z, e, r on a set U with

    r;e = r = e;r,   r;r = r,   z;r = z = r;z,   r.e = z,   z, e, r distinct,

one first shows that r meets the identity only inside z, then builds points
y, x_0, x_1, ... with every (x_i, x_j), i < j, and every (x_i, y) in r but not
in z.  Those points are pairwise distinct, so U cannot be finite.

On the symbolic model over Q (z = {}, e = {=}, r = {<}) the construction runs
for as long as asked, with x_0 = 0, y = 1 and midpoint witnesses.  On a
finite triple it must break down, and the :class:`FailureReport` names the
hypothesis that fails and a pair where it fails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .errors import ParseError
from .point import EQ, GT, LT, BasisSet, E, R, Z, witness
from .relation import Relation

HYPOTHESES = ("R_E", "E_R", "R_R", "Z_R", "R_Z", "MEET", "DISTINCT")


@dataclass(frozen=True)
class FiniteTriple:
    base_size: int
    z: Relation
    e: Relation
    r: Relation

    def __post_init__(self):
        for name in "zer":
            if getattr(self, name).base_size != self.base_size:
                raise ValueError(f"relation {name} is not over base size {self.base_size}")

    def holds(self, name: str, x, y) -> bool:
        return (x, y) in getattr(self, name)

    def find_witness(self, first: str, second: str, x, y):
        a, b = getattr(self, first), getattr(self, second)
        for w in range(self.base_size):
            if (x, w) in a and (w, y) in b:
                return w
        return None

    def diagonal_points(self):
        return range(self.base_size)

    def off_diagonal_pairs(self):
        return ((x, y) for x, y in itertools.product(range(self.base_size), repeat=2)
                if x != y)

    def first_difference(self, p: Relation, q: Relation):
        diff = p.bits ^ q.bits
        if not diff:
            return None
        return divmod((diff & -diff).bit_length() - 1, self.base_size)


_REPRESENTATIVE = {LT: (Fraction(0), Fraction(1)), EQ: (Fraction(0), Fraction(0)),
                   GT: (Fraction(1), Fraction(0))}


@dataclass(frozen=True)
class SymbolicTriple:
    """Three order-definable relations on Q; defaults to the point algebra's."""

    z: BasisSet = Z
    e: BasisSet = E
    r: BasisSet = R

    base_size = None

    def __post_init__(self):
        object.__setattr__(self, "_masks", {k: getattr(self, k).mask for k in "zer"})

    def holds(self, name: str, x, y) -> bool:
        # hot path of chain verification; comparison() inlined
        mask = self._masks[name]
        if mask == 0 or mask == 7:
            return mask == 7
        d = x.numerator * y.denominator - y.numerator * x.denominator
        return bool((LT if d < 0 else GT if d else EQ) & mask)

    def find_witness(self, first: str, second: str, x, y):
        return witness(x, y, getattr(self, first), getattr(self, second))

    def diagonal_points(self):
        # every (x, x) falls in the same basic relation
        return (Fraction(0),)

    def off_diagonal_pairs(self):
        return (_REPRESENTATIVE[LT], _REPRESENTATIVE[GT])

    def first_difference(self, p: BasisSet, q: BasisSet):
        diff = p.mask ^ q.mask
        for basic in (LT, EQ, GT):
            if diff & basic:
                return _REPRESENTATIVE[basic]
        return None


ModelTriple = Union[FiniteTriple, SymbolicTriple]


@dataclass(frozen=True)
class HypothesisFailure:
    hypothesis: str
    witness: tuple

    def __str__(self):
        if self.hypothesis == "DISTINCT":
            return f"DISTINCT fails: {self.witness[0]} = {self.witness[1]}"
        return f"{self.hypothesis} fails at {_fmt_pair(self.witness)}"


def _fmt_pair(pair):
    return "(" + ", ".join(str(p) for p in pair) + ")"


def check_hypotheses(m: ModelTriple) -> list[HypothesisFailure]:
    z, e, r = m.z, m.e, m.r
    equations = (
        ("R_E", r.compose(e), r),
        ("E_R", e.compose(r), r),
        ("R_R", r.compose(r), r),
        ("Z_R", z.compose(r), z),
        ("R_Z", r.compose(z), z),
        ("MEET", r.intersect(e), z),
    )
    failures = [HypothesisFailure(name, m.first_difference(lhs, rhs))
                for name, lhs, rhs in equations if lhs != rhs]
    for p, q in (("z", "e"), ("z", "r"), ("e", "r")):
        if getattr(m, p) == getattr(m, q):
            failures.append(HypothesisFailure("DISTINCT", (p, q)))
            break
    return failures


@dataclass(frozen=True)
class FailureReport:
    """First step of the argument that a model blocks.

    ``pair`` is a pair at which ``hypothesis`` is actually violated.
    """

    hypothesis: str
    pair: Optional[tuple]
    stage: str
    detail: str = ""

    def __str__(self):
        where = f" at {_fmt_pair(self.pair)}" if self.pair is not None else ""
        tail = f" ({self.detail})" if self.detail else ""
        return f"{self.hypothesis} fails{where} [{self.stage}]{tail}"


@dataclass(frozen=True)
class ConfirmedInclusion:
    """Id & r is inside z; ``traces`` holds (x, y) for each reflexive (x, x) in r."""

    traces: tuple


LemmaOutcome = Union[ConfirmedInclusion, FailureReport]


def derive_identity_lemma(m: ModelTriple) -> LemmaOutcome:
    """Show (x, x) in r implies (x, x) in z, one point at a time."""
    traces = []
    for x in m.diagonal_points():
        if not m.holds("r", x, x):
            continue
        # r = r;e gives y with (x,y) in r and (y,x) in e
        y = m.find_witness("r", "e", x, x)
        if y is None:
            return FailureReport("R_E", (x, x), "lemma", "(x,x) in r but not in r;e")
        # (y,x) in e;r = r
        if not m.holds("r", y, x):
            return FailureReport("E_R", (y, x), "lemma", f"in e;r via {x} but not in r")
        # (y,x) in r.e = z
        if not m.holds("z", y, x):
            return FailureReport("MEET", (y, x), "lemma", "in r.e but not in z")
        # (x,x) in r;z = z via y
        if not m.holds("z", x, x):
            return FailureReport("R_Z", (x, x), "lemma", f"in r;z via {y} but not in z")
        traces.append((x, y))
    return ConfirmedInclusion(tuple(traces))


def find_start(m: ModelTriple) -> Union[tuple, FailureReport]:
    """A pair (x_0, y) of distinct points in r but not in z."""
    for x, y in m.off_diagonal_pairs():
        if m.holds("r", x, y) and not m.holds("z", x, y):
            return (x, y)
    if m.r == m.z:
        return FailureReport("DISTINCT", None, "start", "r minus z is empty since r = z")
    if m.z.intersect(m.r) != m.z:
        pair = m.first_difference(m.z, m.z.intersect(m.r))
        return FailureReport("MEET", pair, "start", "z is not inside r, so z != r.e")
    lemma = derive_identity_lemma(m)
    if isinstance(lemma, FailureReport):
        return lemma
    raise AssertionError("r minus z lies on the diagonal yet the identity lemma holds")


class Membership(NamedTuple):
    """Claim (x_i, x_j) in r minus z; ``j`` None stands for the anchor y.

    ``witness`` is the point w used to get (x_i, x_j) from r;r, if any.
    """

    i: int
    j: Optional[int]
    witness: object = None


@dataclass(frozen=True)
class ChainCertificate:
    y: object
    points: tuple
    memberships: tuple

    @property
    def length(self) -> int:
        return len(self.points) - 1


def _extension(m: ModelTriple, points, y, seen=None):
    """New point and memberships for one step, or a FailureReport.

    ``seen`` may carry set(points) across steps; rebuilding it each time is
    slow for the dyadic chain, whose Fraction hashes repeat every 61 points.
    """
    n = len(points) - 1
    xn = points[-1]
    if seen is None:
        seen = set(points)
    # r = r;r applied to (x_n, y)
    w = m.find_witness("r", "r", xn, y)
    if w is None:
        return FailureReport("R_R", (xn, y), "extend", "(x_n,y) in r but not in r;r")
    if m.holds("z", xn, w):
        return FailureReport("Z_R", (xn, y), "extend", f"in z;r via {w} but not in z")
    if m.holds("z", w, y):
        return FailureReport("R_Z", (xn, y), "extend", f"in r;z via {w} but not in z")
    new = [Membership(n, n + 1), Membership(n + 1, None)]
    for i in range(n):
        xi = points[i]
        if not m.holds("r", xi, w):
            return FailureReport("R_R", (xi, w), "extend", f"in r;r via {xn} but not in r")
        if m.holds("z", xi, w):
            return FailureReport("Z_R", (xi, y), "extend", f"in z;r via {w} but not in z")
        new.append(Membership(i, n + 1, xn))
    if w == y or w in seen:
        lemma = derive_identity_lemma(m)
        if isinstance(lemma, FailureReport):
            return lemma
        raise AssertionError(f"repeated chain point {w} although the identity lemma holds")
    return w, new


def start_certificate(m: ModelTriple) -> Union[ChainCertificate, FailureReport]:
    start = find_start(m)
    if isinstance(start, FailureReport):
        return start
    x0, y = start
    return ChainCertificate(y, (x0,), (Membership(0, None),))


def extend_chain(m: ModelTriple, cert: ChainCertificate) -> Union[ChainCertificate, FailureReport]:
    """Add one point x_{n+1}; the input certificate is a prefix of the result."""
    step = _extension(m, cert.points, cert.y)
    if isinstance(step, FailureReport):
        return step
    w, new = step
    return ChainCertificate(cert.y, cert.points + (w,), cert.memberships + tuple(new))


def run_chain(m: ModelTriple, depth: int) -> Union[ChainCertificate, FailureReport]:
    """Build a chain x_0..x_depth below y and re-verify it from scratch."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    lemma = derive_identity_lemma(m)
    if isinstance(lemma, FailureReport):
        return lemma
    cert = start_certificate(m)
    if isinstance(cert, FailureReport):
        return cert
    points, memberships, y = list(cert.points), list(cert.memberships), cert.y
    seen = set(points)
    for _ in range(depth):
        step = _extension(m, points, y, seen)
        if isinstance(step, FailureReport):
            return step
        w, new = step
        points.append(w)
        seen.add(w)
        memberships.extend(new)
    cert = ChainCertificate(y, tuple(points), tuple(memberships))
    problems = verify_certificate(m, cert)
    if problems:
        raise AssertionError(f"constructed certificate fails verification: {problems[0]}")
    return cert


def verify_certificate(m: ModelTriple, cert: ChainCertificate) -> list[str]:
    """Independent check of a certificate using membership queries only.

    Returns a list of problems; empty means every (x_i, x_j) with i < j and
    every (x_i, y) lies in r but not in z, all points are distinct, the
    recorded claims are exactly those pairs, and each recorded witness w has
    (x_i, w) and (w, x_j) in r.
    """
    problems = []
    pts, y = cert.points, cert.y
    holds = m.holds
    if len(set(pts) | {y}) != len(pts) + 1:
        problems.append("chain points and anchor are not pairwise distinct")
    for j in range(len(pts)):
        xj = pts[j]
        for i in range(j):
            xi = pts[i]
            if not holds("r", xi, xj) or holds("z", xi, xj):
                problems.append(f"pair {i} {j} not in r minus z")
    for i, xi in enumerate(pts):
        if not holds("r", xi, y) or holds("z", xi, y):
            problems.append(f"pair {i} y not in r minus z")

    claimed = set()
    for mem in cert.memberships:
        key = (mem.i, mem.j)
        if key in claimed:
            problems.append(f"pair {mem.i} {mem.j} recorded twice")
        claimed.add(key)
        if mem.witness is not None:
            target = y if mem.j is None else pts[mem.j]
            xi = pts[mem.i]
            if not (holds("r", xi, mem.witness) and holds("r", mem.witness, target)):
                problems.append(f"witness {mem.witness} for pair {mem.i} {mem.j} fails")
    expected = {(i, j) for j in range(len(pts)) for i in range(j)}
    expected |= {(i, None) for i in range(len(pts))}
    if claimed != expected:
        problems.append(f"recorded claims differ from required pairs "
                        f"({len(claimed)} recorded, {len(expected)} required)")
    return problems


def format_certificate(cert: ChainCertificate) -> str:
    """Line-oriented text form; see the README for the grammar."""
    lines = [f"chain n={cert.length} y={cert.y}"]
    lines += [f"x {i} {p}" for i, p in enumerate(cert.points)]
    for mem in cert.memberships:
        j = "y" if mem.j is None else mem.j
        w = "-" if mem.witness is None else mem.witness
        lines.append(f"pair {mem.i} {j} in r not-z witness {w}")
    return "\n".join(lines) + "\n"


def _point(token: str, lineno: int, col: int):
    try:
        q = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad point {token!r}", lineno, col) from None
    return int(q) if q.denominator == 1 and "/" not in token else q


def parse_certificate(text: str) -> ChainCertificate:
    lines = [(k, line) for k, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not lines:
        raise ParseError("empty certificate")
    lineno, head = lines[0]
    tokens = head.split()
    if (len(tokens) != 3 or tokens[0] != "chain" or not tokens[1].startswith("n=")
            or not tokens[2].startswith("y=")):
        raise ParseError("expected 'chain n=<len> y=<point>'", lineno, 1)
    try:
        length = int(tokens[1][2:])
    except ValueError:
        raise ParseError("bad chain length", lineno, head.index("n=") + 3) from None
    y = _point(tokens[2][2:], lineno, head.index("y=") + 3)
    points, memberships = [], []
    for lineno, line in lines[1:]:
        tok = line.split()
        if tok[0] == "x":
            if len(tok) != 3 or tok[1] != str(len(points)):
                raise ParseError(f"expected 'x {len(points)} <point>'", lineno, 1)
            points.append(_point(tok[2], lineno, line.index(tok[2]) + 1))
        elif tok[0] == "pair":
            if len(tok) != 8 or tok[3:7] != ["in", "r", "not-z", "witness"]:
                raise ParseError("expected 'pair <i> <j|y> in r not-z witness <w|->'", lineno, 1)
            try:
                i = int(tok[1])
                j = None if tok[2] == "y" else int(tok[2])
            except ValueError:
                raise ParseError("bad pair indices", lineno, 6) from None
            w = None if tok[7] == "-" else _point(tok[7], lineno, line.rindex(tok[7]) + 1)
            memberships.append(Membership(i, j, w))
        else:
            raise ParseError(f"unexpected line starting with {tok[0]!r}", lineno, 1)
    if len(points) != length + 1:
        raise ParseError(f"header says n={length} but {len(points)} points follow")
    return ChainCertificate(y, tuple(points), tuple(memberships))
