"""Text formats for algebras and for named relations on a finite base.

Algebra files::

    # comment to end of line
    elements: z e r
    table comp:
    z z z
    z e r
    z r r
    table meet:
    z z z
    z e z
    z z r

Row i, column j of a table names ``op(elements[i], elements[j])``.

Relation files::

    base 2
    rel z:
    rel e:
    0 0
    1 1
    rel r:
    0 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .algebra import FiniteAlgebra
from .chain import FiniteTriple
from .errors import ParseError
from .relation import Relation

_TOKEN = re.compile(r"\S+")
_SECTIONS = ("comp", "meet")


def _lines(text: str):
    """(line number, [(column, token), ...]) for each non-blank line, comments removed."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if tokens:
            yield lineno, tokens


@dataclass(frozen=True)
class AlgebraSpecFile:
    algebra: FiniteAlgebra
    # section name ("elements", "comp", "meet") -> line of its header
    locations: dict = field(default_factory=dict, compare=False)


def parse_algebra(text: str) -> AlgebraSpecFile:
    lines = list(_lines(text))
    end_line = len(text.splitlines()) + 1
    names = None
    index = {}
    tables = {}
    locations = {}
    k = 0
    while k < len(lines):
        lineno, tokens = lines[k]
        col, head = tokens[0]
        if head == "elements:":
            if names is not None:
                raise ParseError("duplicate section 'elements:'", lineno, col)
            names = [tok for _, tok in tokens[1:]]
            if not names:
                raise ParseError("'elements:' lists no names", lineno, col)
            for c, name in tokens[1:]:
                if name in index:
                    raise ParseError(f"duplicate element name {name!r}", lineno, c)
                if ":" in name:
                    raise ParseError(f"bad element name {name!r}", lineno, c)
                index[name] = len(index)
            locations["elements"] = lineno
            k += 1
        elif head == "table":
            if len(tokens) != 2 or tokens[1][1] not in ("comp:", "meet:"):
                raise ParseError("expected 'table comp:' or 'table meet:'", lineno, col)
            op = tokens[1][1][:-1]
            if op in tables:
                raise ParseError(f"duplicate section 'table {op}:'", lineno, col)
            if names is None:
                raise ParseError("table before 'elements:' line", lineno, col)
            m = len(names)
            rows = []
            for r in range(m):
                if k + 1 + r >= len(lines):
                    raise ParseError(f"table {op}: has {r} rows, expected {m}", end_line, 1)
                rlineno, rtokens = lines[k + 1 + r]
                if rtokens[0][1] in ("table", "elements:"):
                    raise ParseError(f"table {op}: has {r} rows, expected {m}",
                                     rlineno, rtokens[0][0])
                if len(rtokens) != m:
                    raise ParseError(f"row has {len(rtokens)} entries, expected {m}",
                                     rlineno, rtokens[0][0])
                row = []
                for c, tok in rtokens:
                    if tok not in index:
                        raise ParseError(f"unknown element {tok!r}", rlineno, c)
                    row.append(index[tok])
                rows.append(row)
            tables[op] = rows
            locations[op] = lineno
            k += 1 + m
        else:
            raise ParseError(f"unexpected {head!r}", lineno, col)
    if names is None:
        raise ParseError("elements: absent", end_line, 1)
    for op in _SECTIONS:
        if op not in tables:
            raise ParseError(f"table {op}: absent", end_line, 1)
    algebra = FiniteAlgebra(tuple(names), tables["comp"], tables["meet"])
    return AlgebraSpecFile(algebra, locations)


def format_algebra(algebra: FiniteAlgebra) -> str:
    names = algebra.elements
    out = ["elements: " + " ".join(names)]
    for op, table in (("comp", algebra.comp), ("meet", algebra.meet)):
        out.append(f"table {op}:")
        out += [" ".join(names[v] for v in row) for row in table]
    return "\n".join(out) + "\n"


def canonical_point_algebra_text() -> str:
    return resources.files("relrep").joinpath("data/point_algebra.alg").read_text()


def parse_relations(text: str) -> tuple[int, list[tuple[str, Relation]]]:
    """Base size and named relations, in file order."""
    base = None
    named: list[tuple[str, list]] = []
    for lineno, tokens in _lines(text):
        col, head = tokens[0]
        if head == "base":
            if base is not None:
                raise ParseError("duplicate 'base' line", lineno, col)
            if len(tokens) != 2:
                raise ParseError("expected 'base <n>'", lineno, col)
            c, tok = tokens[1]
            if not tok.isdigit() or int(tok) < 1:
                raise ParseError(f"base size must be a positive integer, got {tok!r}", lineno, c)
            base = int(tok)
        elif head == "rel":
            if base is None:
                raise ParseError("'rel' section before 'base' line", lineno, col)
            if len(tokens) != 2 or not tokens[1][1].endswith(":") or len(tokens[1][1]) < 2:
                raise ParseError("expected 'rel <name>:'", lineno, col)
            name = tokens[1][1][:-1]
            if any(name == other for other, _ in named):
                raise ParseError(f"duplicate relation {name!r}", lineno, tokens[1][0])
            named.append((name, []))
        else:
            if not named:
                raise ParseError(f"unexpected {head!r}", lineno, col)
            if len(tokens) != 2:
                raise ParseError("expected a pair 'x y'", lineno, col)
            pair = []
            for c, tok in tokens:
                if not tok.isdigit() or int(tok) >= base:
                    raise ParseError(f"point {tok!r} outside base 0..{base - 1}", lineno, c)
                pair.append(int(tok))
            named[-1][1].append(tuple(pair))
    if base is None:
        raise ParseError("'base' line absent", len(text.splitlines()) + 1, 1)
    if not named:
        raise ParseError("no 'rel' sections", len(text.splitlines()) + 1, 1)
    return base, [(name, Relation.from_pairs(base, pairs)) for name, pairs in named]


def format_relations(base: int, named) -> str:
    out = [f"base {base}"]
    for name, rel in named:
        out.append(f"rel {name}:")
        out += [f"{x} {y}" for x, y in sorted(rel)]
    return "\n".join(out) + "\n"


def parse_model_triple(text: str) -> FiniteTriple:
    """A relation file defining exactly z, e and r."""
    base, named = parse_relations(text)
    rels = dict(named)
    if sorted(rels) != ["e", "r", "z"]:
        raise ParseError(f"expected relations z, e, r; got {', '.join(rels)}")
    return FiniteTriple(base, rels["z"], rels["e"], rels["r"])
