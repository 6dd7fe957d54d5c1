"""Command-line front end.

Exit codes: 0 success or representation found, 1 negative result, 2 input
error, 3 resource limit reached.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import extract_tables, generate_closure, necessary_laws
from .chain import (FailureReport, SymbolicTriple, check_hypotheses, format_certificate,
                    run_chain)
from .cnf import encode_cnf
from .errors import ParseError
from .point import symbolic_model
from .search import (DEFAULT_NODE_LIMIT, ExhaustedNone, Found, LimitReached, SearchOptions,
                     SearchProblem, nonrep_certificate, search)
from .specfile import format_algebra, parse_algebra, parse_model_triple, parse_relations

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _read(path):
    with open(path) as f:
        return f.read()


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, indent=2))
    elif text:
        print(text)


def _pairs(rel):
    return [[x, y] for x, y in sorted(rel)]


def _rep_lines(rep):
    return [f"{name} -> {rep.image(name)}" for name in rep.algebra.elements]


def _rep_json(rep):
    return {name: _pairs(rep.image(name)) for name in rep.algebra.elements}


def cmd_validate(args):
    algebra = parse_algebra(_read(args.file)).algebra
    violations = necessary_laws(algebra)
    text = "ok" if not violations else "\n".join(str(v) for v in violations)
    _emit(args, text, {"ok": not violations,
                       "violations": [{"law": v.law, "witness": list(v.witness)}
                                      for v in violations]})
    return EXIT_OK if not violations else EXIT_NEGATIVE


def _node_limit(args):
    if args.node_limit is not None:
        return args.node_limit
    env = os.environ.get("RELREP_NODE_LIMIT")
    if env:
        try:
            return _positive(env)
        except argparse.ArgumentTypeError as exc:
            raise ParseError(f"RELREP_NODE_LIMIT: {exc}") from None
    return DEFAULT_NODE_LIMIT


def cmd_search(args):
    algebra = parse_algebra(_read(args.file)).algebra
    if args.size is None and args.max_size is None:
        raise ParseError("one of --size or --max-size is required")
    if args.dimacs:
        if args.size is None:
            raise ParseError("--dimacs needs --size")
        instance = encode_cnf(algebra, args.size)
        with open(args.dimacs, "w") as f:
            f.write(instance.dimacs())
        _emit(args, f"wrote p cnf {instance.variable_count} {len(instance.clauses)} "
                    f"to {args.dimacs}",
              {"dimacs": args.dimacs, "variables": instance.variable_count,
               "clauses": len(instance.clauses)})
        return EXIT_OK
    options = SearchOptions(deterministic=args.deterministic,
                            symmetry_pruning=args.symmetry,
                            node_limit=_node_limit(args))
    if args.max_size is not None:
        report = nonrep_certificate(algebra, args.max_size, options)
        lines, sizes = [], []
        for s in report.sizes:
            lines.append(f"size {s.base_size}: {s.status} "
                         f"({s.method}, {s.outcome.nodes_explored} nodes)")
            entry = {"size": s.base_size, "method": s.method, "status": s.status,
                     "nodes": s.outcome.nodes_explored}
            if isinstance(s.outcome, Found):
                lines += ["  " + line for line in _rep_lines(s.outcome.representation)]
                entry["representation"] = _rep_json(s.outcome.representation)
            sizes.append(entry)
        lines.append(f"verdict: {report.verdict}")
        _emit(args, "\n".join(lines), {"verdict": report.verdict, "sizes": sizes})
        return {"representable": EXIT_OK, "none": EXIT_NEGATIVE,
                "inconclusive": EXIT_LIMIT}[report.verdict]

    n = args.size
    outcome = search(SearchProblem(algebra, n, options))
    data = {"size": n, "nodes": outcome.nodes_explored}
    if isinstance(outcome, Found):
        rep = outcome.representation
        data.update(status="found", representation=_rep_json(rep))
        text = "\n".join([f"found representation over base size {n}"] + _rep_lines(rep))
        code = EXIT_OK
    elif isinstance(outcome, ExhaustedNone):
        data.update(status="none")
        text = f"no representation over base size {n} ({outcome.nodes_explored} nodes)"
        code = EXIT_NEGATIVE
    else:
        assert isinstance(outcome, LimitReached)
        data.update(status="inconclusive")
        text = f"node limit reached at base size {n} ({outcome.nodes_explored} nodes)"
        code = EXIT_LIMIT
    _emit(args, text, data)
    return code


def _cert_json(cert):
    return {"length": cert.length, "y": str(cert.y),
            "points": [str(p) for p in cert.points],
            "memberships": [[m.i, "y" if m.j is None else m.j,
                             None if m.witness is None else str(m.witness)]
                            for m in cert.memberships]}


def cmd_chain(args):
    if args.model == "qsymbolic":
        triple = SymbolicTriple()
    else:
        triple = parse_model_triple(_read(args.model))
    result = run_chain(triple, args.depth)
    if isinstance(result, FailureReport):
        failures = check_hypotheses(triple)
        text = "\n".join([str(result)] + [f"hypothesis {f}" for f in failures])
        _emit(args, text, {
            "failure": {"hypothesis": result.hypothesis,
                        "pair": None if result.pair is None else [str(p) for p in result.pair],
                        "stage": result.stage, "detail": result.detail},
            "hypotheses": [{"hypothesis": f.hypothesis, "witness": [str(w) for w in f.witness]}
                           for f in failures]})
        return EXIT_NEGATIVE
    if args.output:
        with open(args.output, "w") as f:
            f.write(format_certificate(result))
        _emit(args, f"wrote chain of length {result.length} to {args.output}",
              {"output": args.output, "length": result.length})
    elif args.json:
        _emit(args, "", _cert_json(result))
    else:
        sys.stdout.write(format_certificate(result))
    return EXIT_OK


def cmd_tables(args):
    if args.closure:
        base, seeds = parse_relations(_read(args.closure))
        model = generate_closure(seeds)
        header = [f"# closure over base {base}"]
        header += [f"# {name} = {rel}" for name, rel in model.members]
    else:
        model = generate_closure(symbolic_model(full=args.full).members)
        header = []
    algebra = extract_tables(model)
    if args.json:
        names = algebra.elements
        _emit(args, "", {"elements": list(names),
                         "comp": [[names[v] for v in row] for row in algebra.comp],
                         "meet": [[names[v] for v in row] for row in algebra.meet]})
    else:
        sys.stdout.write("".join(line + "\n" for line in header) + format_algebra(algebra))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="relrep",
        description="Finite algebras of binary relations under composition and intersection.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check laws every algebra of relations satisfies")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("search", help="look for a representation over a finite base")
    p.add_argument("file")
    p.add_argument("--size", type=_positive)
    p.add_argument("--max-size", type=_positive)
    p.add_argument("--dimacs", metavar="PATH", help="write the CNF instead of searching")
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--symmetry", action="store_true",
                   help="accept only orbit-minimal solutions under base permutations")
    p.add_argument("--node-limit", type=_positive,
                   help=f"default $RELREP_NODE_LIMIT or {DEFAULT_NODE_LIMIT}")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("chain", help="run the chain construction")
    p.add_argument("--model", required=True, help="'qsymbolic' or a relation file with z, e, r")
    p.add_argument("--depth", type=_positive, required=True)
    p.add_argument("--output", metavar="PATH", help="write the certificate here")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("tables", help="print the tables of a model")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--model", choices=["qsymbolic"])
    group.add_argument("--closure", metavar="SEEDS", help="relation file of seed relations")
    p.add_argument("--full", action="store_true",
                   help="with qsymbolic: all eight order-definable relations")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    # --json is accepted before or after the subcommand
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    args.json = as_json
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError) as exc:
        print(f"relrep: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
