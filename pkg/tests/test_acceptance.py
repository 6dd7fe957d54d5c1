"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

The lines are printed past pytest's capture so they show in a plain
``pytest -v`` run.
"""

import itertools
import subprocess
import sys
import time
from pathlib import Path

import pytest

from relrep import (FiniteTriple, Relation, SymbolicTriple, check_hypotheses,
                    check_representation, encode_cnf, identity, nonrep_certificate,
                    point_algebra, run_chain, search, verify_certificate)
from relrep.cli import main
from relrep.search import ExhaustedNone, Found, SearchProblem
from relrep.specfile import parse_algebra

from conftest import dpll

HERE = Path(__file__).parent

GOLDEN_COMP = ["z z z", "z e r", "z r r"]
GOLDEN_MEET = ["z z z", "z e z", "z z r"]


@pytest.fixture
def report(capsys):
    def _report(number, title, ok, seconds, detail=""):
        status = "PASS" if ok else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title} ({seconds:.2f} s){detail}")
    return _report


def test_criterion_1_table_reproduction(capsys, report):
    start = time.perf_counter()
    code = main(["tables", "--model", "qsymbolic"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    lines = out.splitlines()
    alg = parse_algebra(out).algebra
    names = alg.elements
    cells = sum(names[alg.comp[i][j]] == GOLDEN_COMP[i].split()[j]
                for i, j in itertools.product(range(3), repeat=2))
    cells += sum(names[alg.meet[i][j]] == GOLDEN_MEET[i].split()[j]
                 for i, j in itertools.product(range(3), repeat=2))
    r, z, e = (alg.index(k) for k in "rze")
    boxed = (alg.comp[r][z] == z and alg.comp[e][r] == r and alg.comp[r][r] == r
             and alg.meet[r][e] == z)
    ok = (code == 0 and lines[2:5] == GOLDEN_COMP and lines[6:9] == GOLDEN_MEET
          and cells == 18 and boxed and elapsed < 1)
    report(1, "table reproduction", ok, elapsed, f", {cells}/18 cells")
    assert ok


def test_criterion_2_finite_nonrepresentability(report):
    pa = point_algebra()
    start = time.perf_counter()
    small = nonrep_certificate(pa, 3)
    t_small = time.perf_counter() - start
    start = time.perf_counter()
    n4 = search(SearchProblem(pa, 4))
    t_four = time.perf_counter() - start
    methods = [(s.method, s.status) for s in small.sizes]
    expected = [("exhaustive", "none")] * 2 + [("search", "none")]
    counts = [s.outcome.nodes_explored for s in small.sizes[:2]]
    # the external-solver step is manual (see README); an in-repo DPLL stands in
    unsat = all(dpll(encode_cnf(pa, n).clauses, encode_cnf(pa, n).variable_count) is None
                for n in (2, 3))
    ok = (small.verdict == "none" and methods == expected and counts == [8, 4096]
          and isinstance(n4, ExhaustedNone) and unsat
          and t_small < 60 and t_four < 600)
    report(2, "no representation of the point algebra for n = 1..4", ok, t_small + t_four,
           f", n<=3 in {t_small:.1f} s, n=4 in {t_four:.1f} s ({n4.nodes_explored} nodes)")
    assert ok


def test_criterion_3_positive_control(ze, report):
    start = time.perf_counter()
    out = search(SearchProblem(ze, 1))
    ok = isinstance(out, Found) and check_representation(out.representation).ok
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1
    report(3, "{z,e} found at n = 1", ok, elapsed)
    assert ok


def test_criterion_4_chain(report):
    m = SymbolicTriple()
    # run_chain builds the chain and then runs verify_certificate on the result
    # before returning, so this timing covers construction plus one full check
    start = time.perf_counter()
    cert = run_chain(m, 1000)
    elapsed = time.perf_counter() - start
    start = time.perf_counter()
    problems = verify_certificate(m, cert)
    again = time.perf_counter() - start
    points = set(cert.points) | {cert.y}
    pairs = len(cert.points) * (len(cert.points) - 1) // 2 + len(cert.points)
    ok = (not problems and len(cert.points) == 1001 and len(points) == 1002
          and elapsed < 10)
    report(4, "symbolic chain of depth 1000", ok, elapsed,
           f", {pairs} pairs verified, standalone re-check {again:.1f} s")
    assert ok


def test_criterion_5_desk_exhaustion(report):
    start = time.perf_counter()
    counts, all_fail, inclusion = {}, True, True
    for n in (1, 2):
        rels = [Relation(n, b) for b in range(1 << n * n)]
        diag = identity(n)
        counts[n] = 0
        for z, e, r in itertools.product(rels, repeat=3):
            m = FiniteTriple(n, z, e, r)
            failures = check_hypotheses(m)
            counts[n] += 1
            all_fail &= bool(failures)
            if all(f.hypothesis == "DISTINCT" for f in failures):
                inclusion &= diag.intersect(r).issubset(z)
    elapsed = time.perf_counter() - start
    ok = all_fail and inclusion and counts == {1: 8, 2: 4096} and elapsed < 5
    report(5, "every triple over n <= 2 fails a hypothesis", ok, elapsed,
           f", {counts[1]} + {counts[2]} triples")
    assert ok


PROPERTY_TESTS = [
    "test_relation.py::test_compose_associative",
    "test_relation.py::test_meet_semilattice",
    "test_relation.py::test_monotone",
    "test_algebra.py::test_closure_is_closed_fixpoint_and_self_representing",
    "test_point.py::TestVerifyTables::test_point_algebra_thousand_samples",
    "test_point.py::test_table_agrees_with_constructive_witness",
    "test_search.py::test_search_agrees_with_exhaustive",
    "test_cnf.py::test_truth_table_agrees_with_search_at_one",
    "test_cnf.py::test_dpll_agrees_with_search_at_two",
]


def test_criterion_6_property_suites(report):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
         *(str(HERE / t) for t in PROPERTY_TESTS)],
        cwd=HERE.parent, capture_output=True, text=True, timeout=300)
    elapsed = time.perf_counter() - start
    ok = proc.returncode == 0 and elapsed < 120
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else "no output"
    report(6, "property suites", ok, elapsed, f", {summary}")
    assert ok, proc.stdout[-2000:]
