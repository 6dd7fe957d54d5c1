import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from relrep import (ConcreteModel, FiniteAlgebra, Relation, Representation,
                    check_representation, extract_tables, find_isomorphism,
                    generate_closure, identity, necessary_laws, point_algebra,
                    symbolic_model)
from relrep.algebra import InjectivityFailure, OperationFailure
from relrep.errors import IntegrityError
from relrep.point import E, R, Z


def test_algebra_validation():
    with pytest.raises(ValueError):
        FiniteAlgebra(("a", "a"), ((0, 0), (0, 0)), ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        FiniteAlgebra(("a", "b"), ((0, 2), (0, 0)), ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        FiniteAlgebra(("a", "b"), ((0,), (0, 0)), ((0, 0), (0, 0)))


class TestClosure:
    def test_identity_only(self):
        model = generate_closure([("id", identity(2))])
        assert model.relations == (identity(2),)

    def test_two_chain(self):
        lt = Relation.from_pairs(2, [(0, 1)])
        model = generate_closure([("lt", lt)])
        assert model.members == (("lt", lt), ("m1", Relation(2)))

    def test_symbolic_point_model_has_three_members(self):
        model = generate_closure([("r", R), ("e", E), ("z", Z)])
        assert len(model.members) == 3

    def test_duplicate_seeds_keep_first_name(self):
        lt = Relation.from_pairs(2, [(0, 1)])
        model = generate_closure([("a", lt), ("b", lt)])
        assert model.names == ("a", "m1")

    def test_mixed_bases_rejected(self):
        with pytest.raises(ValueError):
            generate_closure([("a", Relation(1)), ("b", Relation(2))])
        with pytest.raises(ValueError):
            generate_closure([])

    def test_discovery_order_is_breadth_first(self):
        # on a 3-chain the successor relation generates its square, then the empty relation
        succ = Relation.from_pairs(3, [(0, 1), (1, 2)])
        model = generate_closure([("s", succ)])
        assert model.relations == (succ, Relation.from_pairs(3, [(0, 2)]), Relation(3))


class TestExtractTables:
    def test_empty_model(self):
        alg = extract_tables(ConcreteModel(2, (("zero", Relation(2)),)))
        assert alg == FiniteAlgebra(("zero",), ((0,),), ((0,),))

    def test_two_chain(self):
        lt = Relation.from_pairs(2, [(0, 1)])
        alg = extract_tables(generate_closure([("lt", lt)]))
        # hand-enumerated: lt;lt = {} and everything with {} is {}
        assert alg.comp == ((1, 1), (1, 1))
        assert alg.meet == ((0, 1), (1, 1))

    def test_symbolic_point_model(self):
        assert extract_tables(symbolic_model()) == point_algebra()

    def test_not_closed(self):
        lt = Relation.from_pairs(2, [(0, 1)])
        with pytest.raises(IntegrityError, match="lt;lt"):
            extract_tables(ConcreteModel(2, (("lt", lt),)))

    def test_duplicate_members_rejected(self):
        with pytest.raises(ValueError):
            ConcreteModel(1, (("a", Relation(1)), ("b", Relation(1))))


class TestCheckRepresentation:
    def test_point_algebra_over_q(self):
        assert check_representation(Representation(point_algebra(), symbolic_model(), (0, 1, 2)))

    def test_injectivity_failure(self):
        verdict = check_representation(
            Representation(point_algebra(), symbolic_model(), (0, 0, 2)))
        assert InjectivityFailure("z", "e") in verdict.failures

    def test_two_element_algebra(self, ze):
        model = ConcreteModel(1, (("z", Relation(1)), ("e", identity(1))))
        assert check_representation(Representation(ze, model, (0, 1))).ok

    def test_operation_failure_reported(self, ze):
        model = ConcreteModel(1, (("empty", Relation(1)), ("id", identity(1))))
        verdict = check_representation(Representation(ze, model, (1, 0)))
        assert not verdict
        f = next(f for f in verdict.failures if isinstance(f, OperationFailure))
        # z -> {(0,0)} survives z;z, the first break is z;e = {} instead of z
        assert (f.operation, f.a, f.b) == ("comp", "z", "e")
        assert f.expected == "id" and f.actual == Relation(1)

    def test_bad_assignment(self, ze):
        model = ConcreteModel(1, (("z", Relation(1)),))
        with pytest.raises(ValueError):
            check_representation(Representation(ze, model, (0,)))
        with pytest.raises(ValueError):
            check_representation(Representation(ze, model, (0, 3)))


class TestNecessaryLaws:
    def test_point_algebra_clean(self, pa):
        assert necessary_laws(pa) == []

    def test_non_associative_mutant(self, pa):
        comp = [list(r) for r in pa.comp]
        comp[1][1] = 0  # e;e = z
        violations = necessary_laws(FiniteAlgebra(pa.elements, comp, pa.meet))
        assert [v.law for v in violations] == ["comp-associative"]
        assert len(violations[0].witness) == 3

    def test_non_commutative_meet(self, pa):
        meet = [list(r) for r in pa.meet]
        meet[1][2] = 1  # e.r = e but r.e = z
        laws = {v.law for v in necessary_laws(FiniteAlgebra(pa.elements, pa.comp, meet))}
        assert "meet-commutative" in laws

    def test_non_idempotent_meet(self, pa):
        meet = [list(r) for r in pa.meet]
        meet[2][2] = 0
        violations = necessary_laws(FiniteAlgebra(pa.elements, pa.comp, meet))
        assert ("meet-idempotent", ("r",)) in [(v.law, v.witness) for v in violations]


class TestIsomorphism:
    def test_self(self, pa):
        assert find_isomorphism(pa, pa) == (0, 1, 2)

    def test_relabelled(self, pa):
        other = pa.relabel([2, 0, 1])  # r, z, e
        p = find_isomorphism(pa, other)
        assert p == (1, 2, 0)
        assert [other.elements[k] for k in p] == list(pa.elements)

    def test_all_z_composition(self, pa):
        flat = FiniteAlgebra(pa.elements, [[0] * 3] * 3, pa.meet)
        assert find_isomorphism(pa, flat) is None

    def test_size_mismatch(self, pa, ze):
        assert find_isomorphism(pa, ze) is None


@st.composite
def seed_relations(draw):
    n = draw(st.integers(1, 3))
    k = draw(st.integers(1, 2 if n < 3 else 1))
    return [(f"s{i}", Relation(n, draw(st.integers(0, (1 << (n * n)) - 1)))) for i in range(k)]


@settings(max_examples=60, deadline=None)
@given(seed_relations())
def test_closure_is_closed_fixpoint_and_self_representing(seeds):
    model = generate_closure(seeds)
    assert model.closure_violation() is None
    assert generate_closure(model.members) == model
    alg = extract_tables(model)
    assert check_representation(Representation(alg, model, tuple(range(alg.size))))
    assert necessary_laws(alg) == []


def test_isomorphism_of_random_relabelling():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 2)
        alg = extract_tables(generate_closure([("a", Relation(n, rng.randrange(1 << n * n)))]))
        order = list(range(alg.size))
        rng.shuffle(order)
        other = alg.relabel(order)
        p = find_isomorphism(alg, other)
        assert p is not None
        for i, j in itertools.product(range(alg.size), repeat=2):
            assert p[alg.comp[i][j]] == other.comp[p[i]][p[j]]
            assert p[alg.meet[i][j]] == other.meet[p[i]][p[j]]
