import random

import pytest

from linrel import (
    LinearRelation,
    Matrix,
    RelationSpec,
    Subspace,
    brute_force_right_witness,
    compose,
    oracle_product_membership,
    profile,
    random_relation,
    run_suite,
    serialize_relation,
    zero_times,
)
from linrel import harness
from linrel.harness import (
    LEFT_KINDS,
    RIGHT_KINDS,
    derive_seed,
    operator_graph_candidates,
    random_selfadjoint,
    targeted_left_pair,
    targeted_right_pair,
)


def graph(rows):
    return LinearRelation.graph_of_matrix(Matrix.from_rows(rows))


class TestRelationSpec:
    def test_valid(self):
        RelationSpec(3, 3, dim_dom=2, dim_mul=1, dim_ker=1).validate()
        RelationSpec(2, 2).validate()

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(dim_x=-1, dim_y=2),
            dict(dim_x=2, dim_y=2, coeff_bound=0),
            dict(dim_x=2, dim_y=2, dim_dom=1),  # partial targets
            dict(dim_x=2, dim_y=2, dim_dom=3, dim_mul=0, dim_ker=0),
            dict(dim_x=2, dim_y=2, dim_dom=1, dim_mul=0, dim_ker=2),
            dict(dim_x=2, dim_y=2, dim_dom=2, dim_mul=3, dim_ker=0),
            # rank of the single-valued part cannot exceed dim_y - dim_mul
            dict(dim_x=1, dim_y=1, dim_dom=1, dim_mul=1, dim_ker=0),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RelationSpec(**kwargs).validate()


class TestRandomRelation:
    def test_invertible_profile(self):
        rel = random_relation(RelationSpec(2, 2, dim_dom=2, dim_mul=0, dim_ker=0, seed=5))
        p = profile(rel)
        assert (p.dom.dim, p.mul.dim, p.ker.dim) == (2, 0, 0)
        assert p.is_operator and p.is_everywhere_defined

    def test_forced_multivalued(self):
        rel = random_relation(RelationSpec(2, 2, dim_dom=0, dim_mul=2, dim_ker=0, seed=1))
        assert rel == zero_times(2, Subspace.full(2))

    def test_requested_dims_hit_exactly(self):
        rel = random_relation(RelationSpec(3, 3, dim_dom=2, dim_mul=1, dim_ker=1, seed=42))
        p = profile(rel)
        assert (p.dom.dim, p.mul.dim, p.ker.dim) == (2, 1, 1)

    def test_deterministic(self):
        spec = RelationSpec(4, 3, dim_dom=3, dim_mul=1, dim_ker=2, seed=99)
        assert serialize_relation(random_relation(spec)) == serialize_relation(
            random_relation(spec)
        )

    def test_inconsistent_spec_rejected(self):
        with pytest.raises(ValueError):
            random_relation(RelationSpec(1, 1, dim_dom=1, dim_mul=1, dim_ker=0))


class TestOracle:
    def test_identity_chain(self):
        ident = LinearRelation.identity(2)
        assert oracle_product_membership(ident, ident, (1, 2), (1, 2))
        assert not oracle_product_membership(ident, ident, (1, 0), (0, 1))

    def test_projection_blocks_second_coordinate(self):
        a = LinearRelation.identity(2)
        b = graph([[1, 0], [0, 0]])
        assert not oracle_product_membership(a, b, (0, 1), (0, 1))
        assert oracle_product_membership(a, b, (1, 0), (1, 0))

    def test_multivalued_feasibility(self):
        zero_op = graph([[0, 0], [0, 0]])
        everything = zero_times(2, Subspace.full(2))
        for x in ((1, 0), (0, 1), (2, -3)):
            for z in ((1, 1), (0, 0), (-2, 3)):
                assert oracle_product_membership(zero_op, everything, x, z)

    def test_dimension_checks(self):
        with pytest.raises(ValueError):
            oracle_product_membership(
                LinearRelation.identity(2), LinearRelation.identity(3), (1, 2), (1, 2, 3)
            )

    def test_agrees_with_compose_on_random_pairs(self):
        rng = random.Random(3)
        for _ in range(50):
            n, m, k = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
            a = harness.random_mixed_relation(rng, n, m)
            b = harness.random_mixed_relation(rng, m, k)
            ba = compose(b, a)
            for _ in range(3):
                x = tuple(rng.randint(-3, 3) for _ in range(n))
                z = tuple(rng.randint(-3, 3) for _ in range(k))
                assert oracle_product_membership(a, b, x, z) == ba.membership(x, z)


class TestPairGenerators:
    def test_right_kinds_deliver(self):
        rng = random.Random(17)
        for i in range(40):
            kind = RIGHT_KINDS[i % len(RIGHT_KINDS)]
            a, b = targeted_right_pair(rng, kind)
            pa, pb = profile(a), profile(b)
            ran_ok = pb.ran.contains(pa.ran)
            mul_ok = pa.mul == pb.mul
            if kind == "satisfy":
                assert ran_ok and mul_ok
            elif kind == "violate_ran":
                assert not ran_ok
            elif kind in ("violate_mul_gain", "violate_mul_loss"):
                assert not mul_ok

    def test_left_kinds_deliver(self):
        rng = random.Random(18)
        for i in range(40):
            kind = LEFT_KINDS[i % len(LEFT_KINDS)]
            a, b = targeted_left_pair(rng, kind)
            pa, pb = profile(a), profile(b)
            if kind == "satisfy":
                assert pb.dom.contains(pa.dom)
                assert pa.ker.contains(pb.ker)
                assert pa.mul.dim <= pb.mul.dim
            elif kind == "violate_dom":
                assert not pb.dom.contains(pa.dom)
            elif kind == "violate_ker":
                assert not pa.ker.contains(pb.ker)
            elif kind == "violate_mul_dim":
                assert pa.mul.dim > pb.mul.dim

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            targeted_right_pair(random.Random(0), "nope")

    def test_selfadjoint_generator(self):
        rng = random.Random(23)
        for _ in range(10):
            rel = random_selfadjoint(rng, rng.randint(0, 4))
            assert rel.is_selfadjoint()


class TestBruteForce:
    def test_gated_dimension(self):
        with pytest.raises(ValueError):
            operator_graph_candidates(3, 1, 2)

    def test_candidates_are_operators(self):
        for rel in operator_graph_candidates(1, 1, 1):
            assert profile(rel).is_operator

    def test_finds_existing_witness(self):
        a = graph([[2, 0], [0, 0]])
        b = graph([[1, 0], [0, 0]])
        witness = brute_force_right_witness(a, b, 2)
        assert witness is not None
        assert compose(b, witness) == a


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("no_such_suite", 1, 0)

    def test_deterministic_and_green(self):
        first = run_suite("relation_algebra", 25, seed=1)
        second = run_suite("relation_algebra", 25, seed=1)
        assert first == second
        assert first.failed == 0 and first.passed == 25

    def test_identity_suites_pass(self):
        for name in ("right_operator_iff", "left_operator_iff", "adjoint_identities"):
            result = run_suite(name, 20, seed=7)
            assert result.failed == 0, result.counterexample

    def test_mutation_is_caught(self, monkeypatch):
        # an intentionally broken solver must produce a serialized counterexample
        original = harness.factor.solve_right_operator

        def broken(a, b):
            report = original(a, b)
            object.__setattr__(report, "solvable", not report.solvable)
            return report

        monkeypatch.setattr(harness.factor, "solve_right_operator", broken)
        result = run_suite("right_operator_iff", 20, seed=7)
        assert result.failed > 0
        assert result.counterexample is not None
        assert "dim_x=" in result.counterexample

    def test_result_serialization(self):
        result = run_suite("determinism", 5, seed=2)
        text = result.to_text()
        assert "suite=determinism" in text
        assert "failed=0" in text
        payload = result.to_json_dict()
        assert payload["cases"] == 5 and payload["passed"] == 5

    def test_derive_seed_is_stable(self):
        assert derive_seed(1, 0) == derive_seed(1, 0)
        assert derive_seed(1, 0) != derive_seed(1, 1)
        assert derive_seed(1, 0) != derive_seed(2, 0)
