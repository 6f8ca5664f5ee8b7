"""Acceptance criteria, one test per criterion.

Every check is exact (no tolerances); the only numeric limits are the stated
case counts and wall-clock budgets.  Run with ``pytest -s tests/test_acceptance.py``
to see the per-criterion pass lines.
"""

import random
import time
from pathlib import Path

from linrel import (
    brute_force_left_witness,
    brute_force_right_witness,
    parse_relation_text,
    profile,
    serialize_relation,
    solve_left_operator,
    solve_right_operator,
    verify,
)
from linrel.cli import main
from linrel.harness import (
    LEFT_KINDS,
    RIGHT_KINDS,
    derive_seed,
    run_suite,
    targeted_left_pair,
    targeted_right_pair,
)

FIXTURES = Path(__file__).parent / "fixtures"


def _report(number, description, body):
    try:
        body()
    except BaseException:
        print(f"ACCEPTANCE {number} FAIL: {description}")
        raise
    print(f"ACCEPTANCE {number} PASS: {description}")


def test_criterion_1_relation_algebra_identities():
    def body():
        start = time.monotonic()
        result = run_suite("relation_algebra", 500, seed=101)
        elapsed = time.monotonic() - start
        assert result.cases == 500
        assert result.failed == 0, result.counterexample
        assert elapsed < 60, f"took {elapsed:.1f}s"

    _report(1, "inverse identities, double inverse and decomposition on 500 relations", body)


def test_criterion_2_composition_oracle():
    def body():
        # 250 (A, B) pairs with 4 probes each: 1000 probe triples
        result = run_suite("compose_oracle", 250, seed=202)
        assert result.failed == 0, result.counterexample
        graphs = run_suite("graph_compose", 200, seed=203)
        assert graphs.failed == 0, graphs.counterexample

    _report(2, "composition agrees with the feasibility oracle and matrix products", body)


def test_criterion_3_relation_level_iffs():
    def body():
        right = run_suite("right_relation_iff", 500, seed=301)
        assert right.failed == 0, right.counterexample
        left = run_suite("left_relation_iff", 500, seed=302)
        assert left.failed == 0, left.counterexample

    _report(3, "B(B^-1 A) = A and (A B^-1) B = A exactly iff the named conditions hold", body)


def _operator_iff_sweep(side):
    if side == "right":
        kinds, pair_fn, solver = RIGHT_KINDS, targeted_right_pair, solve_right_operator
    else:
        kinds, pair_fn, solver = LEFT_KINDS, targeted_left_pair, solve_left_operator
    buckets = {}
    base_seed = 401 if side == "right" else 501
    for index in range(500):
        rng = random.Random(derive_seed(base_seed, index))
        kind = kinds[index % len(kinds)]
        a, b = pair_fn(rng, kind)
        pa, pb = profile(a), profile(b)
        if side == "right":
            condition_values = {
                "ran_subset": pb.ran.contains(pa.ran),
                "mul_equal": pa.mul == pb.mul,
            }
        else:
            condition_values = {
                "dom_subset": pb.dom.contains(pa.dom),
                "ker_subset": pa.ker.contains(pb.ker),
                "mul_dim_le": pa.mul.dim <= pb.mul.dim,
            }
        conditions = all(condition_values.values())
        report = solver(a, b)
        assert report.solvable == conditions, (kind, serialize_relation(a), serialize_relation(b))
        if report.solvable:
            pw = profile(report.witness)
            assert pw.is_operator
            assert report.verified
            assert verify(a, b, report.witness, side)
            if side == "right":
                assert pw.dom == pa.dom
        buckets["satisfying"] = buckets.get("satisfying", 0) + (1 if conditions else 0)
        for name, value in condition_values.items():
            key = f"{name}_{'held' if value else 'violated'}"
            buckets[key] = buckets.get(key, 0) + 1
    for key, count in buckets.items():
        assert count >= 100, f"{side} bucket {key} has only {count} of 500"
    return buckets


def _brute_force_sweep(side, violating_kinds, base_seed):
    confirmed = 0
    index = 0
    while confirmed < 50:
        rng = random.Random(derive_seed(base_seed, index))
        kind = violating_kinds[index % len(violating_kinds)]
        index += 1
        if side == "right":
            a, b = targeted_right_pair(rng, kind, max_dim=2, bound=2)
            report = solve_right_operator(a, b)
        else:
            a, b = targeted_left_pair(rng, kind, max_dim=2, bound=2)
            report = solve_left_operator(a, b)
        if report.solvable:
            continue
        if side == "right":
            assert brute_force_right_witness(a, b, bound=2) is None, (
                serialize_relation(a),
                serialize_relation(b),
            )
        else:
            assert brute_force_left_witness(a, b, bound=2) is None, (
                serialize_relation(a),
                serialize_relation(b),
            )
        confirmed += 1
    assert confirmed == 50


def test_criterion_4_right_operator_factorization():
    def body():
        _operator_iff_sweep("right")
        _brute_force_sweep("right", ("violate_ran", "violate_mul_gain", "violate_mul_loss"), 402)

    _report(4, "A = BT solvable iff range inclusion and equal multivalued parts; "
               "witnesses verified; brute force confirms 50 unsolvable instances", body)


def test_criterion_5_left_operator_factorization():
    def body():
        _operator_iff_sweep("left")
        _brute_force_sweep("left", ("violate_dom", "violate_ker", "violate_mul_dim"), 502)

    _report(5, "A = TB solvable iff domain/kernel inclusions and the multivalued "
               "dimension bound; direct single-valued witnesses; brute force confirms "
               "50 unsolvable instances", body)


def test_criterion_6_adjoint_calculus():
    def body():
        identities = run_suite("adjoint_identities", 500, seed=601)
        assert identities.failed == 0, identities.counterexample
        # 200 pairs of adjoint-level condition translation against direct solves
        right = run_suite("adjoint_right_iff", 100, seed=602)
        assert right.failed == 0, right.counterexample
        left = run_suite("adjoint_left_iff", 100, seed=603)
        assert left.failed == 0, left.counterexample

    _report(6, "adjoint identities on 500 relations and adjoint-level solver "
               "translation on 200 pairs", body)


def test_criterion_7_cli_contract(capsys):
    def body():
        fixtures = sorted(FIXTURES.glob("roundtrip_*.rel"))
        assert len(fixtures) == 20
        for path in fixtures:
            text = path.read_text()
            assert serialize_relation(parse_relation_text(text, source=str(path))) == text

        def run_cli(*argv):
            code = main([str(a) for a in argv])
            captured = capsys.readouterr()
            return code, captured.out

        code, out = run_cli("solve", FIXTURES / "scaled_proj_A.rel", FIXTURES / "proj_B.rel",
                            "--side", "right", "--level", "operator")
        assert code == 0 and "solvable=yes" in out
        code, out = run_cli("solve", FIXTURES / "ran_violation_A.rel", FIXTURES / "proj_B.rel",
                            "--side", "right", "--level", "operator")
        assert code == 2 and "failed: ran_subset" in out
        code, out = run_cli("solve", FIXTURES / "mul_dim_A.rel", FIXTURES / "mul_dim_B.rel",
                            "--side", "left", "--level", "operator")
        assert code == 2 and "failed: mul_dim_le" in out

        start = time.monotonic()
        code, out = run_cli("check", "--suite", "full", "--seed", "11")
        elapsed = time.monotonic() - start
        assert code == 0
        assert "failed=0" in out
        assert elapsed < 300, f"full check took {elapsed:.1f}s"

    _report(7, "golden round trips, solve exit codes, and a green full check run", body)
