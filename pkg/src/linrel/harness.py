"""Seeded relation generators, definitional oracles, and invariant suites.

Generation is profile-targeted rather than rejection-sampled: iff suites need
abundant condition-violating pairs, which uniform sampling rarely produces.
Determinism is per-implementation: the PRNG is Python's Mersenne Twister
(``random.Random``) with documented sub-seed derivation, so equal (spec, seed)
always reproduce identical canonical relations within this implementation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iter_product
from typing import Callable, Optional

from . import factor
from .exact import Matrix, rank, solve_linear, vector
from .files import serialize_relation
from .relation import (
    LinearRelation,
    compose,
    cw_sum,
    graph_projection,
    graph_section,
    identity_on,
    profile,
    zero_times,
)
from .subspace import Subspace

_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, index: int) -> int:
    """Stable per-case sub-seed: a 64-bit LCG-style mix of seed and index."""
    return (seed * 6364136223846793005 + (index + 1) * 1442695040888963407) & _MASK64


@dataclass(frozen=True)
class RelationSpec:
    """Request for a random relation, optionally with prescribed profile dims.

    The three target dimensions are all-or-none.  Consistency requires
    dim_ker <= dim_dom <= dim_x, dim_mul <= dim_y, and additionally
    dim_dom - dim_ker <= dim_y - dim_mul (the single-valued part maps onto a
    complement of the multivalued part, so its rank is capped).
    """

    dim_x: int
    dim_y: int
    dim_dom: Optional[int] = None
    dim_mul: Optional[int] = None
    dim_ker: Optional[int] = None
    coeff_bound: int = 3
    seed: int = 0

    def has_targets(self) -> bool:
        return self.dim_dom is not None

    def validate(self) -> None:
        if self.dim_x < 0 or self.dim_y < 0:
            raise ValueError("negative space dimension")
        if self.coeff_bound < 1:
            raise ValueError("coefficient bound must be at least 1")
        targets = (self.dim_dom, self.dim_mul, self.dim_ker)
        if any(t is None for t in targets) != all(t is None for t in targets):
            raise ValueError("target dimensions must be given together or not at all")
        if self.dim_dom is None:
            return
        dd, dm, dk = self.dim_dom, self.dim_mul, self.dim_ker
        if not (0 <= dk <= dd <= self.dim_x):
            raise ValueError(f"need 0 <= dim_ker <= dim_dom <= dim_x, got {dk}, {dd}, {self.dim_x}")
        if not (0 <= dm <= self.dim_y):
            raise ValueError(f"need 0 <= dim_mul <= dim_y, got {dm}, {self.dim_y}")
        if dd - dk > self.dim_y - dm:
            raise ValueError(
                f"rank dim_dom - dim_ker = {dd - dk} exceeds dim_y - dim_mul = {self.dim_y - dm}"
            )


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 3) -> Matrix:
    return Matrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def random_full_rank(rng: random.Random, rows: int, cols: int, bound: int = 3) -> Matrix:
    if cols > rows:
        raise ValueError("full column rank needs cols <= rows")
    for _ in range(1000):
        m = random_matrix(rng, rows, cols, bound)
        if rank(m) == cols:
            return m
    raise RuntimeError("failed to sample a full-rank matrix")


def random_subspace(rng: random.Random, ambient: int, dim: int, bound: int = 3) -> Subspace:
    if not 0 <= dim <= ambient:
        raise ValueError(f"dimension {dim} not within ambient {ambient}")
    if dim == 0:
        return Subspace.zero(ambient)
    return Subspace.span(ambient, random_full_rank(rng, ambient, dim, bound))


def random_plain_relation(
    rng: random.Random, dim_x: int, dim_y: int, bound: int = 3
) -> LinearRelation:
    count = rng.randint(0, dim_x + dim_y)
    gens = [[rng.randint(-bound, bound) for _ in range(dim_x + dim_y)] for _ in range(count)]
    return LinearRelation.from_generators(dim_x, dim_y, gens)


def _targeted_relation(
    rng: random.Random, dim_x: int, dim_y: int, dd: int, dm: int, dk: int, bound: int
) -> LinearRelation:
    """cw-sum of {0} x (random multivalued space) and a random single-valued
    part with prescribed domain and kernel dimensions."""
    mul_space = random_subspace(rng, dim_y, dm, bound)
    comp_basis = mul_space.ortho_complement().basis
    dom_cols = random_full_rank(rng, dim_x, dd, bound)
    image_coeffs = random_full_rank(rng, comp_basis.cols, dd - dk, bound)
    images = comp_basis @ image_coeffs
    gens = []
    for i in range(dd):
        x = dom_cols.col(i)
        y = (0,) * dim_y if i < dk else images.col(i - dk)
        gens.append(tuple(x) + tuple(y))
    for j in range(dm):
        gens.append((0,) * dim_x + tuple(mul_space.basis.col(j)))
    rel = LinearRelation.from_generators(dim_x, dim_y, gens)
    prof = profile(rel)
    if (prof.dom.dim, prof.mul.dim, prof.ker.dim) != (dd, dm, dk):
        raise RuntimeError("constructed relation does not match the requested profile")
    return rel


def random_relation(spec: RelationSpec) -> LinearRelation:
    """Deterministic for equal specs; achieves requested profile dims exactly."""
    spec.validate()
    rng = random.Random(spec.seed)
    if not spec.has_targets():
        return random_plain_relation(rng, spec.dim_x, spec.dim_y, spec.coeff_bound)
    return _targeted_relation(
        rng, spec.dim_x, spec.dim_y, spec.dim_dom, spec.dim_mul, spec.dim_ker, spec.coeff_bound
    )


def random_operator(rng: random.Random, dim_x: int, dim_y: int, bound: int = 3) -> LinearRelation:
    dd = rng.randint(0, dim_x)
    rk = rng.randint(0, min(dd, dim_y))
    return _targeted_relation(rng, dim_x, dim_y, dd, 0, dd - rk, bound)


def random_mixed_relation(
    rng: random.Random, dim_x: int, dim_y: int, bound: int = 3
) -> LinearRelation:
    if rng.random() < 0.5:
        return random_plain_relation(rng, dim_x, dim_y, bound)
    dd = rng.randint(0, dim_x)
    dm = rng.randint(0, dim_y)
    rk = rng.randint(0, min(dd, dim_y - dm))
    return _targeted_relation(rng, dim_x, dim_y, dd, dm, dd - rk, bound)


def random_selfadjoint(rng: random.Random, dim: int, bound: int = 3) -> LinearRelation:
    """Self-adjoint relation: a symmetric map on a subspace D, made multivalued
    along D's orthocomplement."""
    r = rng.randint(0, dim)
    dom = random_subspace(rng, dim, r, bound)
    p = dom.basis
    raw = [[rng.randint(-bound, bound) for _ in range(r)] for _ in range(r)]
    sym = Matrix.from_rows(
        [[raw[i][j] + raw[j][i] for j in range(r)] for i in range(r)], cols=r
    )
    gram = p.transpose() @ p
    cols = []
    for j in range(r):
        sol = solve_linear(gram, sym.col(j))
        assert sol is not None  # gram matrix of independent columns is invertible
        cols.append(sol)
    images = p @ Matrix.from_cols(cols, rows=r)
    gens = [tuple(p.col(i)) + tuple(images.col(i)) for i in range(r)]
    comp = dom.ortho_complement()
    gens += [(0,) * dim + tuple(comp.basis.col(j)) for j in range(comp.dim)]
    return LinearRelation.from_generators(dim, dim, gens)


def oracle_product_membership(
    inner: LinearRelation, outer: LinearRelation, x, z
) -> bool:
    """Whether some y has (x, y) in ``inner`` and (y, z) in ``outer``.

    Decided by one linear feasibility solve over the stacked generator
    coefficients; deliberately independent of ``compose``.
    """
    if inner.dim_y != outer.dim_x:
        raise ValueError(
            f"interface dimensions differ: {inner.dim_y} vs {outer.dim_x}"
        )
    xv, zv = vector(x), vector(z)
    if len(xv) != inner.dim_x or len(zv) != outer.dim_y:
        raise ValueError("probe lengths do not match the relation dimensions")
    ga, gb = inner.graph.basis, outer.graph.basis
    n, m, k = inner.dim_x, inner.dim_y, outer.dim_y
    rows = []
    for i in range(n):
        rows.append(tuple(ga.row(i)) + (0,) * gb.cols)
    for i in range(m):
        rows.append(tuple(ga.row(n + i)) + tuple(-v for v in gb.row(i)))
    for i in range(k):
        rows.append((0,) * ga.cols + tuple(gb.row(m + i)))
    system = Matrix.from_rows(rows, cols=ga.cols + gb.cols)
    rhs = xv + (Fraction(0),) * m + zv
    return solve_linear(system, rhs) is not None


# ---------------------------------------------------------------------------
# Brute-force witness search over small coefficient grids (dims <= 2).

@lru_cache(maxsize=None)
def operator_graph_candidates(dim_x: int, dim_y: int, bound: int = 2) -> tuple[LinearRelation, ...]:
    """Every single-valued relation Q^dim_x -> Q^dim_y whose graph is spanned
    by generators with entries in [-bound, bound], deduplicated canonically.

    Graph dimension of an operator is at most dim_x, so spans of up to dim_x
    grid vectors cover all candidates.  Gated to dim_x <= 2.
    """
    if dim_x > 2:
        raise ValueError("brute-force enumeration is gated to dim_x <= 2")
    ambient = dim_x + dim_y
    lines: set[tuple[Fraction, ...]] = set()
    for entries in iter_product(range(-bound, bound + 1), repeat=ambient):
        if not any(entries):
            continue
        vec = [Fraction(e) for e in entries]
        lead = next(v for v in vec if v)
        lines.add(tuple(v / lead for v in vec))
    line_reps = sorted(lines)
    seen: dict[tuple, Subspace] = {}
    zero = Subspace.zero(ambient)
    seen[(0, zero.basis.entries)] = zero
    if dim_x >= 1:
        for rep in line_reps:
            s = Subspace.from_vectors(ambient, [rep])
            seen.setdefault((s.dim, s.basis.entries), s)
    if dim_x >= 2:
        for r1, r2 in combinations(line_reps, 2):
            s = Subspace.from_vectors(ambient, [r1, r2])
            if s.dim == 2:
                seen.setdefault((s.dim, s.basis.entries), s)
    out = []
    for sub in seen.values():
        rel = LinearRelation(dim_x, dim_y, sub)
        if profile(rel).is_operator:
            out.append(rel)
    return tuple(out)


def brute_force_right_witness(
    a: LinearRelation, b: LinearRelation, bound: int = 2
) -> Optional[LinearRelation]:
    """Search the candidate grid for a single-valued T with B∘T = A."""
    if a.dim_y != b.dim_y:
        raise ValueError("target dimensions differ")
    probes = [
        (g[: a.dim_x], g[a.dim_x :]) for g in a.graph.basis.column_tuples()
    ]
    for t in operator_graph_candidates(a.dim_x, b.dim_x, bound):
        if all(oracle_product_membership(t, b, x, z) for x, z in probes):
            if compose(b, t) == a:
                return t
    return None


def brute_force_left_witness(
    a: LinearRelation, b: LinearRelation, bound: int = 2
) -> Optional[LinearRelation]:
    """Search the candidate grid for a single-valued T with T∘B = A."""
    if a.dim_x != b.dim_x:
        raise ValueError("source dimensions differ")
    probes = [
        (g[: a.dim_x], g[a.dim_x :]) for g in a.graph.basis.column_tuples()
    ]
    for t in operator_graph_candidates(b.dim_y, a.dim_y, bound):
        if all(oracle_product_membership(b, t, x, y) for x, y in probes):
            if compose(t, b) == a:
                return t
    return None


# ---------------------------------------------------------------------------
# Profile-targeted pair generation for the iff suites.

RIGHT_KINDS = ("satisfy", "violate_ran", "violate_mul_gain", "violate_mul_loss", "free")
LEFT_KINDS = ("satisfy", "violate_dom", "violate_ker", "violate_mul_dim", "free")


def _vector_outside(rng: random.Random, sub: Subspace, bound: int) -> tuple:
    for _ in range(1000):
        v = [rng.randint(-bound, bound) for _ in range(sub.ambient_dim)]
        if any(v) and not sub.contains_vector(v):
            return tuple(v)
    raise RuntimeError("failed to sample a vector outside the subspace")


def _vector_in_gap(rng: random.Random, big: Subspace, small: Subspace, bound: int) -> tuple:
    for _ in range(1000):
        coeffs = [rng.randint(-bound, bound) for _ in range(big.dim)]
        v = big.basis.matvec(coeffs)
        if any(v) and not small.contains_vector(v):
            return v
    raise RuntimeError("failed to sample a vector in the gap")


def targeted_right_pair(
    rng: random.Random, kind: str, max_dim: int = 3, bound: int = 3
) -> tuple[LinearRelation, LinearRelation]:
    """(A, B) with A from X to Z and B from Y to Z, steered toward ``kind``.

    satisfy: A = B∘T for a random operator T, so range inclusion holds and the
    multivalued parts agree.  The violate kinds each break exactly the named
    condition; free is an unconstrained random pair.
    """
    if kind not in RIGHT_KINDS:
        raise ValueError(f"unknown pair kind {kind!r}")
    for _ in range(500):
        nx = rng.randint(1, max_dim)
        ny = rng.randint(1, max_dim)
        nz = rng.randint(1, max_dim)
        b = random_mixed_relation(rng, ny, nz, bound)
        pb = profile(b)
        if kind == "free":
            return random_plain_relation(rng, nx, nz, bound), b
        base = compose(b, random_operator(rng, nx, ny, bound))
        if kind == "satisfy":
            return base, b
        if kind == "violate_ran":
            if pb.ran.dim == nz:
                continue
            z0 = _vector_outside(rng, pb.ran, bound)
            x0 = tuple(rng.randint(-bound, bound) for _ in range(nx))
            extra = LinearRelation.from_generators(nx, nz, [x0 + z0])
            return cw_sum(base, extra)[0], b
        if kind == "violate_mul_gain":
            if pb.ran.dim <= pb.mul.dim:
                continue
            z0 = _vector_in_gap(rng, pb.ran, pb.mul, bound)
            extra = LinearRelation.from_generators(nx, nz, [(0,) * nx + tuple(z0)])
            return cw_sum(base, extra)[0], b
        if kind == "violate_mul_loss":
            if pb.mul.dim == 0:
                continue
            return base.reduce_operator_part(), b
    raise RuntimeError(f"failed to construct a right pair of kind {kind!r}")


def targeted_left_pair(
    rng: random.Random, kind: str, max_dim: int = 3, bound: int = 3
) -> tuple[LinearRelation, LinearRelation]:
    """(A, B) with A from X to Y and B from X to Z, steered toward ``kind``."""
    if kind not in LEFT_KINDS:
        raise ValueError(f"unknown pair kind {kind!r}")
    for _ in range(500):
        nx = rng.randint(1, max_dim)
        ny = rng.randint(1, max_dim)
        nz = rng.randint(1, max_dim)
        b = random_mixed_relation(rng, nx, nz, bound)
        pb = profile(b)
        if kind == "free":
            return random_plain_relation(rng, nx, ny, bound), b
        base = compose(random_operator(rng, nz, ny, bound), b)
        if kind == "satisfy":
            return base, b
        if kind == "violate_dom":
            if pb.dom.dim == nx:
                continue
            x0 = _vector_outside(rng, pb.dom, bound)
            y0 = tuple(rng.randint(-bound, bound) for _ in range(ny))
            extra = LinearRelation.from_generators(nx, ny, [x0 + y0])
            return cw_sum(base, extra)[0], b
        if kind == "violate_ker":
            if pb.ker.dim == 0 or pb.dom.dim > ny:
                continue
            images = random_full_rank(rng, ny, pb.dom.dim, bound)
            gens = [
                tuple(pb.dom.basis.col(i)) + tuple(images.col(i))
                for i in range(pb.dom.dim)
            ]
            return LinearRelation.from_generators(nx, ny, gens), b
        if kind == "violate_mul_dim":
            if pb.mul.dim >= ny:
                continue
            extra = random_subspace(rng, ny, pb.mul.dim + 1, bound)
            return cw_sum(base, zero_times(nx, extra))[0], b
    raise RuntimeError(f"failed to construct a left pair of kind {kind!r}")


def random_square_pair(
    rng: random.Random, max_dim: int = 3, bound: int = 3
) -> tuple[LinearRelation, LinearRelation]:
    d = rng.randint(0, max_dim)
    return random_mixed_relation(rng, d, d, bound), random_mixed_relation(rng, d, d, bound)


# ---------------------------------------------------------------------------
# Named invariant suites.

@dataclass(frozen=True)
class SuiteResult:
    suite: str
    cases: int
    passed: int
    failed: int
    counterexample: Optional[str]

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }

    def to_text(self) -> str:
        lines = [
            f"suite={self.suite}",
            f"cases={self.cases}",
            f"passed={self.passed}",
            f"failed={self.failed}",
        ]
        if self.counterexample is not None:
            lines.append("counterexample:")
            lines += ["  " + l for l in self.counterexample.splitlines()]
        return "\n".join(lines) + "\n"


def _show_pair(a: LinearRelation, b: LinearRelation) -> str:
    return f"A:\n{serialize_relation(a)}B:\n{serialize_relation(b)}"


def _suite_relation_algebra(rng: random.Random) -> Optional[str]:
    n = rng.randint(0, 6)
    m = rng.randint(0, 6)
    rel = random_mixed_relation(rng, n, m, 3)
    p = profile(rel)
    inv = rel.inverse()
    q = profile(inv)
    reduced = rel.reduce_operator_part()
    total, direct = cw_sum(zero_times(n, p.mul), reduced)
    checks = (
        ("dom of inverse is range", q.dom == p.ran),
        ("range of inverse is dom", q.ran == p.dom),
        ("kernel of inverse is mul", q.ker == p.mul),
        ("mul of inverse is kernel", q.mul == p.ker),
        ("double inverse", inv.inverse() == rel),
        ("decomposition reconstructs", total == rel),
        ("decomposition is direct", direct),
        ("reduced part is single-valued", profile(reduced).is_operator),
        ("reduced part keeps dom", profile(reduced).dom == p.dom),
    )
    for label, ok in checks:
        if not ok:
            return f"{label}:\n{serialize_relation(rel)}"
    return None


def _suite_compose_oracle(rng: random.Random) -> Optional[str]:
    n, m, k = rng.randint(0, 6), rng.randint(0, 6), rng.randint(0, 6)
    a = random_mixed_relation(rng, n, m, 3)
    b = random_mixed_relation(rng, m, k, 3)
    ba = compose(b, a)
    probes = []
    # steer one probe through a generator of b so positives occur regularly
    if b.graph.dim:
        coeffs = [rng.randint(-2, 2) for _ in range(b.graph.dim)]
        w = b.graph.basis.matvec(coeffs)
        y, z = w[:m], w[m:]
        ys = Matrix.from_rows([a.graph.basis.row(n + i) for i in range(m)], cols=a.graph.dim)
        lift = solve_linear(ys, y)
        if lift is not None:
            xs = Matrix.from_rows([a.graph.basis.row(i) for i in range(n)], cols=a.graph.dim)
            probes.append((xs.matvec(lift), z))
    while len(probes) < 4:
        probes.append(
            (
                tuple(rng.randint(-3, 3) for _ in range(n)),
                tuple(rng.randint(-3, 3) for _ in range(k)),
            )
        )
    for x, z in probes:
        if oracle_product_membership(a, b, x, z) != ba.membership(x, z):
            return f"probe x={x} z={z} disagrees:\n{_show_pair(a, b)}"
    return None


def _suite_graph_compose(rng: random.Random) -> Optional[str]:
    n, m, k = rng.randint(0, 4), rng.randint(0, 4), rng.randint(0, 4)
    ma = random_matrix(rng, m, n, 3)
    mb = random_matrix(rng, k, m, 3)
    lhs = compose(LinearRelation.graph_of_matrix(mb), LinearRelation.graph_of_matrix(ma))
    rhs = LinearRelation.graph_of_matrix(mb @ ma)
    if lhs != rhs:
        return f"graph composition mismatch for {ma!r} and {mb!r}"
    return None


def _suite_compose_algebra(rng: random.Random) -> Optional[str]:
    n, m, k, l = (rng.randint(0, 3) for _ in range(4))
    a = random_mixed_relation(rng, n, m, 3)
    b = random_mixed_relation(rng, m, k, 3)
    c = random_mixed_relation(rng, k, l, 3)
    if compose(compose(c, b), a) != compose(c, compose(b, a)):
        return f"associativity fails:\n{_show_pair(a, b)}C:\n{serialize_relation(c)}"
    if compose(b, a).inverse() != compose(a.inverse(), b.inverse()):
        return f"inverse of product fails:\n{_show_pair(a, b)}"
    return None


def _suite_adjoint_identities(rng: random.Random) -> Optional[str]:
    d = rng.randint(0, 4)
    rel = random_mixed_relation(rng, d, d, 3)
    p = profile(rel)
    adj = rel.adjoint()
    q = profile(adj)
    checks = (
        ("mul of adjoint is dom-perp", q.mul == p.dom.ortho_complement()),
        ("kernel of adjoint is ran-perp", q.ker == p.ran.ortho_complement()),
        ("double adjoint", adj.adjoint() == rel),
    )
    for label, ok in checks:
        if not ok:
            return f"{label}:\n{serialize_relation(rel)}"
    m = random_matrix(rng, d, d, 3)
    if LinearRelation.graph_of_matrix(m).adjoint() != LinearRelation.graph_of_matrix(m.transpose()):
        return f"adjoint of a matrix graph is not the transpose graph: {m!r}"
    return None


def _suite_graph_maps(rng: random.Random) -> Optional[str]:
    n = rng.randint(0, 4)
    m = rng.randint(0, 4)
    rel = random_mixed_relation(rng, n, m, 3)
    p = profile(rel)
    proj = graph_projection(rel)
    pp = profile(proj)
    section = graph_section(rel)
    ps = profile(section)
    checks = (
        ("projection is single-valued", pp.is_operator),
        ("projection dom is the graph", pp.dom == rel.graph),
        ("projection range is dom", pp.ran == p.dom),
        ("projection kernel is 0 x mul", pp.ker == Subspace.zero(n).product(p.mul)),
        ("section is single-valued", ps.is_operator),
        ("section dom is dom", ps.dom == p.dom),
        ("projection after section is identity on dom", compose(proj, section) == identity_on(p.dom)),
    )
    for label, ok in checks:
        if not ok:
            return f"{label}:\n{serialize_relation(rel)}"
    return None


def _suite_membership(rng: random.Random) -> Optional[str]:
    n = rng.randint(0, 5)
    m = rng.randint(0, 5)
    rel = random_mixed_relation(rng, n, m, 3)
    probes = []
    if rel.graph.dim:
        coeffs = [rng.randint(-2, 2) for _ in range(rel.graph.dim)]
        probes.append(rel.graph.basis.matvec(coeffs))
    for _ in range(3):
        probes.append(tuple(rng.randint(-3, 3) for _ in range(n + m)))
    for v in probes:
        x, y = v[:n], v[n:]
        via_solve = rel.membership(x, y)
        via_span = rel.graph.contains(Subspace.from_vectors(n + m, [v]))
        if via_solve != via_span:
            return f"membership disagrees on {v}:\n{serialize_relation(rel)}"
    return None


def _suite_right_relation_iff(rng: random.Random) -> Optional[str]:
    kind = rng.choice(RIGHT_KINDS)
    a, b = targeted_right_pair(rng, kind)
    pa, pb = profile(a), profile(b)
    conditions = pb.ran.contains(pa.ran) and pa.mul.contains(pb.mul)
    closes = compose(b, compose(b.inverse(), a)) == a
    if closes != conditions:
        return f"iff broken (kind {kind}):\n{_show_pair(a, b)}"
    report = factor.solve_right_relation(a, b)
    if report.solvable != conditions or (report.solvable and not report.verified):
        return f"report disagrees (kind {kind}):\n{_show_pair(a, b)}"
    return None


def _suite_left_relation_iff(rng: random.Random) -> Optional[str]:
    kind = rng.choice(LEFT_KINDS)
    a, b = targeted_left_pair(rng, kind)
    pa, pb = profile(a), profile(b)
    conditions = pb.dom.contains(pa.dom) and pa.ker.contains(pb.ker)
    closes = compose(compose(a, b.inverse()), b) == a
    if closes != conditions:
        return f"iff broken (kind {kind}):\n{_show_pair(a, b)}"
    report = factor.solve_left_relation(a, b)
    if report.solvable != conditions or (report.solvable and not report.verified):
        return f"report disagrees (kind {kind}):\n{_show_pair(a, b)}"
    return None


def _suite_right_operator_iff(rng: random.Random) -> Optional[str]:
    kind = rng.choice(RIGHT_KINDS)
    a, b = targeted_right_pair(rng, kind)
    pa, pb = profile(a), profile(b)
    conditions = pb.ran.contains(pa.ran) and pa.mul == pb.mul
    report = factor.solve_right_operator(a, b)
    if report.solvable != conditions:
        return f"solvable flag disagrees (kind {kind}):\n{_show_pair(a, b)}"
    if report.solvable:
        pw = profile(report.witness)
        if not (pw.is_operator and pw.dom == pa.dom and factor.verify(a, b, report.witness, "right")):
            return f"witness malformed (kind {kind}):\n{_show_pair(a, b)}"
        if not report.verified:
            return f"report not verified (kind {kind}):\n{_show_pair(a, b)}"
    return None


def _suite_left_operator_iff(rng: random.Random) -> Optional[str]:
    kind = rng.choice(LEFT_KINDS)
    a, b = targeted_left_pair(rng, kind)
    pa, pb = profile(a), profile(b)
    conditions = (
        pb.dom.contains(pa.dom)
        and pa.ker.contains(pb.ker)
        and pa.mul.dim <= pb.mul.dim
    )
    report = factor.solve_left_operator(a, b)
    if report.solvable != conditions:
        return f"solvable flag disagrees (kind {kind}):\n{_show_pair(a, b)}"
    if report.solvable:
        pw = profile(report.witness)
        if not (pw.is_operator and factor.verify(a, b, report.witness, "left")):
            return f"witness malformed (kind {kind}):\n{_show_pair(a, b)}"
        if not report.verified:
            return f"report not verified (kind {kind}):\n{_show_pair(a, b)}"
    return None


def _suite_operator_criterion_right(rng: random.Random) -> Optional[str]:
    kind = rng.choice(("satisfy", "violate_mul_gain", "violate_mul_loss"))
    a, b = targeted_right_pair(rng, kind)
    pa, pb = profile(a), profile(b)
    if not pb.ran.contains(pa.ran):
        return None  # criterion is stated under range inclusion
    joint = compose(b.inverse(), a)
    expected = pb.mul.contains(pa.mul) and pb.ker.dim == 0
    if profile(joint).is_operator != expected:
        return f"operator criterion disagrees (kind {kind}):\n{_show_pair(a, b)}"
    return None


def _suite_operator_criterion_left(rng: random.Random) -> Optional[str]:
    kind = rng.choice(LEFT_KINDS)
    a, b = targeted_left_pair(rng, kind)
    pa, pb = profile(a), profile(b)
    joint = compose(a, b.inverse())
    expected = pa.mul.dim == 0 and pa.ker.contains(pb.ker.intersect(pa.dom))
    if profile(joint).is_operator != expected:
        return f"operator criterion disagrees (kind {kind}):\n{_show_pair(a, b)}"
    solution_and_operator = profile(joint).is_operator and compose(joint, b) == a
    expected_solution = pa.mul.dim == 0 and pb.dom.contains(pa.dom) and pa.ker.contains(pb.ker)
    if solution_and_operator != expected_solution:
        return f"operator-solution criterion disagrees (kind {kind}):\n{_show_pair(a, b)}"
    return None


def _suite_adjoint_right_iff(rng: random.Random) -> Optional[str]:
    a, b = random_square_pair(rng)
    pa, pb = profile(a), profile(b)
    conditions = pa.ker.contains(pb.ker) and pa.dom == pb.dom
    report = factor.solve_adjoint_right(a, b)
    direct = factor.solve_right_operator(a.adjoint(), b.adjoint())
    if report.solvable != conditions or report.solvable != direct.solvable:
        return f"adjoint-level translation disagrees:\n{_show_pair(a, b)}"
    if report.solvable and not (
        report.verified and factor.verify(a.adjoint(), b.adjoint(), report.witness, "right")
    ):
        return f"adjoint witness malformed:\n{_show_pair(a, b)}"
    return None


def _suite_adjoint_left_iff(rng: random.Random) -> Optional[str]:
    a, b = random_square_pair(rng)
    d = a.dim_x
    pa, pb = profile(a), profile(b)
    conditions = (
        pa.mul.contains(pb.mul)
        and pb.ran.contains(pa.ran)
        and d - pa.dom.dim <= d - pb.dom.dim
    )
    report = factor.solve_adjoint_left(a, b)
    direct = factor.solve_left_operator(a.adjoint(), b.adjoint())
    if report.solvable != conditions or report.solvable != direct.solvable:
        return f"adjoint-level translation disagrees:\n{_show_pair(a, b)}"
    if report.solvable and not (
        report.verified and factor.verify(a.adjoint(), b.adjoint(), report.witness, "left")
    ):
        return f"adjoint witness malformed:\n{_show_pair(a, b)}"
    return None


def _suite_selfadjoint_duality(rng: random.Random) -> Optional[str]:
    d = rng.randint(1, 4)
    a = random_selfadjoint(rng, d)
    b = random_selfadjoint(rng, d)
    if not (a.is_selfadjoint() and b.is_selfadjoint()):
        return f"generator produced a non-self-adjoint relation:\n{_show_pair(a, b)}"
    pa, pb = profile(a), profile(b)
    primal = pb.ran.contains(pa.ran) and pa.mul == pb.mul
    dual = pa.ker.contains(pb.ker) and pa.dom == pb.dom
    if primal != dual:
        return f"condition sets disagree for self-adjoint pair:\n{_show_pair(a, b)}"
    if factor.solve_right_operator(a, b).solvable != dual:
        return f"solver disagrees with dual conditions:\n{_show_pair(a, b)}"
    return None


def _suite_generator_honesty(rng: random.Random) -> Optional[str]:
    n = rng.randint(0, 5)
    m = rng.randint(0, 5)
    dd = rng.randint(0, n)
    dm = rng.randint(0, m)
    rk = rng.randint(0, min(dd, m - dm))
    spec = RelationSpec(n, m, dim_dom=dd, dim_mul=dm, dim_ker=dd - rk, seed=rng.getrandbits(32))
    rel = random_relation(spec)
    p = profile(rel)
    if (p.dom.dim, p.mul.dim, p.ker.dim) != (dd, dm, dd - rk):
        return f"profile {p.dom.dim, p.mul.dim, p.ker.dim} != requested {(dd, dm, dd - rk)}"
    return None


def _suite_determinism(rng: random.Random) -> Optional[str]:
    n = rng.randint(0, 5)
    m = rng.randint(0, 5)
    spec = RelationSpec(n, m, seed=rng.getrandbits(32))
    first = serialize_relation(random_relation(spec))
    second = serialize_relation(random_relation(spec))
    if first != second:
        return f"serialization differs for {spec!r}"
    return None


SUITES: dict[str, tuple[Callable[[random.Random], Optional[str]], int]] = {
    "relation_algebra": (_suite_relation_algebra, 500),
    "compose_oracle": (_suite_compose_oracle, 250),
    "graph_compose": (_suite_graph_compose, 200),
    "compose_algebra": (_suite_compose_algebra, 150),
    "adjoint_identities": (_suite_adjoint_identities, 300),
    "graph_maps": (_suite_graph_maps, 150),
    "membership": (_suite_membership, 200),
    "right_relation_iff": (_suite_right_relation_iff, 250),
    "left_relation_iff": (_suite_left_relation_iff, 250),
    "right_operator_iff": (_suite_right_operator_iff, 250),
    "left_operator_iff": (_suite_left_operator_iff, 250),
    "operator_criterion_right": (_suite_operator_criterion_right, 150),
    "operator_criterion_left": (_suite_operator_criterion_left, 150),
    "adjoint_right_iff": (_suite_adjoint_right_iff, 100),
    "adjoint_left_iff": (_suite_adjoint_left_iff, 100),
    "selfadjoint_duality": (_suite_selfadjoint_duality, 100),
    "generator_honesty": (_suite_generator_honesty, 200),
    "determinism": (_suite_determinism, 100),
}


def list_suites() -> tuple[str, ...]:
    return tuple(SUITES)


def default_cases(name: str) -> int:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name][1]


def run_suite(name: str, cases: Optional[int] = None, seed: int = 0) -> SuiteResult:
    """Run a named invariant suite; deterministic for equal (cases, seed)."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r} (known: {', '.join(sorted(SUITES))})")
    fn, default = SUITES[name]
    total = default if cases is None else cases
    passed = failed = 0
    counterexample = None
    for index in range(total):
        rng = random.Random(derive_seed(seed, index))
        message = fn(rng)
        if message is None:
            passed += 1
        else:
            failed += 1
            if counterexample is None:
                counterexample = f"case {index}: {message}"
    return SuiteResult(name, total, passed, failed, counterexample)
