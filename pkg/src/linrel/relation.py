"""Linear relations (multivalued linear operators) between rational spaces.

A relation from Q^n to Q^m is a subspace of Q^(n+m), coordinates ordered
x-block then y-block; the graph of a single-valued operator is the special
case with trivial multivalued part.  All values are canonical, so relation
equality is decidable and representation independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exact import Matrix, Scalar, nullspace, solve_linear, vector
from .subspace import Subspace, annihilator_rows


@dataclass(frozen=True)
class LinearRelation:
    dim_x: int
    dim_y: int
    graph: Subspace

    def __post_init__(self) -> None:
        if self.dim_x < 0 or self.dim_y < 0:
            raise ValueError("negative space dimension")
        if self.graph.ambient_dim != self.dim_x + self.dim_y:
            raise ValueError(
                f"graph lives in Q^{self.graph.ambient_dim}, expected Q^{self.dim_x + self.dim_y}"
            )

    @classmethod
    def from_generators(
        cls, dim_x: int, dim_y: int, generators: Sequence[Sequence[Scalar]]
    ) -> "LinearRelation":
        """Relation spanned by (x; y)-generator vectors of length dim_x + dim_y."""
        cols = [vector(g) for g in generators]
        for g in cols:
            if len(g) != dim_x + dim_y:
                raise ValueError(
                    f"generator length {len(g)} does not match dim_x + dim_y = {dim_x + dim_y}"
                )
        gens = Matrix.from_cols(cols, rows=dim_x + dim_y)
        return cls(dim_x, dim_y, Subspace.span(dim_x + dim_y, gens))

    @classmethod
    def graph_of_matrix(cls, m: Matrix) -> "LinearRelation":
        """The everywhere-defined operator x ↦ m·x, identified with its graph."""
        gens = Matrix.identity(m.cols).vstack(m)
        return cls(m.cols, m.rows, Subspace.span(m.cols + m.rows, gens))

    @classmethod
    def identity(cls, n: int) -> "LinearRelation":
        return cls.graph_of_matrix(Matrix.identity(n))

    @classmethod
    def zero_relation(cls, dim_x: int, dim_y: int) -> "LinearRelation":
        return cls(dim_x, dim_y, Subspace.zero(dim_x + dim_y))

    @classmethod
    def full_relation(cls, dim_x: int, dim_y: int) -> "LinearRelation":
        return cls(dim_x, dim_y, Subspace.full(dim_x + dim_y))

    def profile(self) -> "RelationProfile":
        return _profile(self)

    def inverse(self) -> "LinearRelation":
        """Coordinate swap of the graph; always exists."""
        n, m = self.dim_x, self.dim_y
        basis = self.graph.basis
        rows = [basis.row(n + i) for i in range(m)] + [basis.row(i) for i in range(n)]
        gens = Matrix.from_rows(rows, cols=basis.cols)
        return LinearRelation(m, n, Subspace.span(m + n, gens))

    def reduce_operator_part(self) -> "LinearRelation":
        """The single-valued summand A ∩ (Q^n × mul(A)^⊥); dom is preserved."""
        mul = _profile(self).mul
        window = Subspace.full(self.dim_x).product(mul.ortho_complement())
        return LinearRelation(self.dim_x, self.dim_y, self.graph.intersect(window))

    def adjoint(self) -> "LinearRelation":
        """Orthocomplement of the flip-and-negate image of the graph.

        Defined for relations on a single space: (x, y) is adjoint-related
        exactly when ⟨y, u⟩ = ⟨x, v⟩ for every (u, v) in the relation.
        """
        if self.dim_x != self.dim_y:
            raise ValueError("adjoint requires dim_x == dim_y")
        n = self.dim_x
        flipped = [
            tuple(-x for x in c[n:]) + tuple(c[:n]) for c in self.graph.basis.column_tuples()
        ]
        turned = Subspace.span(2 * n, Matrix.from_cols(flipped, rows=2 * n))
        return LinearRelation(n, n, turned.ortho_complement())

    def is_selfadjoint(self) -> bool:
        return self == self.adjoint()

    def membership(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> bool:
        """Whether (x; y) lies in the graph, decided by an exact solve."""
        xv, yv = vector(x), vector(y)
        if len(xv) != self.dim_x or len(yv) != self.dim_y:
            raise ValueError(
                f"point lengths ({len(xv)}, {len(yv)}) do not match dims ({self.dim_x}, {self.dim_y})"
            )
        return solve_linear(self.graph.basis, xv + yv) is not None

    def __matmul__(self, other: "LinearRelation") -> "LinearRelation":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"LinearRelation({self.dim_x}->{self.dim_y}, graph dim {self.graph.dim})"


@dataclass(frozen=True)
class RelationProfile:
    dom: Subspace
    ran: Subspace
    ker: Subspace
    mul: Subspace
    is_operator: bool
    is_everywhere_defined: bool
    is_surjective: bool


def _split_blocks(rel: LinearRelation) -> tuple[Matrix, Matrix]:
    basis = rel.graph.basis
    x_rows = [basis.row(i) for i in range(rel.dim_x)]
    y_rows = [basis.row(rel.dim_x + i) for i in range(rel.dim_y)]
    return (
        Matrix.from_rows(x_rows, cols=basis.cols),
        Matrix.from_rows(y_rows, cols=basis.cols),
    )


@lru_cache(maxsize=None)
def _profile(rel: LinearRelation) -> RelationProfile:
    n, m = rel.dim_x, rel.dim_y
    gx, gy = _split_blocks(rel)
    dom = rel.graph.block_project(0, n)
    ran = rel.graph.block_project(n, n + m)
    # (x, 0) in the graph <=> x = gx·c for some c with gy·c = 0, and dually
    ker = Subspace.span(n, gx @ nullspace(gy))
    mul = Subspace.span(m, gy @ nullspace(gx))
    return RelationProfile(
        dom=dom,
        ran=ran,
        ker=ker,
        mul=mul,
        is_operator=mul.dim == 0,
        is_everywhere_defined=dom.dim == n,
        is_surjective=ran.dim == m,
    )


def profile(rel: LinearRelation) -> RelationProfile:
    return _profile(rel)


def compose(outer: LinearRelation, inner: LinearRelation) -> LinearRelation:
    """Relation product outer∘inner = {(x, z) : ∃y, (x,y) ∈ inner, (y,z) ∈ outer}.

    Computed as a subspace intersection followed by a coordinate projection:
    the pullback {(x, y, z)} in Q^(n+m+k) is cut out by the annihilator
    equations of the two graphs, then the y-block is projected away.  No
    single-valuedness is assumed anywhere, so genuinely multivalued inputs
    compose correctly.
    """
    if inner.dim_y != outer.dim_x:
        raise ValueError(
            f"interface dimensions differ: inner maps into Q^{inner.dim_y}, "
            f"outer is defined on Q^{outer.dim_x}"
        )
    n, m, k = inner.dim_x, inner.dim_y, outer.dim_y
    e_inner = annihilator_rows(inner.graph)
    e_outer = annihilator_rows(outer.graph)
    rows = [tuple(e_inner.row(i)) + (0,) * k for i in range(e_inner.rows)]
    rows += [(0,) * n + tuple(e_outer.row(i)) for i in range(e_outer.rows)]
    pullback = nullspace(Matrix.from_rows(rows, cols=n + m + k))
    keep = list(range(n)) + list(range(n + m, n + m + k))
    gens = Matrix.from_rows([pullback.row(i) for i in keep], cols=pullback.cols)
    return LinearRelation(n, k, Subspace.span(n + k, gens))


def cw_sum(a1: LinearRelation, a2: LinearRelation) -> tuple[LinearRelation, bool]:
    """Componentwise sum of relations; the flag reports directness.

    The sum is direct exactly when the two graphs intersect only in (0, 0).
    """
    if a1.dim_x != a2.dim_x or a1.dim_y != a2.dim_y:
        raise ValueError(
            f"dimension mismatch: ({a1.dim_x}, {a1.dim_y}) vs ({a2.dim_x}, {a2.dim_y})"
        )
    total = LinearRelation(a1.dim_x, a1.dim_y, a1.graph.sum(a2.graph))
    return total, a1.graph.direct_sum_check(a2.graph)


def graph_projection(rel: LinearRelation) -> LinearRelation:
    """The operator (x, y) ↦ x on the graph, as a relation Q^(n+m) → Q^n.

    Always single-valued, with domain the whole graph, range dom(rel), and
    kernel {0} × mul(rel).
    """
    n = rel.dim_x
    cols = [tuple(c) + tuple(c[:n]) for c in rel.graph.basis.column_tuples()]
    ambient = rel.dim_x + rel.dim_y + n
    graph = Subspace.span(ambient, Matrix.from_cols(cols, rows=ambient))
    return LinearRelation(rel.dim_x + rel.dim_y, n, graph)


def graph_section(rel: LinearRelation) -> LinearRelation:
    """The selection dom(rel) → graph sending x to the unique (x, y) with
    y ⊥ mul(rel); composing graph_projection after it gives the identity on
    dom(rel)."""
    n = rel.dim_x
    reduced = rel.reduce_operator_part()
    cols = [tuple(c[:n]) + tuple(c) for c in reduced.graph.basis.column_tuples()]
    ambient = n + rel.dim_x + rel.dim_y
    graph = Subspace.span(ambient, Matrix.from_cols(cols, rows=ambient))
    return LinearRelation(n, rel.dim_x + rel.dim_y, graph)


def identity_on(sub: Subspace) -> LinearRelation:
    """The relation {(x, x) : x ∈ sub} on the ambient space of ``sub``."""
    d = sub.ambient_dim
    cols = [tuple(c) + tuple(c) for c in sub.basis.column_tuples()]
    return LinearRelation(d, d, Subspace.span(2 * d, Matrix.from_cols(cols, rows=2 * d)))


def zero_times(dim_x: int, values: Subspace) -> LinearRelation:
    """The purely multivalued relation {0} × values inside Q^dim_x × ambient."""
    m = values.ambient_dim
    cols = [(0,) * dim_x + tuple(c) for c in values.basis.column_tuples()]
    return LinearRelation(dim_x, m, Subspace.span(dim_x + m, Matrix.from_cols(cols, rows=dim_x + m)))
