from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from linrel import Matrix, Subspace

from strategies import subspaces


def sp(d, *vectors):
    return Subspace.from_vectors(d, vectors)


class TestSpan:
    def test_parallel_generators_collapse(self):
        u = sp(2, (2, 0), (1, 0))
        assert u.dim == 1
        assert u == sp(2, (1, 0))

    def test_no_generators(self):
        assert sp(3).dim == 0
        assert sp(3) == Subspace.zero(3)

    def test_full_space(self):
        assert sp(2, (1, 0), (0, 1)) == Subspace.full(2)

    def test_row_count_mismatch(self):
        with pytest.raises(ValueError):
            Subspace.span(3, Matrix.identity(2))

    @given(subspaces(), st.randoms(use_true_random=False))
    def test_canonical_under_shuffle_and_scale(self, u, rng):
        scaled = []
        for c in u.basis.column_tuples():
            factor = rng.choice([1, -1, 2, 3])
            scaled.append([x * factor for x in c])
        rng.shuffle(scaled)
        # throw in a redundant sum of the generators
        if scaled:
            scaled.append([sum(c) for c in zip(*scaled)])
        assert Subspace.from_vectors(u.ambient_dim, scaled) == u


class TestSum:
    def test_axes_fill_plane(self):
        assert sp(2, (1, 0)).sum(sp(2, (0, 1))) == Subspace.full(2)

    def test_zero_is_identity(self):
        u = sp(3, (1, 2, 3))
        assert u.sum(Subspace.zero(3)) == u

    def test_independent_lines(self):
        assert sp(2, (1, 1)).sum(sp(2, (1, -1))) == Subspace.full(2)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            sp(2, (1, 0)).sum(sp(3, (1, 0, 0)))


class TestIntersect:
    def test_planes_meet_in_line(self):
        u = sp(3, (1, 0, 0), (0, 1, 0))
        v = sp(3, (0, 1, 0), (0, 0, 1))
        assert u.intersect(v) == sp(3, (0, 1, 0))

    def test_idempotent(self):
        u = sp(3, (1, 2, 0), (0, 0, 1))
        assert u.intersect(u) == u

    def test_transversal_lines(self):
        assert sp(2, (1, 0)).intersect(sp(2, (0, 1))) == Subspace.zero(2)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            sp(2, (1, 0)).intersect(sp(3, (1, 0, 0)))


class TestOrthoComplement:
    def test_axis(self):
        assert sp(2, (1, 0)).ortho_complement() == sp(2, (0, 1))

    def test_zero_space(self):
        assert Subspace.zero(3).ortho_complement() == Subspace.full(3)

    def test_diagonal(self):
        assert sp(2, (1, 1)).ortho_complement() == sp(2, (1, -1))

    @given(subspaces())
    def test_involution_and_dimension(self, u):
        perp = u.ortho_complement()
        assert perp.ortho_complement() == u
        assert u.dim + perp.dim == u.ambient_dim
        assert u.intersect(perp) == Subspace.zero(u.ambient_dim)


class TestContains:
    def test_full_contains_anything(self):
        assert Subspace.full(3).contains(sp(3, (1, 2, 3)))

    def test_scaled_vector(self):
        assert sp(2, (1, 0)).contains(sp(2, (2, 0)))

    def test_other_axis(self):
        assert not sp(2, (1, 0)).contains(sp(2, (0, 1)))

    def test_contains_vector(self):
        u = sp(3, (1, 1, 0))
        assert u.contains_vector((2, 2, 0))
        assert not u.contains_vector((1, 0, 0))
        with pytest.raises(ValueError):
            u.contains_vector((1, 0))


class TestBlockProject:
    def test_read_coordinates(self):
        u = sp(4, (1, 0, 1, 0))
        assert u.block_project(0, 2) == sp(2, (1, 0))

    def test_full_space(self):
        assert Subspace.full(4).block_project(2, 4) == Subspace.full(2)

    def test_canonicalizes(self):
        u = sp(4, (1, 2, 3, 4))
        assert u.block_project(2, 4) == sp(2, (1, Fraction(4, 3)))

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            sp(3, (1, 1, 1)).block_project(1, 5)
        with pytest.raises(ValueError):
            sp(3, (1, 1, 1)).block_project(-1, 2)


class TestDirectSum:
    def test_axes(self):
        assert sp(2, (1, 0)).direct_sum_check(sp(2, (0, 1)))

    def test_self_overlap(self):
        u = sp(2, (1, 0))
        assert not u.direct_sum_check(u)

    def test_diagonals(self):
        assert sp(2, (1, 1)).direct_sum_check(sp(2, (1, -1)))


class TestLatticeLaws:
    @given(subspaces(ambient=3), subspaces(ambient=3))
    def test_sum_contains_and_meet_contained(self, u, v):
        total = u.sum(v)
        meet = u.intersect(v)
        assert total.contains(u) and total.contains(v)
        assert u.contains(meet) and v.contains(meet)

    @given(subspaces(ambient=4), subspaces(ambient=4))
    def test_dimension_formula(self, u, v):
        assert u.sum(v).dim + u.intersect(v).dim == u.dim + v.dim

    @given(subspaces(max_dim=3), subspaces(max_dim=3))
    def test_product_dims(self, u, v):
        p = u.product(v)
        assert p.ambient_dim == u.ambient_dim + v.ambient_dim
        assert p.dim == u.dim + v.dim
