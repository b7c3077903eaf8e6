import numpy as np
import pytest

from cabletorsion.linalg import (
    SpanError,
    basis_change_det,
    image_pivots,
    kernel_basis,
    numerical_rank,
    pivot_columns,
)


class TestKernelBasis:
    def test_zero_matrix(self):
        vecs = kernel_basis(np.zeros((3, 3)), 1e-9)
        assert len(vecs) == 3

    def test_torus_d2_kernel(self):
        # stacked [I-L; M-I] for generic diagonal actions has kernel <(0,1,0)>
        zeta, eta = 1.3 + 0.2j, 0.8 - 0.5j
        M = np.diag([zeta ** -2, 1, zeta ** 2])
        L = np.diag([eta ** -2, 1, eta ** 2])
        d2 = np.vstack([np.eye(3) - L, M - np.eye(3)])
        vecs = kernel_basis(d2, 1e-9)
        assert len(vecs) == 1
        direction = vecs[0] / vecs[0][1]
        np.testing.assert_allclose(direction, [0, 1, 0], atol=1e-12)

    def test_rank_by_construction(self, rng):
        left = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
        right = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
        vecs = kernel_basis(left @ right, 1e-9)
        assert len(vecs) == 1

    def test_kernel_is_orthonormal_and_annihilated(self, rng):
        m = rng.normal(size=(4, 7)) + 1j * rng.normal(size=(4, 7))
        sigma_max = np.linalg.svd(m, compute_uv=False)[0]
        for v in kernel_basis(m, 1e-9):
            assert abs(np.linalg.norm(v) - 1) < 1e-12
            assert np.linalg.norm(m @ v) <= 10 * 1e-9 * sigma_max

    def test_rank_plus_nullity(self, rng):
        for _ in range(10):
            rows, cols = int(rng.integers(2, 7)), int(rng.integers(2, 7))
            m = rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))
            assert numerical_rank(m) + len(kernel_basis(m)) == cols

    def test_rejects_nonpositive_tol(self):
        with pytest.raises(ValueError):
            kernel_basis(np.eye(2), 0.0)


class TestImagePivots:
    def test_identity(self):
        idx, basis = image_pivots(np.eye(4), 1e-9)
        assert idx == [0, 1, 2, 3]
        assert basis.shape == (4, 4)

    def test_abelian_d1_has_two_pivots(self):
        # n copies of diag(z^-2-1, 0, z^2-1) side by side: rank 2
        z = 1.2 + 0.3j
        block = np.diag([z ** -2 - 1, 0, z ** 2 - 1])
        d1 = np.hstack([block] * 5)
        idx, basis = image_pivots(d1, 1e-9)
        assert len(idx) == 2
        assert numerical_rank(basis) == 2

    def test_rank_one_outer_product(self, rng):
        u = rng.normal(size=3) + 1j * rng.normal(size=3)
        v = rng.normal(size=3) + 1j * rng.normal(size=3)
        idx, _ = image_pivots(np.outer(u, v), 1e-9)
        assert len(idx) == 1

    def test_pivot_columns_full_rank_restriction(self, rng):
        m = rng.normal(size=(5, 8)) @ rng.normal(size=(8, 8))
        m[:, 2] = m[:, 0] + m[:, 1]  # force dependence
        rank = numerical_rank(m)
        idx = pivot_columns(m, rank)
        assert numerical_rank(m[:, idx]) == rank

    def test_custom_order_draws_admissible_sets(self, rng):
        m = np.array([[1.0, 2.0, 3.0], [0.0, 0.0, 1e-14]])
        rank = numerical_rank(m)
        idx = pivot_columns(m, rank, order=[2, 1, 0])
        assert len(idx) == rank


class TestBasisChangeDet:
    def test_standard_against_standard(self):
        e = list(np.eye(3))
        assert abs(basis_change_det(e, e) - 1) < 1e-12

    def test_swap_gives_minus_one(self):
        e = list(np.eye(2))
        assert abs(basis_change_det(e, [e[1], e[0]]) + 1) < 1e-12

    def test_diagonal_scaling(self):
        e = list(np.eye(2))
        cand = [np.array([2.0, 0.0]), np.array([0.0, 3.0])]
        assert abs(basis_change_det(e, cand) - 6) < 1e-12

    def test_multiplicative_under_composition(self, rng):
        base = list((np.eye(3) + 0j))
        mid = [rng.normal(size=3) + 1j * rng.normal(size=3) for _ in range(3)]
        top = [sum(rng.normal() * v for v in mid) for _ in range(3)]
        d1 = basis_change_det(base, mid)
        d2 = basis_change_det(mid, top)
        d12 = basis_change_det(base, top)
        assert abs(d1 * d2 - d12) <= 1e-10 * max(1.0, abs(d12))

    def test_rejects_vector_outside_span(self):
        ref = [np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])]
        with pytest.raises(SpanError):
            basis_change_det(ref, [ref[0], np.array([0.0, 0.0, 1.0])])

    def test_rejects_dependent_reference(self):
        ref = [np.array([1.0, 0.0]), np.array([2.0, 0.0])]
        with pytest.raises(SpanError):
            basis_change_det(ref, ref)
