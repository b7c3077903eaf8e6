"""Dense complex linear algebra with explicit rank tolerances.

Rank decisions use singular values (rank = number of sigma > tol * sigma_max);
pivot selection for image bases uses column-pivoted orthogonalization on the
same matrix, with deterministic tie-breaking (largest remaining column norm,
lowest index on ties) so repeated runs pick identical bases.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

DEFAULT_RANK_TOL = float(os.environ.get("TORSION_TOL_RANK", "1e-9"))


class SpanError(ValueError):
    """A vector expected to lie in a given span does not, within tolerance."""


def _as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {arr.shape}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def numerical_rank(m, tol: float = DEFAULT_RANK_TOL) -> int:
    arr = _as_matrix(m)
    if arr.size == 0:
        return 0
    sigma = np.linalg.svd(arr, compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.count_nonzero(sigma > tol * sigma[0]))


def kernel_basis(m, tol: float = DEFAULT_RANK_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the null space, rank decided by singular values."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    arr = _as_matrix(m)
    ncols = arr.shape[1]
    if ncols == 0:
        return []
    if arr.shape[0] == 0 or not arr.size:
        return [np.eye(ncols, dtype=complex)[:, j] for j in range(ncols)]
    _, sigma, vh = np.linalg.svd(arr)
    if sigma.size == 0 or sigma[0] == 0.0:
        rank = 0
    else:
        rank = int(np.count_nonzero(sigma > tol * sigma[0]))
    return [vh[j].conj() for j in range(rank, ncols)]


def pivot_columns(m, rank: int, order: Sequence[int] | None = None) -> list[int]:
    """``rank`` column indices spanning the column space.

    Default order is greedy by largest remaining column norm (numpy argmax
    gives the lowest index on exact ties).  Passing ``order`` restricts the
    greedy choice to that candidate sequence, which is how randomized
    admissible pivot sets are drawn: shuffle the candidates and keep each
    column that enlarges the span.
    """
    arr = _as_matrix(m)
    if rank == 0:
        return []
    work = arr.copy()
    chosen: list[int] = []
    scale0 = float(np.max(np.linalg.norm(arr, axis=0))) if arr.size else 0.0
    if order is None:
        for _ in range(rank):
            norms = np.linalg.norm(work, axis=0)
            j = int(np.argmax(norms))
            if norms[j] <= 1e-13 * scale0:
                raise np.linalg.LinAlgError("matrix rank smaller than requested pivots")
            q = work[:, j] / norms[j]
            chosen.append(j)
            work = work - np.outer(q, q.conj() @ work)
    else:
        scale = max(np.linalg.norm(arr, axis=0).max(), 1.0)
        for j in order:
            residual = np.linalg.norm(work[:, j])
            if residual > 1e-12 * scale:
                q = work[:, j] / residual
                chosen.append(j)
                work = work - np.outer(q, q.conj() @ work)
            if len(chosen) == rank:
                break
        if len(chosen) < rank:
            raise np.linalg.LinAlgError("candidate order does not span the column space")
    return sorted(chosen)


def image_pivots(m, tol: float = DEFAULT_RANK_TOL) -> tuple[list[int], np.ndarray]:
    """Pivot column indices plus the corresponding column-space basis."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    arr = _as_matrix(m)
    rank = numerical_rank(arr, tol)
    idx = pivot_columns(arr, rank)
    basis = arr[:, idx] if idx else np.zeros((arr.shape[0], 0), dtype=complex)
    return idx, basis


def image_basis_orthonormal(m, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Orthonormal basis of the column space (left singular vectors).

    Better conditioned than raw pivot columns when the matrix mixes scales;
    used wherever only the span matters, not a reproducible pivot choice.
    """
    arr = _as_matrix(m)
    if arr.size == 0:
        return np.zeros((arr.shape[0], 0), dtype=complex)
    u, sigma, _ = np.linalg.svd(arr)
    if sigma.size == 0 or sigma[0] == 0.0:
        return np.zeros((arr.shape[0], 0), dtype=complex)
    rank = int(np.count_nonzero(sigma > tol * sigma[0]))
    return u[:, :rank]


def basis_change_det(reference: Sequence, candidate: Sequence, tol: float = 1e-8) -> complex:
    """Determinant of the coordinate matrix of ``candidate`` in terms of ``reference``.

    Both lists must have the same length k; reference vectors must be linearly
    independent and every candidate must lie in their span (residual checked
    against tol times the candidate norm).
    """
    ref = np.column_stack([np.asarray(v, dtype=complex) for v in reference])
    cand = np.column_stack([np.asarray(v, dtype=complex) for v in candidate])
    if ref.shape != cand.shape:
        raise ValueError(f"basis size mismatch: {ref.shape} vs {cand.shape}")
    k = ref.shape[1]
    if numerical_rank(ref) < k:
        raise SpanError("reference vectors are linearly dependent")
    coeffs, *_ = np.linalg.lstsq(ref, cand, rcond=None)
    residual = np.linalg.norm(ref @ coeffs - cand)
    scale = max(np.linalg.norm(cand), 1.0)
    if residual > tol * scale:
        raise SpanError(f"candidate outside span of reference (residual {residual:.3e})")
    return complex(np.linalg.det(coeffs))
