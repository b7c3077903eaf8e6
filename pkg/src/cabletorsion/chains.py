"""Twisted chain complexes with distinguished geometric bases.

A presentation with n generators and n-1 relators gives a 2-complex with one
0-cell, n 1-cells and n-1 2-cells; tensoring the cellular chain complex of the
universal cover with sl(2,C) over the group ring gives chain groups of
dimensions 3, 3n, 3(n-1).  In the geometric basis (cell x {E,H,F}) the
differentials are

    d2 block (i, j) = evaluate_ring(rho, fox_derivative(r_j, x_i))   (3n x 3(n-1))
    d1 block i      = adjoint(rho(x_i)) - I_3                        (3 x 3n)

d1 d2 = 0 is the fundamental identity of the free calculus pushed through the
(anti-homomorphic) adjoint evaluation, and is asserted at construction.

The boundary torus gets its own cell structure (one 0-cell, 1-cells mu, la,
one 2-cell glued along the commutator), whose differentials collapse to
d2 = [[I-L], [M-I]] and d1 = [M-I | L-I] once M and L commute.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from . import linalg
from .presentations import Presentation
from .representations import Representation, ensure_relations, evaluate_ring
from .words import Word, fox_derivative

SL2_BASIS_NAMES = ("E", "H", "F")


class ChainComplexError(ValueError):
    pass


@dataclass
class BasedChainComplex:
    """Chain groups C_0..C_top with boundary maps and geometric basis labels.

    ``boundaries[i]`` is the matrix of d_{i+1}: C_{i+1} -> C_i, so a complex
    with top degree N stores N matrices.  Labels name the coordinate basis of
    each degree, for dumps and error messages.
    """

    dims: Tuple[int, ...]
    boundaries: Tuple[np.ndarray, ...]
    labels: Tuple[Tuple[str, ...], ...] = ()

    def __post_init__(self):
        if len(self.boundaries) != len(self.dims) - 1:
            raise ChainComplexError(
                f"{len(self.dims)} chain groups need {len(self.dims) - 1} boundary maps, "
                f"got {len(self.boundaries)}"
            )
        boundaries = []
        for i, mat in enumerate(self.boundaries):
            arr = np.asarray(mat, dtype=complex)
            want = (self.dims[i], self.dims[i + 1])
            if arr.shape != want:
                raise ChainComplexError(f"d_{i + 1} has shape {arr.shape}, expected {want}")
            if arr.size and not np.all(np.isfinite(arr)):
                raise ChainComplexError(f"d_{i + 1} has non-finite entries")
            boundaries.append(arr)
        self.boundaries = tuple(boundaries)
        for i in range(len(self.boundaries) - 1):
            lower, upper = self.boundaries[i], self.boundaries[i + 1]
            if lower.size and upper.size:
                prod = lower @ upper
                scale = max(np.linalg.norm(lower) * np.linalg.norm(upper), 1.0)
                if np.linalg.norm(prod) > 1e-9 * scale:
                    raise ChainComplexError(
                        f"d_{i + 1} d_{i + 2} != 0 (relative residual "
                        f"{np.linalg.norm(prod) / scale:.3e})"
                    )

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def d(self, i: int) -> np.ndarray:
        """Matrix of d_i: C_i -> C_{i-1}; zero-shaped outside 1..top."""
        if 1 <= i <= self.top:
            return self.boundaries[i - 1]
        if i == self.top + 1:
            return np.zeros((self.dims[self.top], 0), dtype=complex)
        if i == 0:
            return np.zeros((0, self.dims[0]), dtype=complex)
        raise IndexError(f"degree {i} outside complex of top degree {self.top}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def to_json_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "boundaries": [
                [[[v.real, v.imag] for v in row] for row in mat] for mat in self.boundaries
            ],
            "labels": [list(l) for l in self.labels],
        }


def _sl2_labels(cells: Sequence[str]) -> Tuple[str, ...]:
    return tuple(f"{cell}*{s}" for cell in cells for s in SL2_BASIS_NAMES)


def presentation_complex(pres: Presentation, rep: Representation) -> BasedChainComplex:
    """The twisted chain complex of the presentation 2-complex."""
    ensure_relations(pres, rep)
    n = len(pres.generators)
    m = len(pres.relators)
    d2 = np.zeros((3 * n, 3 * m), dtype=complex)
    for i, gen in enumerate(pres.generators):
        for j, rel in enumerate(pres.relators):
            block = evaluate_ring(rep, fox_derivative(rel, gen))
            d2[3 * i:3 * i + 3, 3 * j:3 * j + 3] = block
    d1 = np.zeros((3, 3 * n), dtype=complex)
    for i, gen in enumerate(pres.generators):
        d1[:, 3 * i:3 * i + 3] = rep.adjoint(gen) - np.eye(3)
    labels = (
        _sl2_labels(["v~"]),
        _sl2_labels([f"{g.name}~" for g in pres.generators]),
        _sl2_labels([f"f{j + 1}~" for j in range(m)]),
    )
    return BasedChainComplex((3, 3 * n, 3 * m), (d1, d2), labels)


def torus_complex(M, L) -> BasedChainComplex:
    """Twisted complex of the torus from the commuting adjoint actions M, L."""
    M = np.asarray(M, dtype=complex)
    L = np.asarray(L, dtype=complex)
    if M.shape != (3, 3) or L.shape != (3, 3):
        raise ChainComplexError("torus complex needs two 3x3 matrices")
    commutator = M @ L - L @ M
    scale = max(np.linalg.norm(M) * np.linalg.norm(L), 1.0)
    if np.linalg.norm(commutator) > 1e-9 * scale:
        raise ChainComplexError("peripheral adjoint actions do not commute")
    eye = np.eye(3)
    d2 = np.vstack([eye - L, M - eye])
    d1 = np.hstack([M - eye, L - eye])
    labels = (
        _sl2_labels(["v~"]),
        _sl2_labels(["mu~", "la~"]),
        _sl2_labels(["f~"]),
    )
    return BasedChainComplex((3, 6, 3), (d1, d2), labels)


@dataclass(frozen=True)
class HomologySummary:
    dims: Tuple[int, ...]
    cycle_bases: Tuple[Tuple[np.ndarray, ...], ...]
    boundary_bases: Tuple[Tuple[np.ndarray, ...], ...]


def homology(cplx: BasedChainComplex, tol: float = linalg.DEFAULT_RANK_TOL) -> HomologySummary:
    """Betti numbers with cycle and boundary bases, dim H_i = dim Z_i - dim B_i."""
    dims: List[int] = []
    cycles: List[Tuple[np.ndarray, ...]] = []
    bounds: List[Tuple[np.ndarray, ...]] = []
    for i in range(cplx.top + 1):
        d_i = cplx.d(i)
        d_up = cplx.d(i + 1)
        z = linalg.kernel_basis(d_i, tol) if i > 0 else [
            np.eye(cplx.dims[0], dtype=complex)[:, j] for j in range(cplx.dims[0])
        ]
        _, b_basis = linalg.image_pivots(d_up, tol) if d_up.size else (None, np.zeros((cplx.dims[i], 0)))
        dims.append(len(z) - b_basis.shape[1])
        cycles.append(tuple(z))
        bounds.append(tuple(b_basis.T))
    return HomologySummary(tuple(dims), tuple(cycles), tuple(bounds))


def class_coordinates(
    cycle,
    lifts: Sequence,
    cplx: BasedChainComplex,
    degree: int,
    tol: float = 1e-8,
) -> np.ndarray:
    """Coordinates of a cycle against homology lifts, modulo boundaries.

    Solves [lifts | boundary-basis] c = cycle by least squares and returns the
    lift block; a residual above ``tol`` (times the cycle norm) means the
    cycle is not in the span, i.e. wrong basis or degenerate parameters.
    """
    cycle = np.asarray(cycle, dtype=complex)
    d_this = cplx.d(degree)
    if d_this.size:
        bnorm = np.linalg.norm(d_this @ cycle)
        if bnorm > tol * max(np.linalg.norm(d_this) * np.linalg.norm(cycle), 1.0):
            raise ChainComplexError(f"vector is not a cycle in degree {degree}")
    d_up = cplx.d(degree + 1)
    b_basis = linalg.image_basis_orthonormal(d_up)
    columns = [np.asarray(v, dtype=complex) for v in lifts] + list(b_basis.T)
    if not columns:
        raise ChainComplexError("no lifts supplied")
    system = np.column_stack(columns)
    sol, *_ = np.linalg.lstsq(system, cycle, rcond=None)
    residual = np.linalg.norm(system @ sol - cycle)
    if residual > tol * max(np.linalg.norm(cycle), 1.0):
        raise ChainComplexError(
            f"cycle not in span of lifts + boundaries (residual {residual:.3e})"
        )
    return sol[: len(lifts)]


def chain_of_loop(word: Word, vector, rep: Representation, pres: Presentation) -> np.ndarray:
    """1-chain of a based loop with sl(2,C) coefficient ``vector``.

    Block i is evaluate_ring(rho, d(word)/d(x_i)) applied to the vector; for a
    relator and an invariant vector this lands in the boundaries.
    """
    vector = np.asarray(vector, dtype=complex)
    blocks = []
    for gen in pres.generators:
        blocks.append(evaluate_ring(rep, fox_derivative(word, gen)) @ vector)
    return np.concatenate(blocks)


def chain_of_loop_hp(
    word: Word, rep: Representation, pres: Presentation, case: str, dps: int = 40
) -> np.ndarray:
    """chain_of_loop with the family's invariant vector, in extended precision.

    Long peripheral words (the torus-piece longitude, the pattern-side
    t (p t p t^-1)^-b) pile up adjoint products of size z^(+-4 len) that cancel
    down to a small chain; in float64 that costs eight or more digits at the
    edge of the xi range, which is too coarse for the induced-map entries.
    The walk below accumulates the Fox blocks letter by letter with mpmath
    scalars, starting from matrices rebuilt at ``dps`` digits, and downcasts
    only the finished chain.
    """
    import mpmath

    from .representations import (
        _adjoint_entries,
        _inv3,
        _mat3_mul,
        _mat3_vec,
        hp_assignment,
        hp_invariant_vector,
    )

    with mpmath.mp.workdps(dps):
        entries = hp_assignment(rep, dps)
        vector = hp_invariant_vector(case, rep, dps)
        adj = {name: _adjoint_entries(m) for name, m in entries.items()}
        adj_inv = {name: _inv3(m) for name, m in adj.items()}
        zero3 = [mpmath.mpc(0)] * 3
        blocks = {g.name: list(zero3) for g in pres.generators}
        acc = [[mpmath.mpc(1 if i == j else 0) for j in range(3)] for i in range(3)]
        for gen, sign in word.letters:
            name = gen.name
            if sign == 1:
                term = _mat3_vec(acc, vector)
                blocks[name] = [b + t for b, t in zip(blocks[name], term)]
                acc = _mat3_mul(adj[name], acc)
            else:
                acc = _mat3_mul(adj_inv[name], acc)
                term = _mat3_vec(acc, vector)
                blocks[name] = [b - t for b, t in zip(blocks[name], term)]
        flat = [v for g in pres.generators for v in blocks[g.name]]
        return np.array([complex(v) for v in flat])
