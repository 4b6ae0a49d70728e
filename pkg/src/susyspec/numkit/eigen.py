"""Block-tridiagonal Hermitian operators and their low-lying eigenpairs.

A discretized Schroedinger operator -d^2/dx^2 + V(x) with a d-component
spinor potential is block tridiagonal: Hermitian d x d diagonal blocks
(potential plus the 2/h^2 stencil diagonal) and a scalar kinetic coupling
-1/h^2 between neighbouring sites.  Storage keeps only the lower triangle
of each block, so the assembled matrix equals its conjugate transpose
exactly, not merely to roundoff.

The eigensolve itself is delegated to LAPACK's banded Hermitian drivers
via scipy; the contract here is the tolerance and determinism, not the
reduction algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .grid import Grid

__all__ = [
    "BandedHermitianOperator",
    "EigenResult",
    "EigenConvergenceError",
    "eig_banded",
    "schrodinger_operator",
]


class EigenConvergenceError(RuntimeError):
    """LAPACK failed to converge; carries partial diagnostics."""

    def __init__(self, message: str, info=None):
        super().__init__(message)
        self.info = info


@dataclass
class BandedHermitianOperator:
    """Operator sum of a kinetic stencil and block-diagonal potential.

    Parameters
    ----------
    grid : Grid
        Underlying spatial grid (m sites).
    block_size : int
        Spinor dimension d in {1, 2, 3}.
    diagonal_blocks : ndarray, shape (m, d, d)
        Hermitian on-site blocks; only the lower triangle is used.
    coupling : float or ndarray
        Off-diagonal kinetic coefficient between neighbouring sites
        (scalar, typically -1/h^2), or per-bond values of shape (m-1,)
        for position-dependent-mass stencils.
    """

    grid: Grid
    block_size: int
    diagonal_blocks: np.ndarray
    coupling: np.ndarray | float
    _lower: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.block_size not in (1, 2, 3):
            raise ValueError("block_size must be 1, 2 or 3")
        blocks = np.asarray(self.diagonal_blocks)
        d = self.block_size
        if blocks.shape != (self.grid.m, d, d):
            raise ValueError(f"diagonal_blocks must have shape ({self.grid.m}, {d}, {d})")
        # keep the exact lower triangle; the upper is defined by conjugation
        self._lower = np.tril(blocks)
        coup = np.asarray(self.coupling, dtype=float)
        if coup.ndim == 0:
            coup = np.full(self.grid.m - 1, float(coup))
        if coup.shape != (self.grid.m - 1,):
            raise ValueError("coupling must be scalar or shape (m-1,)")
        self.coupling = coup

    @property
    def dimension(self) -> int:
        return self.grid.m * self.block_size

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self._lower)

    def block(self, j: int) -> np.ndarray:
        """Hermitian on-site block at site j, reconstructed exactly."""
        low = self._lower[j]
        return low + np.conj(np.tril(low, -1)).T

    def to_banded(self) -> np.ndarray:
        """Lower-band storage (LAPACK 'L' convention), bandwidth d."""
        m, d = self.grid.m, self.block_size
        dtype = complex if self.is_complex else float
        band = np.zeros((d + 1, m * d), dtype=dtype)
        for j in range(m):
            low = self._lower[j]
            for c in range(d):
                col = j * d + c
                for r in range(c, d):
                    band[r - c, col] = low[r, c]
            if j + 1 < m:
                for c in range(d):
                    band[d, j * d + c] = self.coupling[j]
        return band

    def to_dense(self) -> np.ndarray:
        m, d = self.grid.m, self.block_size
        dtype = complex if self.is_complex else float
        out = np.zeros((m * d, m * d), dtype=dtype)
        for j in range(m):
            b = self.block(j)
            out[j * d : (j + 1) * d, j * d : (j + 1) * d] = b
            if j + 1 < m:
                off = self.coupling[j] * np.eye(d, dtype=dtype)
                out[(j + 1) * d : (j + 2) * d, j * d : (j + 1) * d] = off
                out[j * d : (j + 1) * d, (j + 1) * d : (j + 2) * d] = off
        return out

    def apply(self, samples: np.ndarray) -> np.ndarray:
        """Apply to spinor samples of shape (m,) or (m, d)."""
        m, d = self.grid.m, self.block_size
        arr = np.asarray(samples)
        flat = arr.reshape(m, d)
        out = np.einsum("jab,jb->ja", self.blocks_full(), flat)
        out[:-1] += self.coupling[:, None] * flat[1:]
        out[1:] += self.coupling[:, None] * flat[:-1]
        return out.reshape(arr.shape)

    def blocks_full(self) -> np.ndarray:
        return self._lower + np.conj(np.swapaxes(np.tril(self._lower, -1), -1, -2))


@dataclass(frozen=True)
class EigenResult:
    """Lowest eigenpairs; eigenvectors have unit discrete L2 norm."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # shape (k, m, d)
    grid: Grid

    def state(self, i: int) -> np.ndarray:
        return self.eigenvectors[i]


def _full_band(lower_band: np.ndarray) -> np.ndarray:
    """Expand lower-band storage to the (2b+1, n) full-band layout."""
    b = lower_band.shape[0] - 1
    n = lower_band.shape[1]
    full = np.zeros((2 * b + 1, n), dtype=lower_band.dtype)
    full[b:] = lower_band
    for i in range(1, b + 1):
        full[b - i, i:] = np.conj(lower_band[i, : n - i])
    return full


def _inverse_iteration(lower_band, vals, tol):
    """Eigenvectors by shifted inverse iteration with banded LU solves.

    Clustered eigenvalues are handled by Gram-Schmidt against the vectors
    already converged in the same cluster, so degeneracies up to the
    cluster size come out orthonormal.
    """
    b = lower_band.shape[0] - 1
    n = lower_band.shape[1]
    full = _full_band(lower_band)
    scale = np.max(np.abs(lower_band))
    cluster_tol = 1e-8 * scale
    vecs = np.empty((len(vals), n), dtype=lower_band.dtype)
    rng = np.random.default_rng(1234)  # fixed seed: deterministic runs
    for i, lam in enumerate(vals):
        shifted = full.copy()
        # tiny detuning keeps the factorization nonsingular at an exact eigenvalue
        shifted[b] -= lam + 1e-11 * scale
        peers = [j for j in range(i) if abs(vals[j] - lam) < cluster_tol]
        x = rng.standard_normal(n)
        if np.iscomplexobj(full):
            x = x + 1j * rng.standard_normal(n)
        x /= np.linalg.norm(x)
        for _ in range(5):
            x = scipy.linalg.solve_banded((b, b), shifted, x, check_finite=False)
            for j in peers:
                x -= vecs[j] * (np.conj(vecs[j]) @ x)
            nrm = np.linalg.norm(x)
            if nrm == 0.0:  # pragma: no cover - degenerate restart
                x = rng.standard_normal(n)
                nrm = np.linalg.norm(x)
            x /= nrm
            res = _band_matvec(lower_band, x) - lam * x
            if np.linalg.norm(res) <= tol:
                break
        else:
            raise EigenConvergenceError(
                f"inverse iteration stalled at eigenvalue {lam}",
                info={"eigenvalue": lam, "residual": float(np.linalg.norm(res))},
            )
        vecs[i] = x
    return vecs


def _band_matvec(lower_band, x):
    b = lower_band.shape[0] - 1
    n = lower_band.shape[1]
    y = lower_band[0] * x
    for i in range(1, b + 1):
        y[i:] += lower_band[i, : n - i] * x[:-i]
        y[:-i] += np.conj(lower_band[i, : n - i]) * x[i:]
    return y


def eig_banded(op: BandedHermitianOperator, k: int) -> EigenResult:
    """k lowest eigenpairs of a block-tridiagonal Hermitian operator.

    Deterministic for identical input.  Eigenvalues come from the banded
    LAPACK driver without eigenvector accumulation (the accumulating
    variant is O(n^3) for block problems); eigenvectors are recovered by
    shifted inverse iteration, which is O(n) per state.  Raises
    :class:`EigenConvergenceError` on failure, with partial diagnostics.
    """
    n = op.dimension
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    band = op.to_banded()
    try:
        if band.shape[0] == 2 and not op.is_complex:
            vals, vecs = scipy.linalg.eigh_tridiagonal(
                band[0].real,
                band[1, :-1].real,
                select="i",
                select_range=(0, k - 1),
                check_finite=False,
            )
            vecs = vecs.T
        else:
            vals = scipy.linalg.eig_banded(
                band,
                lower=True,
                eigvals_only=True,
                select="i",
                select_range=(0, k - 1),
                check_finite=False,
            )
            scale = max(np.max(np.abs(band)), 1.0)
            vecs = _inverse_iteration(band, vals, tol=1e-9 * scale)
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover - rare
        raise EigenConvergenceError(f"banded eigensolver failed: {exc}", info=exc) from exc
    order = np.argsort(vals)
    vals = np.ascontiguousarray(vals[order])
    vecs = vecs[order]
    m, d = op.grid.m, op.block_size
    states = vecs.reshape(k, m, d)
    # LAPACK returns unit l2 vectors; rescale to unit discrete L2 norm
    states = states / np.sqrt(op.grid.h)
    return EigenResult(eigenvalues=vals, eigenvectors=states, grid=op.grid)


def schrodinger_operator(grid: Grid, potential) -> BandedHermitianOperator:
    """Assemble -d^2/dx^2 + V(x) with the 3-point kinetic stencil.

    ``potential`` is a callable returning a scalar or a Hermitian (d, d)
    matrix for each node, or a precomputed array of shape (m,), (m, d, d).
    Dirichlet conditions at both grid ends are implied by truncation.
    """
    x = grid.nodes
    if callable(potential):
        sample = np.asarray(potential(x[0]))
        d = 1 if sample.ndim == 0 else sample.shape[0]
        blocks = np.empty((grid.m, d, d), dtype=np.result_type(sample.dtype, float))
        for j, xj in enumerate(x):
            blocks[j] = np.asarray(potential(xj)).reshape(d, d)
    else:
        arr = np.asarray(potential)
        if arr.ndim == 1:
            blocks = arr.reshape(grid.m, 1, 1).astype(float)
        else:
            blocks = arr
        d = blocks.shape[1]
    h2 = grid.h * grid.h
    eye = np.eye(d)
    blocks = blocks + (2.0 / h2) * eye
    # exact hermitization of the analytic potential samples
    blocks = 0.5 * (blocks + np.conj(np.swapaxes(blocks, -1, -2)))
    if not np.iscomplexobj(blocks) or np.max(np.abs(blocks.imag)) == 0.0:
        blocks = blocks.real
    return BandedHermitianOperator(
        grid=grid, block_size=d, diagonal_blocks=blocks, coupling=-1.0 / h2
    )
