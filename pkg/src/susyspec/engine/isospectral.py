"""Isospectrality of matrix potentials with direct sums of scalar ones.

At half-integer mu the inverse-square matrix family has the same level
set as a pair of scalar Coulomb problems; the tangent family at integer
mu (or half-integer nu) matches a decoupled pair of trigonometric
Rosen-Morse potentials.  The check compares distinct level values, since
the direct sum carries double multiplicities where its two blocks
coincide while the matrix problem lists each level once.
"""

from __future__ import annotations

import numpy as np

from ..catalog import ParamSet, get_kind, instance
from ..catalog.base import SuperpotentialInstance
from ..numkit.eigen import eig_banded, schrodinger_operator
from ..numkit.grid import Grid

__all__ = ["coulomb_references", "trig_references", "isospectral_check"]


def coulomb_references(params: ParamSet) -> list[SuperpotentialInstance]:
    """Scalar Coulomb pair whose union of spectra matches the
    inverse-square matrix family at half-integer mu."""
    return [
        instance("scalar.coulomb", kappa=params.nu + 0.5, omega=params.omega / 2.0),
        instance(
            "scalar.coulomb", kappa=params.nu + params.mu + 1.0, omega=params.omega / 2.0
        ),
    ]


def trig_references(params: ParamSet, branch: str = "nu") -> list[SuperpotentialInstance]:
    """Decoupled trigonometric Rosen-Morse pair for the tangent family:
    r(r-1) sec^2 +/- 2 omega lam tan, with r = nu on the half-integer-nu
    branch (where the matrix spectrum is the doubled nu tower) or
    r = mu + 1/2 on the integer-mu branch."""
    r = params.nu if branch == "nu" else params.mu + 0.5
    lam = params.lam
    return [
        instance("scalar.rosen1", kappa=r, omega=params.omega * lam, lam=lam),
        instance("scalar.rosen1", kappa=r, omega=-params.omega * lam, lam=lam),
    ]


def _distinct(levels: np.ndarray, tol: float) -> np.ndarray:
    out = []
    for e in np.sort(levels):
        if not out or e - out[-1] > tol:
            out.append(float(e))
    return np.array(out)


def isospectral_check(
    w: SuperpotentialInstance,
    references: list[SuperpotentialInstance],
    grid: Grid,
    k: int,
    cluster_tol: float = 1e-7,
) -> float:
    """max |Delta E| between the k lowest distinct levels of the matrix
    problem and of the union of the reference scalar spectra, all
    computed with the banded eigensolver on the same grid."""
    # degenerate pairs survive in both spectra, so request enough states
    # that k distinct values remain after clustering
    request = 2 * (k + 2)
    res = eig_banded(schrodinger_operator(grid, w.potential(grid.nodes)), request)
    matrix_levels = _distinct(res.eigenvalues, cluster_tol)[:k]
    pool = []
    for ref in references:
        r = eig_banded(schrodinger_operator(grid, ref.potential(grid.nodes)), request)
        pool.extend(r.eigenvalues)
    ref_levels = _distinct(np.array(pool), cluster_tol)[:k]
    if len(matrix_levels) < k or len(ref_levels) < k:
        raise RuntimeError("not enough distinct levels for the comparison")
    return float(np.max(np.abs(matrix_levels - ref_levels)))
