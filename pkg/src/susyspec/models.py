"""Concrete physical systems mapped onto catalog problems.

Three models: the neutral spin-1/2 particle in the field of a straight
current-carrying wire (radial problem with a matrix superpotential), the
exponential-field spin-1/2 model whose separated equation lands in the
exponential matrix family, and the spin-1 generalization of the wire
problem whose radial operator splits into a scalar modified-Coulomb
block plus an inverse-square 2x2 block.

Sign frames: a catalog potential may match a model's potential only
after conjugation by a constant involution (sigma_3 flips the sign of
the off-diagonal Coulomb term).  The descriptor records that frame
explicitly rather than absorbing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .catalog import ParamSet, instance
from .catalog.base import SuperpotentialInstance
from .catalog.matrices import SIGMA1, SIGMA3, SPIN1_S1, SPIN1_S2, SPIN1_S3
from .engine.ladder import LadderProblem
from .numkit.eigen import eig_banded, schrodinger_operator
from .numkit.grid import Grid

__all__ = [
    "ModelDescriptor",
    "ps_superpotential",
    "ps_potential",
    "ps_radial_problem",
    "ep1_reduction",
    "Spin1Reduction",
    "spin1_radial_problem",
]


@dataclass(frozen=True)
class ModelDescriptor:
    """A named model bound to its catalog instance.

    ``frame`` is the constant unitary U with U V_catalog U^dag = V_model
    (None for the identity), ``energy_offset`` the additive bookkeeping
    between the separated equation's eigenvalue and the full model's.
    """

    name: str
    catalog: SuperpotentialInstance
    frame: Optional[np.ndarray] = None
    energy_offset: float = 0.0
    radial_scale: float = 1.0
    potential: Optional[Callable] = None

    def model_potential(self, x):
        v = self.catalog.potential(x)
        if self.frame is None:
            return v
        return np.einsum("ab,...bc,cd->...ad", self.frame, v, self.frame.conj().T)


def ps_superpotential(kappa: float, x) -> np.ndarray:
    """Matrix superpotential of the wire problem,
    W = s3/(2r) - s1/(2 kappa + 1) - (2 kappa + 1)/(2r)."""
    xs = np.asarray(x, dtype=float)
    return (
        (1.0 / (2.0 * xs))[..., None, None] * SIGMA3
        - np.ones_like(xs)[..., None, None] * SIGMA1 / (2.0 * kappa + 1.0)
        - (2.0 * kappa + 1.0) / (2.0 * xs)[..., None, None] * np.eye(2)
    )


def ps_potential(kappa: float, x) -> np.ndarray:
    """Radial potential kappa(kappa - s3)/r^2 + s1/r of the wire problem."""
    xs = np.asarray(x, dtype=float)
    inv2 = (1.0 / xs**2)[..., None, None]
    inv1 = (1.0 / xs)[..., None, None]
    return kappa * inv2 * (kappa * np.eye(2) - SIGMA3) + inv1 * SIGMA1


def ps_descriptor(kappa: float) -> ModelDescriptor:
    if kappa < 1 or kappa != int(kappa):
        raise ValueError("the wire problem's kappa is a positive integer")
    cat = instance("matrix2.inverse", nu=float(kappa), mu=0.0, omega=1.0)
    return ModelDescriptor(
        name="ps",
        catalog=cat,
        frame=SIGMA3,  # sigma3 W sigma3 reproduces the model's sign of s1
        potential=lambda x: ps_potential(kappa, x),
    )


def ps_radial_problem(kappa: float, grid: Grid) -> LadderProblem:
    """Wire-problem radial equation as a gated ladder problem.

    Factorization constant -1/(2 kappa + 1)^2; maps onto the
    inverse-square matrix family at (nu, mu, omega) = (kappa, 0, 1).
    """
    desc = ps_descriptor(kappa)
    return LadderProblem(desc.catalog, grid)


def ep1_reduction(lam: float, nu: float, p: float) -> ModelDescriptor:
    """Separated 1D problem of the exponential-field model.

    The two-component potential lam^2 e^(-2y) - lam(2 nu - 1) e^(-y) s1
    - p s3 is the exponential matrix family at (nu, mu, omega, lam) =
    (nu, lam, -p/2, 1); the full model's eigenvalue bookkeeping is
    E_full = E + p^2 + 1/4.
    """
    cat = instance("matrix2.exp", nu=nu, mu=lam, omega=-p / 2.0, lam=1.0)

    def v_model(x):
        xs = np.asarray(x, dtype=float)
        ones = np.ones_like(xs)[..., None, None]
        return (
            (lam**2 * np.exp(-2.0 * xs))[..., None, None] * np.eye(2)
            - (lam * (2.0 * nu - 1.0) * np.exp(-xs))[..., None, None] * SIGMA1
            - p * ones * SIGMA3
        )

    return ModelDescriptor(
        name="ep1", catalog=cat, frame=None, energy_offset=p**2 + 0.25, potential=v_model
    )


@dataclass(frozen=True)
class Spin1Reduction:
    """Assembled 3x3 radial problem and its block decomposition."""

    j: int
    mu: float
    lam: float
    grid: Grid
    assembled: object  # BandedHermitianOperator
    scalar_block: object
    matrix_block: object
    pot1_instance: Optional[SuperpotentialInstance]

    def spectra(self, k: int):
        """(assembled eigenvalues, merged decomposed eigenvalues)."""
        ea = eig_banded(self.assembled, k).eigenvalues
        es = eig_banded(self.scalar_block, k).eigenvalues
        em = eig_banded(self.matrix_block, k).eigenvalues
        merged = np.sort(np.concatenate([es, em]))[:k]
        return ea, merged


def spin1_radial_problem(mu: float, lam: float, grid: Grid, j: int = 1) -> Spin1Reduction:
    """Radial reduction of the spin-1 wire model at total angular momentum j.

    Assembled form: -d^2/dr^2 + ((j - S3)^2 - 1/4)/r^2
                    + [mu (2 S2^2 - 1) + lam (2 S1^2 - 1)]/r
    with the spin-1 matrices in the Cartesian representation.  The same
    operator written in the S3 eigenbasis block-decomposes into a scalar
    modified-Coulomb channel -d^2 + (j^2 - 1/4)/r^2 + (lam + mu)/r and a
    2x2 inverse-square-family channel with parameters
    (nu, mu, omega) = (j, 1/2, mu - lam).
    """
    x = grid.nodes
    eye3 = np.eye(3)
    jmS = j * eye3 - SPIN1_S3
    centrifugal = (jmS @ jmS - 0.25 * eye3).astype(complex)
    coupling = (
        mu * (2.0 * SPIN1_S2 @ SPIN1_S2 - eye3) + lam * (2.0 * SPIN1_S1 @ SPIN1_S1 - eye3)
    ).astype(complex)

    def v_assembled(r):
        return centrifugal / r**2 + coupling / r

    assembled = schrodinger_operator(grid, v_assembled)

    def v_scalar(r):
        return np.array([[(j**2 - 0.25) / r**2 + (lam + mu) / r]])

    scalar_block = schrodinger_operator(grid, v_scalar)

    def v_matrix(r):
        diag = np.diag([(j - 1) ** 2 - 0.25, (j + 1) ** 2 - 0.25]) / r**2
        return diag + (lam - mu) / r * SIGMA1

    matrix_block = schrodinger_operator(grid, v_matrix)

    pot1_inst = None
    if mu != lam:
        pot1_inst = instance("matrix2.inverse", nu=float(j), mu=0.5, omega=mu - lam)
    return Spin1Reduction(
        j=j,
        mu=mu,
        lam=lam,
        grid=grid,
        assembled=assembled,
        scalar_block=scalar_block,
        matrix_block=matrix_block,
        pot1_instance=pot1_inst,
    )


MODEL_BUILDERS = {
    "ps": ps_descriptor,
    "ep1": ep1_reduction,
}
