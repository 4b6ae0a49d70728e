"""Self-contained numerical kernels: grids, stencils, Bessel K, banded eigensolver."""

from .bessel import BesselUnderflow, bessel_k, bessel_k_scaled
from .eigen import (
    BandedHermitianOperator,
    EigenConvergenceError,
    EigenResult,
    eig_banded,
    schrodinger_operator,
)
from .grid import Grid, differentiate, inner_product, integrate, quad_weights

__all__ = [
    "BandedHermitianOperator",
    "BesselUnderflow",
    "EigenConvergenceError",
    "EigenResult",
    "Grid",
    "bessel_k",
    "bessel_k_scaled",
    "differentiate",
    "eig_banded",
    "inner_product",
    "integrate",
    "quad_weights",
    "schrodinger_operator",
]
