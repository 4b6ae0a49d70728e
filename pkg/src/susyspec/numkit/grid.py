"""Uniform grids, quadrature and finite-difference derivatives.

Everything here is deliberately boring: evenly spaced nodes, an
end-corrected trapezoid rule for norms, and fixed-coefficient stencils.
The stencils are 4th order in the interior with one-sided closures, so
that applying first-order ladder operators to sampled wavefunctions does
not dominate the error budget of the eigensolver cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Grid", "integrate", "inner_product", "quad_weights", "differentiate"]


@dataclass(frozen=True)
class Grid:
    """Uniform 1D grid x_j = x0 + j*h, j = 0..m-1.

    Half-line problems with a Dirichlet condition at the origin are
    discretized by taking x0 = h and omitting the boundary node, so that
    psi(0) = 0 is imposed implicitly.
    """

    x0: float
    h: float
    m: int

    def __post_init__(self):
        if self.h <= 0.0:
            raise ValueError("grid spacing h must be positive")
        if self.m < 3:
            raise ValueError("grid needs at least 3 nodes")

    @property
    def nodes(self) -> np.ndarray:
        return self.x0 + self.h * np.arange(self.m)

    @property
    def x_max(self) -> float:
        return self.x0 + self.h * (self.m - 1)

    @classmethod
    def half_line(cls, length: float, m: int) -> "Grid":
        """Interior nodes h, 2h, ..., mh of [0, L] with Dirichlet ends."""
        h = length / (m + 1)
        return cls(x0=h, h=h, m=m)

    @classmethod
    def symmetric(cls, half_width: float, m: int) -> "Grid":
        """Interior nodes of [-L, L]; symmetric about the origin."""
        h = 2.0 * half_width / (m + 1)
        return cls(x0=-half_width + h, h=h, m=m)


def _as_samples(grid: Grid, samples) -> np.ndarray:
    arr = np.asarray(samples)
    if arr.shape[0] != grid.m:
        raise ValueError(
            f"sample count {arr.shape[0]} does not match grid size {grid.m}"
        )
    return arr


def quad_weights(grid: Grid) -> np.ndarray:
    """Trapezoid weights with the Euler-Maclaurin end correction folded in.

    The correction -h^2/12*(f'(b) - f'(a)), with the derivatives taken by
    the one-sided 4th-order stencils, is linear in the samples and so
    amounts to adjusted weights on the five nodes at each end.  It
    vanishes for data decaying at the ends and buys two extra orders for
    smooth non-vanishing data.
    """
    h = grid.h
    w = np.full(grid.m, h)
    w[0] *= 0.5
    w[-1] *= 0.5
    if grid.m >= 10:
        c = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0
        w[:5] += h / 12.0 * c
        w[-1:-6:-1] += h / 12.0 * c
    return w


def inner_product(grid: Grid, a, b) -> complex:
    """<a|b> over the grid with the corrected trapezoid weights."""
    aa = _as_samples(grid, a)
    bb = _as_samples(grid, b)
    prod = np.conj(aa) * bb
    if prod.ndim > 1:
        prod = prod.sum(axis=tuple(range(1, prod.ndim)))
    return complex(quad_weights(grid) @ prod)


def integrate(grid: Grid, samples) -> float:
    """Squared-norm integral of sampled (spinor) values over the grid."""
    arr = _as_samples(grid, samples)
    return float(inner_product(grid, arr, arr).real)


# One-sided first-derivative closures, 4th order (rows: offsets 0 and 1).
_D1_EDGE = np.array(
    [
        [-25.0, 48.0, -36.0, 16.0, -3.0],
        [-3.0, -10.0, 18.0, -6.0, 1.0],
    ]
) / 12.0

# One-sided second-derivative closures, 4th order (need 6 points).
_D2_EDGE = np.array(
    [
        [45.0, -154.0, 214.0, -156.0, 61.0, -10.0],
        [10.0, -15.0, -4.0, 14.0, -6.0, 1.0],
    ]
) / 12.0


def differentiate(grid: Grid, samples, order: int = 1) -> np.ndarray:
    """Pointwise derivative of sampled values, O(h^4) in the interior.

    ``samples`` may be (m,) or (m, d); the derivative acts along axis 0.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    arr = _as_samples(grid, samples)
    m, h = grid.m, grid.h
    if m < 6:
        raise ValueError("grid too short for 4th-order stencils (need m >= 6)")
    out = np.empty_like(arr, dtype=np.result_type(arr.dtype, float))
    if order == 1:
        out[2:-2] = (
            -arr[4:] + 8.0 * arr[3:-1] - 8.0 * arr[1:-3] + arr[:-4]
        ) / (12.0 * h)
        rev = arr[::-1]
        for j in (0, 1):
            # row j evaluates at offset j within the leading 5-node window
            out[j] = np.tensordot(_D1_EDGE[j], arr[:5], axes=(0, 0)) / h
            out[m - 1 - j] = -np.tensordot(_D1_EDGE[j], rev[:5], axes=(0, 0)) / h
    else:
        out[2:-2] = (
            -arr[4:] + 16.0 * arr[3:-1] - 30.0 * arr[2:-2] + 16.0 * arr[1:-3] - arr[:-4]
        ) / (12.0 * h * h)
        rev = arr[::-1]
        for j in (0, 1):
            out[j] = np.tensordot(_D2_EDGE[j], arr[:6], axes=(0, 0)) / (h * h)
            out[m - 1 - j] = np.tensordot(_D2_EDGE[j], rev[:6], axes=(0, 0)) / (h * h)
    return out
