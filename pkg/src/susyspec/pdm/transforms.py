"""Radial reduction and Liouville transforms of the PDM rows.

The radial equation of a rotationally invariant PDM Hamiltonian is

    -f phi'' + (f l(l+1)/x^2 + V) phi = E phi,

carried here with the similarity weight Psi = sqrt(f) psi recorded but
applied analytically.  The direct route changes variables via
y'(x) = f^(-1/2) and rescales by f^(1/4), giving a constant-mass problem
with the effective potential

    Vt = V + f ( l(l+1)/x^2 - (f'/4f)^2 - (f'/4f)' ).

The two-step route first multiplies the equation by c*alpha/V (c a sign
making the transformed inverse mass positive), swapping the roles of the
coupling alpha and the energy E, and then applies the same change of
variables to ft = c alpha f/V with Vt = -c alpha E/V; physical energies
are the roots of EV_n(E) = -c alpha.

The Liouville coordinate is anchored exactly at the branch's left
endpoint: the integrable tail pieces between the endpoints and the first
and last sample are added by substitution quadrature, so singular basis
functions like csch^2(lam y) sit at the true pole.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..numkit.eigen import BandedHermitianOperator
from ..numkit.grid import Grid
from .tables import PdmRow, f_of

__all__ = [
    "RadialChannel",
    "RadialProblem",
    "EffectiveProblem",
    "radial_reduce",
    "liouville_grid",
    "direct_transform",
    "TwoStepTransform",
    "two_step_transform",
    "radial_operator",
]

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)


def _gauss(func, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return float(half * (_GL_WEIGHTS @ func(mid + half * _GL_NODES)))


@dataclass(frozen=True)
class RadialChannel:
    """Orbital quantum number with its rotational degeneracy."""

    l: int

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("orbital quantum number must be nonnegative")

    @property
    def degeneracy(self) -> int:
        return 2 * self.l + 1


@dataclass(frozen=True)
class RadialProblem:
    """1D radial PDM problem in the original variable."""

    row: PdmRow
    channel: RadialChannel
    alpha: float
    nu: float
    f: Callable
    fp: Optional[Callable]
    fpp: Optional[Callable]

    def coupling_potential(self, x):
        return self.row.v(x, self.alpha, self.nu)

    def full_potential(self, x):
        ll = self.channel.l * (self.channel.l + 1)
        return self.f(x) * ll / x**2 + self.coupling_potential(x)

    def weight(self, x):
        """Similarity weight: Psi = sqrt(f) psi."""
        return np.sqrt(self.f(x))


def radial_reduce(row: PdmRow, l: int, alpha: float, nu: float = 0.0) -> RadialProblem:
    """Radial channel of a catalog row: -f phi'' + (f l(l+1)/x^2 + V) phi = E phi."""
    return RadialProblem(
        row=row,
        channel=RadialChannel(l),
        alpha=alpha,
        nu=nu,
        f=f_of(row, nu),
        fp=row.fp,
        fpp=row.fpp,
    )


def _graded_samples(domain, n: int) -> np.ndarray:
    """Samples of the open interval, crowded toward singular endpoints."""
    lo, hi = domain
    t = np.linspace(0.0, 1.0, n + 2)[1:-1]
    if math.isinf(hi):
        return lo + np.tan(0.5 * math.pi * 0.955 * t) ** 2 + 1e-5 * t
    width = hi - lo
    u = 0.5 * (1.0 - np.cos(math.pi * t))
    return lo + width * u


_TAIL_LIMIT = 10.0  # longer pieces are treated as infinitely far ends


def _left_offset(f: Callable, lo: float, x0: float) -> float:
    """int_lo^x0 f^(-1/2) dx via x = lo + s^2 (regular for f ~ (x-lo)^k, k<2);
    inf when the left endpoint is at infinite Liouville distance."""
    s_max = math.sqrt(x0 - lo)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        val = _gauss(lambda s: 2.0 * s / np.sqrt(f(lo + s * s)), 0.0, s_max)
    if not math.isfinite(val) or val > _TAIL_LIMIT:
        return math.inf
    return val


def _right_tail(f: Callable, x_max: float, hi: float) -> float:
    """Remaining Liouville length from the last sample to the endpoint;
    inf when the integral diverges."""
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        if math.isinf(hi):
            # substitute x = 1/s^2 (regular integrand for f ~ x^p, p >= 3)
            s_max = 1.0 / math.sqrt(x_max)
            val = _gauss(
                lambda s: 2.0 / (np.sqrt(f(1.0 / (s * s))) * s**3), 1e-14, s_max
            )
        else:
            s_max = math.sqrt(hi - x_max)
            val = _gauss(lambda s: 2.0 * s / np.sqrt(f(hi - s * s)), 0.0, s_max)
    if not math.isfinite(val) or val > _TAIL_LIMIT:
        return math.inf
    return val


def _liouville_segments(f: Callable, xs: np.ndarray) -> np.ndarray:
    x0 = xs[:-1]
    x1 = xs[1:]
    half = 0.5 * (x1 - x0)
    mid = 0.5 * (x1 + x0)
    nodes = mid[:, None] + half[:, None] * _GL_NODES
    vals = 1.0 / np.sqrt(f(nodes))
    if not np.all(np.isfinite(vals)):
        raise ValueError("inverse mass must be positive on the working branch")
    return half * (vals @ _GL_WEIGHTS)


def liouville_grid(f: Callable, xs: np.ndarray) -> np.ndarray:
    """y(x) - y(xs[0]) with y' = f^(-1/2), per-interval Gauss quadrature.

    Strictly increasing because the integrand is positive; raises if the
    inverse mass is not positive on the samples.
    """
    segments = _liouville_segments(f, xs)
    y = np.concatenate([[0.0], np.cumsum(segments)])
    if np.any(np.diff(y) <= 0.0):
        raise ValueError("Liouville coordinate is not strictly increasing")
    return y


@dataclass(frozen=True)
class EffectiveProblem:
    """Constant-mass problem in the Liouville coordinate.

    ``y`` is anchored at the branch's left endpoint (y = 0 there); the
    total length is finite when the map compresses the right endpoint.
    """

    x: np.ndarray
    y: np.ndarray
    v: np.ndarray
    total_length: float
    energy_shift: float = 0.0

    def x_of_y(self, yq):
        return np.interp(yq, self.y, self.x)

    def y_of_x(self, xq):
        return np.interp(xq, self.x, self.y)


_SPAN_CAP = 240.0  # longest useful Liouville window


def _build_effective(f, domain, n_samples):
    lo, hi = domain
    xs = _graded_samples(domain, n_samples)
    segments = _liouville_segments(f, xs)
    offset = _left_offset(f, lo, xs[0])
    if not math.isfinite(offset):
        # left endpoint infinitely far: keep only the window reachable
        # from the right, trimming segments before accumulating so the
        # small increments are not lost against a huge running sum
        rev = np.cumsum(segments[::-1])[::-1]
        keep = int(np.searchsorted(-rev, -_SPAN_CAP))
        xs = xs[keep:]
        segments = segments[keep:]
        offset = 0.0
    ys = np.concatenate([[0.0], np.cumsum(segments)]) + offset
    if np.any(np.diff(ys) <= 0.0):
        raise ValueError("Liouville coordinate is not strictly increasing")
    total = _right_tail(f, xs[-1], hi)
    if math.isfinite(total):
        total += ys[-1]
    return xs, ys, total


def _effective_potential(f, fp, fpp, v_func, ll, xs):
    fx = f(xs)
    fpx = fp(xs)
    fppx = fpp(xs)
    g = fpx / (4.0 * fx)
    gp = fppx / (4.0 * fx) - fpx**2 / (4.0 * fx**2)
    return v_func(xs) + fx * (ll / xs**2 - g**2 - gp)


def direct_transform(problem: RadialProblem, n_samples: int = 3000) -> EffectiveProblem:
    """Liouville transform of the radial problem.

    Returns the effective constant-mass problem sampled along the branch;
    the monotone inverse map x(y) is exposed on the result.
    """
    row = problem.row
    if problem.fp is None or problem.fpp is None:
        raise ValueError(f"{row.key}: no closed-form f derivatives for the direct route")
    xs, ys, total = _build_effective(problem.f, row.domain, n_samples)
    ll = problem.channel.l * (problem.channel.l + 1)
    v = _effective_potential(
        problem.f, problem.fp, problem.fpp, problem.coupling_potential, ll, xs
    )
    return EffectiveProblem(x=xs, y=ys, v=v, total_length=total)


@dataclass(frozen=True)
class TwoStepTransform:
    """E-dependent family of effective problems from the role swap.

    The transformed potential is linear in the trial energy,
    Vt(y; E) = base(y) + E*slope(y), and the transformed problem's
    eigenvalue is pinned to ``target`` = -c alpha.
    """

    row: PdmRow
    channel: RadialChannel
    alpha: float
    nu: float
    x: np.ndarray
    y: np.ndarray
    base: np.ndarray
    slope: np.ndarray
    target: float
    total_length: float

    def potential(self, e_trial: float) -> np.ndarray:
        return self.base + e_trial * self.slope

    def effective(self, e_trial: float) -> EffectiveProblem:
        return EffectiveProblem(
            x=self.x,
            y=self.y,
            v=self.potential(e_trial),
            total_length=self.total_length,
        )


def two_step_transform(problem: RadialProblem, n_samples: int = 3000) -> TwoStepTransform:
    """Role-swapped transform: ft = c alpha f/V, Vt = -c alpha E/V.

    Rejects rows whose transformed inverse mass is not positive on the
    branch (the role swap is then ill-defined).
    """
    row = problem.row
    if row.ft is None:
        raise ValueError(f"{row.key} declares no two-step route")
    ft, ftp, ftpp = row.ft
    c = row.ts_sign
    domain = row.ts_domain or row.domain
    probe = _graded_samples(domain, 64)
    if np.any(ft(probe) <= 0.0):
        raise ValueError(
            f"{row.key}: transformed inverse mass changes sign; role swap ill-defined"
        )
    xs, ys, total = _build_effective(ft, domain, n_samples)
    ll = problem.channel.l * (problem.channel.l + 1)
    base = _effective_potential(ft, ftp, ftpp, lambda x: 0.0 * x, ll, xs)
    v_vals = problem.coupling_potential(xs)
    slope = -c * problem.alpha / v_vals
    return TwoStepTransform(
        row=row,
        channel=problem.channel,
        alpha=problem.alpha,
        nu=problem.nu,
        x=xs,
        y=ys,
        base=base,
        slope=slope,
        target=-c * problem.alpha,
        total_length=total,
    )


def radial_operator(problem: RadialProblem, grid: Grid) -> BandedHermitianOperator:
    """Manifestly Hermitian discretization of the radial PDM operator,
    sqrt(f) (-d^2/dx^2) sqrt(f) + f l(l+1)/x^2 + V, which is similar to
    the radial equation and shares its spectrum."""
    x = grid.nodes
    fx = problem.f(x)
    if np.any(fx <= 0.0):
        raise ValueError("inverse mass must be positive on the grid")
    h2 = grid.h**2
    diag = 2.0 * fx / h2 + problem.full_potential(x)
    coupling = -np.sqrt(fx[:-1] * fx[1:]) / h2
    blocks = diag.reshape(grid.m, 1, 1)
    return BandedHermitianOperator(
        grid=grid, block_size=1, diagonal_blocks=blocks, coupling=coupling
    )
