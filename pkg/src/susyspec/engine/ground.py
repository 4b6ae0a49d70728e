"""Ground states: closed Bessel forms and the first-order ODE kernel.

The closed forms cover the inverse-square family (both factorizations)
and the exponential family; everything else goes through the generic
two-sided shooting for the kernel of a- = d/dx + W, which also serves as
the independent check that a gate rejection really corresponds to the
absence of a normalizable decaying solution.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy.integrate import solve_ivp

from ..catalog.base import SuperpotentialInstance
from ..numkit.bessel import BesselUnderflow, bessel_k
from ..numkit.grid import Grid, differentiate, integrate
from .states import BoundState, GateRejection, normalize_state, require_gate

__all__ = ["ground_state_analytic", "ground_state_numeric", "KernelSearchError"]

_BESSEL_FORMS = ("matrix2.inverse", "matrix2.dual-inverse", "matrix2.exp")


class KernelSearchError(RuntimeError):
    """No normalizable decaying kernel of a- was found."""


def _kv_grid(order: float, ys: np.ndarray) -> np.ndarray:
    out = np.empty_like(ys)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BesselUnderflow)
        for i, y in enumerate(ys):
            out[i] = bessel_k(order, y)
    return out


def ground_state_analytic(w: SuperpotentialInstance, grid: Grid) -> BoundState:
    """Closed-form ground spinor for the kinds with Bessel-type kernels.

    Raises GateRejection when the normalizability gate fails, naming the
    violated inequality, and ValueError for kinds without a closed form.
    """
    name = w.kind.name
    if name not in _BESSEL_FORMS:
        raise ValueError(
            f"no closed-form ground state for {name}; use ground_state_numeric"
        )
    require_gate(w)
    p = w.params
    x = grid.nodes
    if name == "matrix2.inverse":
        y = p.omega * x / (2.0 * p.nu + 1.0)
        pref = y ** (p.nu + 1.0)
        phi = pref * _kv_grid(p.mu + 1.0, y)
        xi = pref * _kv_grid(abs(p.mu), y)
    elif name == "matrix2.dual-inverse":
        y = p.omega * x / (2.0 * (p.mu + 1.0))
        pref = y ** (p.mu + 1.5)
        phi = pref * _kv_grid(abs(p.nu + 0.5), y)
        xi = pref * _kv_grid(abs(p.nu - 0.5), y)
    else:  # matrix2.exp
        y = p.mu * np.exp(-p.lam * x)
        nu_eff = p.omega / p.nu + 0.5
        pref = y ** (0.5 - p.nu)
        phi = pref * _kv_grid(abs(nu_eff), y)
        xi = -pref * _kv_grid(abs(nu_eff - 1.0), y)
    raw = np.stack([phi, xi], axis=1)
    samples, norm = normalize_state(grid, raw)
    return BoundState(
        n=0,
        energy=w.factorization_constant(),
        samples=samples,
        norm=norm,
        provenance="analytic-bessel",
        grid=grid,
    )


def _decay_directions(w: SuperpotentialInstance, grid: Grid, side: str):
    """Direction vectors spanning the locally admissible kernel solutions.

    At a finite 'pole' endpoint, W ~ R/(x-end) and solutions behave as
    (x-end)^(-a) v for eigenpairs R v = a v; vanishing requires a < 0.
    At an infinite endpoint the local solutions are e^(-w x) v for
    eigenpairs of W at the anchor; decay toward +inf needs w > 0, decay
    toward -inf needs w < 0.
    """
    dom = w.domain
    d = w.dim
    end_kind = dom.lo_kind if side == "lo" else dom.hi_kind
    anchor = grid.nodes[0] if side == "lo" else grid.nodes[-1]
    if end_kind == "pole":
        res = w.kind.pole_residue(w.params, side)
        if res is None:
            raise ValueError(f"{w.kind.name} declares no pole residue on side {side!r}")
        vals, vecs = np.linalg.eigh(np.asarray(res, dtype=float))
        keep = vals < -1e-12
    else:
        wm = np.asarray(w.evaluate(anchor), dtype=float)
        vals, vecs = np.linalg.eigh(0.5 * (wm + wm.T))
        keep = vals > 1e-12 if side == "hi" else vals < -1e-12
    dirs = [vecs[:, i] for i in range(d) if keep[i]]
    return dirs


def _integrate_kernel(w, grid, start_idx, stop_idx, dirs, n_segments=64):
    """Integrate psi' = -W psi from node start_idx to stop_idx for each
    seed direction, renormalizing the bundle between coarse segments so
    exponential growth never overflows.  Returns (node indices, samples
    of shape (nodes, d, n_dirs), cumulative log-scales per node)."""
    x = grid.nodes
    d = w.dim
    cols = np.stack(dirs, axis=1).astype(float)
    step = 1 if stop_idx >= start_idx else -1
    idx = list(range(start_idx, stop_idx + step, step))
    n = len(idx)
    out = np.zeros((n, d, cols.shape[1]))
    scales = np.zeros(n)
    out[0] = cols

    def rhs(t, yflat):
        wm = np.asarray(w.evaluate(t), dtype=float)
        return (-wm @ yflat.reshape(d, -1)).ravel()

    bounds = np.unique(np.linspace(0, n - 1, min(n_segments, n)).astype(int))
    y = cols.copy()
    scale_log = 0.0
    for b0, b1 in zip(bounds[:-1], bounds[1:]):
        t0, t1 = x[idx[b0]], x[idx[b1]]
        sol = solve_ivp(
            rhs,
            (t0, t1),
            y.ravel(),
            method="DOP853",
            rtol=1e-11,
            atol=1e-13,
            dense_output=True,
        )
        if not sol.success:  # pragma: no cover - defensive
            raise KernelSearchError(f"ODE integration failed near x={t1}: {sol.message}")
        for j in range(b0 + 1, b1 + 1):
            out[j] = sol.sol(x[idx[j]]).reshape(d, -1)
            scales[j] = scale_log
        y = out[b1].copy()
        mag = np.max(np.abs(y))
        if mag == 0.0 or not np.isfinite(mag):
            raise KernelSearchError(f"kernel solution degenerated near x={x[idx[b1]]}")
        y /= mag
        out[b1] = y
        add = math.log(mag)
        scales[b1] = scale_log + add
        # samples inside the segment keep the entry scale; record exact
        # per-node scales so the glue step can undo everything
        scale_log += add
    return idx, out, scales


def ground_state_numeric(
    w: SuperpotentialInstance,
    grid: Grid,
    *,
    match_tol: float = 1e-6,
    residual_tol: float = 1e-8,
) -> BoundState:
    """Kernel of a- by two-sided shooting with matching in the interior.

    The admissible decaying solutions from each end are propagated to a
    matching node; a kernel state exists iff the two subspaces intersect,
    detected through the smallest singular value of the glued system.
    Raises KernelSearchError when no normalizable kernel exists (which is
    exactly the situation the analytic gates are meant to flag).
    """
    d = w.dim
    m = grid.m
    left = _decay_directions(w, grid, "lo")
    right = _decay_directions(w, grid, "hi")
    if len(left) + len(right) <= d:
        raise KernelSearchError(
            f"{w.kind.name}: only {len(left)}+{len(right)} admissible end "
            f"directions in dimension {d}; no matching kernel"
        )
    i_match = m // 2
    idxL, solL, logL = _integrate_kernel(w, grid, 0, i_match, left)
    idxR, solR, logR = _integrate_kernel(w, grid, m - 1, i_match, right)
    # match: find coefficients with sum_L c_i psi_i = sum_R c_j psi_j.
    # Each bundle is rescaled to unit size so the defect measure is
    # balanced; the scales are folded back into the glue coefficients.
    s_l = float(np.max(np.abs(solL[-1])))
    s_r = float(np.max(np.abs(solR[-1])))
    yl = solL[-1] / s_l
    yr = solR[-1] / s_r
    glue = np.concatenate([yl, -yr], axis=1)
    _, s, vh = np.linalg.svd(glue)
    coeff = vh[-1]
    # true matching defect: residual of the glued combination (exactly
    # zero by construction when the direction count exceeds d)
    gap = float(np.linalg.norm(glue @ coeff) / s[0])
    if gap > match_tol:
        raise KernelSearchError(
            f"{w.kind.name}: end solutions do not match (relative defect {gap:.2e})"
        )
    cl = coeff[: yl.shape[1]] / s_l
    cr = coeff[yl.shape[1] :] / s_r
    raw = np.zeros((m, d))
    # undo the per-segment rescalings relative to the matching node
    for j, i in enumerate(idxL):
        raw[i] = (solL[j] @ cl) * math.exp(logL[j] - logL[-1])
    for j, i in enumerate(idxR):
        if i == i_match:
            continue
        raw[i] = (solR[j] @ cr) * math.exp(logR[j] - logR[-1])
    samples, norm = normalize_state(grid, raw)
    # residual of the defining first-order equation, away from the ends
    res = w.apply_lowering(grid, samples)
    trim = slice(3, m - 3)
    rnorm = math.sqrt(integrate(Grid(grid.x0 + 3 * grid.h, grid.h, m - 6), res[trim]))
    if rnorm > residual_tol:
        raise KernelSearchError(
            f"{w.kind.name}: kernel residual {rnorm:.2e} exceeds {residual_tol:.0e}"
        )
    return BoundState(
        n=0,
        energy=w.factorization_constant(),
        samples=samples,
        norm=norm,
        provenance="ode-kernel",
        grid=grid,
    )
