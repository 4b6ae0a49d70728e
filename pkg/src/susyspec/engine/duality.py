"""Dual factorizations: the same potential, shape invariant in mu.

Three of the 2x2 families admit a second superpotential W~ with
W~^2 - W~' = V + c_mu whose raising shift moves mu instead of nu; the
two factorizations cover complementary normalizability windows and, on
the self-dual line nu = mu + 1/2, coincide state by state.
"""

from __future__ import annotations

import math

import numpy as np

from ..catalog import DUAL_PARTNERS, get_kind
from ..catalog.base import SuperpotentialInstance
from ..numkit.grid import Grid
from .ground import ground_state_analytic
from .states import BoundState

__all__ = ["NoDualFactorization", "dual_factorization", "dual_ground_state"]


class NoDualFactorization(ValueError):
    """The family is shape invariant in nu only."""


def dual_factorization(
    w: SuperpotentialInstance, check_tol: float = 1e-10
) -> tuple[SuperpotentialInstance, float]:
    """Alternative factorization (W~, c_mu) of the instance's potential.

    c_mu is the constant in W~^2 - W~' = V + c_mu (so the dual ground
    energy is -c_mu).  The identity is verified pointwise on a probe grid
    before returning.  Raises NoDualFactorization for the exp and tanh
    families.
    """
    name = w.kind.name
    partner = DUAL_PARTNERS.get(name)
    if partner is None:
        raise NoDualFactorization(
            f"{name} does not admit a second shape-invariant factorization"
        )
    dual = SuperpotentialInstance(get_kind(partner), w.params)
    c_mu = -dual.factorization_constant()
    dom = w.domain
    if math.isfinite(dom.lo) and math.isfinite(dom.hi):
        span = dom.hi - dom.lo
        grid = Grid(dom.lo + 0.1 * span, 0.8 * span / 31, 32)
    else:
        lo = dom.lo + 0.4 if math.isfinite(dom.lo) else -3.0
        grid = Grid(lo, 6.0 / 31, 32)
    vm_dual, _ = dual.pair_potentials(grid.nodes)
    v_primary = w.potential(grid.nodes)
    resid = float(np.max(np.abs(vm_dual - v_primary - c_mu * np.eye(w.dim))))
    if resid > check_tol:  # pragma: no cover - guards future catalog edits
        raise RuntimeError(
            f"dual factorization residual {resid:.2e} exceeds {check_tol:.0e}"
        )
    return dual, c_mu


def dual_ground_state(w_dual: SuperpotentialInstance, grid: Grid) -> BoundState:
    """Ground state of the dual factorization (closed Bessel form for the
    inverse family); gate violations raise GateRejection with the name of
    the violated inequality."""
    return ground_state_analytic(w_dual, grid)
