"""Bound-state container, normalization conventions and gate plumbing."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..catalog.base import SuperpotentialInstance
from ..numkit.grid import Grid, inner_product, integrate

__all__ = ["BoundState", "GateRejection", "check_gate", "require_gate", "normalize_state"]


class GateRejection(Exception):
    """A normalizability gate rejected the parameter set.

    Carries the gate name and the violated inequality so front ends can
    report exactly which condition failed.
    """

    def __init__(self, kind_name: str, gate_name: str, message: str):
        super().__init__(f"{gate_name}: {message} [{kind_name}]")
        self.kind_name = kind_name
        self.gate_name = gate_name
        self.condition = message


def check_gate(w: SuperpotentialInstance):
    """(ok, gate_name, condition) for the instance's ground-state gate."""
    gate = getattr(w.kind, "ground_gate", None)
    if gate is None:
        return True, "none", "no gate declared"
    return gate(w.params)


def require_gate(w: SuperpotentialInstance) -> None:
    ok, name, message = check_gate(w)
    if not ok:
        raise GateRejection(w.kind.name, name, message)


def normalize_state(grid: Grid, samples: np.ndarray) -> tuple[np.ndarray, float]:
    """Unit discrete-L2 normalization with a fixed phase convention:
    the first component exceeding 1e-12 of the peak at the grid midpoint
    is made real and positive."""
    arr = np.asarray(samples, dtype=complex)
    if arr.ndim == 1:
        arr = arr[:, None]
    norm2 = integrate(grid, arr)
    if not norm2 > 0.0 or not np.isfinite(norm2):
        raise ValueError("state has zero or non-finite norm")
    arr = arr / np.sqrt(norm2)
    mid = arr[grid.m // 2]
    peak = np.max(np.abs(arr))
    phase = None
    for comp in mid:
        if abs(comp) > 1e-12 * peak:
            phase = comp / abs(comp)
            break
    if phase is not None:
        arr = arr / phase
    if np.max(np.abs(arr.imag)) <= 1e-12 * np.max(np.abs(arr.real), initial=1e-300):
        arr = arr.real.copy()
    return arr, float(np.sqrt(norm2))


@dataclass(frozen=True)
class BoundState:
    """Sampled (spinor) eigenstate with its provenance."""

    n: int
    energy: float
    samples: np.ndarray  # shape (m, d), unit discrete L2 norm
    norm: float  # norm of the raw construction before normalization
    provenance: str  # "ladder" | "eigensolver" | "analytic-bessel" | "ode-kernel"
    grid: Grid

    def component(self, i: int) -> np.ndarray:
        return self.samples[:, i]

    def overlap(self, other: "BoundState") -> float:
        """|<self|other>| on the common grid."""
        if self.grid != other.grid:
            raise ValueError("states live on different grids")
        return float(abs(inner_product(self.grid, self.samples, other.samples)))
