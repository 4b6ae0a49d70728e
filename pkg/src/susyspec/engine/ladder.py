"""Ladder construction of excited states and analytic/numeric spectra.

The n-th state is built by applying the raising operators of the first n
members of the shift chain to the ground state of the n-times-shifted
instance,

    psi_n = a+(p) a+(T p) ... a+(T^(n-1) p) psi_0(T^n p),

with energy fc(T^n p).  Every intermediate instance must pass its own
normalizability gate; the admissible levels are exactly those whose
shifted ground state exists.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from ..catalog.base import SuperpotentialInstance
from ..catalog.params import ParamSet
from ..numkit.eigen import BandedHermitianOperator, eig_banded, schrodinger_operator
from ..numkit.grid import Grid
from .ground import ground_state_analytic, ground_state_numeric
from .states import BoundState, GateRejection, check_gate, normalize_state, require_gate

__all__ = [
    "LadderProblem",
    "SpectrumRow",
    "SpectrumTable",
    "hamiltonian_operator",
    "excited_state",
    "energy_level",
    "level_label",
    "admissible_levels",
    "energy_levels",
]

_ANALYTIC_GROUND = ("matrix2.inverse", "matrix2.dual-inverse", "matrix2.exp")


def hamiltonian_operator(w: SuperpotentialInstance, grid: Grid) -> BandedHermitianOperator:
    """Discretized H = -d^2/dx^2 + V for the instance's catalog potential."""
    v = w.potential(grid.nodes)
    return schrodinger_operator(grid, v)


@dataclass(frozen=True)
class LadderProblem:
    """A gated superpotential instance bound to a working grid."""

    superpotential: SuperpotentialInstance
    grid: Grid
    n_max: int = 3

    def __post_init__(self):
        require_gate(self.superpotential)

    def ground_state(self) -> BoundState:
        w = self.superpotential
        if w.kind.name in _ANALYTIC_GROUND:
            return ground_state_analytic(w, self.grid)
        return ground_state_numeric(w, self.grid)


def energy_level(w: SuperpotentialInstance, n: int) -> float:
    """E_n = fc(p) + sum of the level-spacing constants along the chain."""
    e = w.factorization_constant()
    inst = w
    for _ in range(n):
        e += inst.shape_constant()
        inst = inst.shifted()
    return e


def level_label(w: SuperpotentialInstance, n: int) -> float:
    """Spectral label N of the n-th level (the shifted parameter value,
    offset by 1/2 for the dual family, or plain n when nothing shifts)."""
    kind = w.kind
    shifted = w.shifted(n).params
    if kind.shift_field is None:
        return float(n)
    value = getattr(shifted, kind.shift_field)
    if kind.name.startswith("matrix2.dual"):
        return value + 0.5
    return value


def admissible_levels(w: SuperpotentialInstance, n_max: int) -> list[int]:
    """Levels n <= n_max whose shifted ground state passes its gate and
    whose energies increase strictly along the tower."""
    out = []
    prev = -math.inf
    for n in range(n_max + 1):
        ok, _, _ = check_gate(w.shifted(n))
        if not ok:
            break
        e = energy_level(w, n)
        if e <= prev:
            break
        out.append(n)
        prev = e
    return out


def excited_state(problem: LadderProblem, n: int) -> BoundState:
    """Ladder-built n-th state; n = 0 returns the ground state."""
    if n > problem.n_max:
        raise ValueError(f"n = {n} exceeds n_max = {problem.n_max}")
    w = problem.superpotential
    for j in range(n + 1):
        ok, gate_name, message = check_gate(w.shifted(j))
        if not ok:
            raise GateRejection(w.kind.name, gate_name, f"at shift {j}: {message}")
    top = LadderProblem(w.shifted(n), problem.grid, n_max=0)
    state = top.ground_state()
    samples = state.samples
    for j in range(n - 1, -1, -1):
        samples = w.shifted(j).apply_raising(problem.grid, samples)
    samples, norm = normalize_state(problem.grid, samples)
    return BoundState(
        n=n,
        energy=energy_level(w, n),
        samples=samples,
        norm=norm,
        provenance="ladder" if n > 0 else state.provenance,
        grid=problem.grid,
    )


@dataclass(frozen=True)
class SpectrumRow:
    n: int
    label: float
    e_analytic: float
    e_numeric: float
    abs_err: float


@dataclass
class SpectrumTable:
    """Ordered level list with the analytic/numeric cross-check columns."""

    kind: str
    rows: list[SpectrumRow] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "N", "E_analytic", "E_numeric", "abs_err"])
        for r in self.rows:
            writer.writerow(
                [
                    r.n,
                    f"{r.label:.12g}",
                    f"{r.e_analytic:.12g}",
                    f"{r.e_numeric:.12g}" if math.isfinite(r.e_numeric) else "",
                    f"{r.abs_err:.12g}" if math.isfinite(r.abs_err) else "",
                ]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        def fmt(x):
            return float(f"{x:.17g}") if math.isfinite(x) else None

        return json.dumps(
            {
                "kind": self.kind,
                "rows": [
                    {
                        "n": r.n,
                        "N": fmt(r.label),
                        "E_analytic": fmt(r.e_analytic),
                        "E_numeric": fmt(r.e_numeric),
                        "abs_err": fmt(r.abs_err),
                    }
                    for r in self.rows
                ],
            },
            indent=2,
        )


def default_grid(w: SuperpotentialInstance, n_max: int = 3) -> Grid:
    """A grid adequate for the n_max lowest levels of the instance.

    Half-line Coulomb-type problems need a box beyond the outermost
    classical turning point; trigonometric problems are confined anyway;
    full-line problems are sized from the asymptotic decay rates.
    """
    dom = w.domain
    levels = admissible_levels(w, n_max) or [0]
    e_top = energy_level(w, levels[-1])
    if math.isfinite(dom.lo) and not math.isfinite(dom.hi):
        # half line: box past the outermost classical turning point of
        # the highest level, plus a decay margin
        probes = np.geomspace(max(dom.lo + 1e-3, 1e-3), 4000.0, 400)
        vmin = np.array(
            [np.linalg.eigvalsh(np.atleast_2d(w.potential(x)))[0] for x in probes]
        )
        below = probes[vmin <= e_top]
        x_turn = float(below.max()) if below.size else 20.0
        kappa = math.sqrt(max(-e_top, 1e-4))
        length = min(1.3 * x_turn + 12.0 / kappa, 2500.0)
        m = int(min(max(length * 100.0, 4000), 60000))
        return Grid.half_line(length, m)
    if math.isfinite(dom.lo) and math.isfinite(dom.hi):
        m = 6000
        h = (dom.hi - dom.lo) / (m + 1)
        return Grid(dom.lo + h, h, m)
    # full line: size from the slowest decay among the admissible levels
    name = w.kind.name
    p = w.params
    if name in ("matrix2.exp", "nondiag.w9"):
        lam = p.lam
        x_left = -math.log(60.0 / max(p.mu, 1e-6)) / lam
        rate = lam * max(
            min(abs((p.nu + n) - p.omega / (p.nu + n)) for n in levels), 0.1
        )
        x_right = x_left + (40.0 / rate)
        m = int(min(max((x_right - x_left) * 200, 6000), 50000))
        h = (x_right - x_left) / (m + 1)
        return Grid(x_left + h, h, m)
    half = 14.0
    m = 8000
    return Grid.symmetric(half, m)


def energy_levels(
    w: SuperpotentialInstance,
    n_max: int,
    grid: Grid | None = None,
    numeric: bool = True,
) -> SpectrumTable:
    """Spectrum table of the admissible levels up to n_max.

    Analytic energies follow the shift chain; numeric ones come from the
    banded eigensolver on the catalog potential.  Raises GateRejection if
    even the base level is inadmissible.
    """
    require_gate(w)
    levels = admissible_levels(w, n_max)
    table = SpectrumTable(kind=w.kind.name)
    e_num = []
    if numeric:
        g = grid if grid is not None else default_grid(w, n_max)
        res = eig_banded(hamiltonian_operator(w, g), len(levels))
        e_num = list(res.eigenvalues)
    for i, n in enumerate(levels):
        ea = energy_level(w, n)
        en = e_num[i] if i < len(e_num) else math.nan
        table.rows.append(
            SpectrumRow(
                n=n,
                label=level_label(w, n),
                e_analytic=ea,
                e_numeric=en,
                abs_err=abs(ea - en) if math.isfinite(en) else math.nan,
            )
        )
    return table
