"""Catalog core: superpotential kinds, instances, and residual checks.

Every catalog entry describes a Hermitian superpotential W(x) together
with a hand-coded derivative W'(x), a raising shift T acting on one
parameter, and a factorization constant fc(p).  The conventions are

    a-   = d/dx + W,      a+ = -d/dx + W,
    V-   = W^2 - W',      V+ = W^2 + W',
    H(p) = a+ a- + fc(p)  = -d^2/dx^2 + V(p),   V(p) = V-(p) + fc(p),

so the ground state is annihilated by a- and has energy fc(p), and the
shape-invariance statement reads

    V+(x; p) + fc(p) = V-(x; T p) + fc(T p),

which makes the intertwining H(p) a+(p) = a+(p) H(T p) exact and the
level energies E_n = fc(T^n p).  Each kind stores fc so this recurrence
holds identically; where that forces a parameter-dependent additive
constant into the potential family (the radial oscillator), the kind's
docstring says so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from ..numkit.grid import Grid
from .params import ParamSet, ParameterError

__all__ = [
    "DomainSpec",
    "SPDecomposition",
    "SuperpotentialKind",
    "SuperpotentialInstance",
    "shape_invariance_residual",
    "classification_residual",
    "decomposition_residuals",
]

Term = tuple[Callable[[np.ndarray], np.ndarray], np.ndarray]


@dataclass(frozen=True)
class DomainSpec:
    """Open interval on which a kind's W(x) is defined.

    ``lo_kind``/``hi_kind`` describe the endpoint behaviour of W and are
    consumed by the numeric ground-state shooting:

    * ``"pole"``      -- W ~ R/(x - end) with residue matrix R,
    * ``"const"``     -- W approaches a finite matrix,
    * ``"divergent"`` -- W grows without bound (exponential walls).
    """

    lo: float
    hi: float
    lo_kind: str = "pole"
    hi_kind: str = "const"


@dataclass(frozen=True)
class SPDecomposition:
    """Split W = k A(x) + B/k + C(x) with the companion constants.

    ``constants`` holds (alpha, nu, kappa, lam, omega) of the defining
    first-order system A' = alpha (A^2 + nu), C' = (alpha/2){A, C} - kappa,
    {B, C} = -lam, B^2 = omega^2.
    """

    k: float
    a_terms: Sequence[Term]
    da_terms: Sequence[Term]
    b_matrix: np.ndarray
    c_terms: Sequence[Term]
    dc_terms: Sequence[Term]
    constants: dict


def _combine(terms: Sequence[Term], x) -> np.ndarray:
    """sum_i f_i(x) * M_i with broadcasting over an array of positions."""
    xs = np.asarray(x, dtype=float)
    acc = None
    for f, mat in terms:
        coeff = np.asarray(f(xs))
        block = coeff[..., None, None] * mat
        acc = block if acc is None else acc + block
    return acc


class SuperpotentialKind:
    """Base class for catalog entries; subclasses fill in the table data."""

    name: str = ""
    dim: int = 1
    shift_field: Optional[str] = None
    shift_step: float = 1.0
    parameters: tuple[str, ...] = ()

    # -- data each kind provides -------------------------------------
    def terms(self, p: ParamSet) -> Sequence[Term]:
        raise NotImplementedError

    def dterms(self, p: ParamSet) -> Sequence[Term]:
        raise NotImplementedError

    def factorization_constant(self, p: ParamSet) -> float:
        raise NotImplementedError

    def domain(self, p: ParamSet) -> DomainSpec:
        raise NotImplementedError

    def validate(self, p: ParamSet) -> None:
        """Structural admissibility; raises ParameterError on violation."""

    def decomposition(self, p: ParamSet) -> Optional[SPDecomposition]:
        return None

    def pole_residue(self, p: ParamSet, side: str) -> Optional[np.ndarray]:
        """Residue matrix R of W ~ R/(x - endpoint) at a 'pole' endpoint."""
        return None

    # -- derived ------------------------------------------------------
    def shift(self, p: ParamSet) -> ParamSet:
        if self.shift_field is None:
            return p
        return p.shifted(self.shift_field, self.shift_step)

    def shape_constant(self, p: ParamSet) -> float:
        """C(p) = V+(p) - V-(T p), constant on the domain."""
        return self.factorization_constant(self.shift(p)) - self.factorization_constant(p)

    def weval(self, p: ParamSet, x) -> np.ndarray:
        return _combine(self.terms(p), x)

    def wprime(self, p: ParamSet, x) -> np.ndarray:
        return _combine(self.dterms(p), x)

    def describe(self, p: ParamSet) -> dict:
        dom = self.domain(p)
        return {
            "name": self.name,
            "dimension": self.dim,
            "shift": {"field": self.shift_field, "step": self.shift_step},
            "parameters": list(self.parameters),
            "domain": [dom.lo, dom.hi],
            "factorization_constant": self.factorization_constant(p),
            "level_spacing_constant": self.shape_constant(p),
        }


_POLE_GUARD = 1e-8


@dataclass(frozen=True)
class SuperpotentialInstance:
    """A catalog kind bound to a concrete parameter set."""

    kind: SuperpotentialKind
    params: ParamSet
    shift_count: int = 0

    def __post_init__(self):
        self.kind.validate(self.params)

    @property
    def dim(self) -> int:
        return self.kind.dim

    @property
    def domain(self) -> DomainSpec:
        return self.kind.domain(self.params)

    def _check_domain(self, x) -> np.ndarray:
        xs = np.asarray(x, dtype=float)
        dom = self.domain
        scale = 1.0
        if math.isfinite(dom.lo) and math.isfinite(dom.hi):
            scale = dom.hi - dom.lo
        guard = _POLE_GUARD * scale
        lo_ok = xs > dom.lo + (guard if math.isfinite(dom.lo) else 0.0)
        hi_ok = xs < dom.hi - (guard if math.isfinite(dom.hi) else 0.0)
        if not (np.all(lo_ok) and np.all(hi_ok)):
            raise ValueError(
                f"{self.kind.name}: position outside open domain "
                f"({dom.lo}, {dom.hi}) or within {guard:g} of a pole"
            )
        return xs

    def evaluate(self, x) -> np.ndarray:
        """Hermitian W(x); shape (d, d) or (m, d, d) for an array input."""
        xs = self._check_domain(x)
        return self.kind.weval(self.params, xs)

    def derivative(self, x) -> np.ndarray:
        xs = self._check_domain(x)
        return self.kind.wprime(self.params, xs)

    def pair_potentials(self, x) -> tuple[np.ndarray, np.ndarray]:
        """(V-, V+) = (W^2 - W', W^2 + W') at x."""
        w = self.evaluate(x)
        dw = self.derivative(x)
        w2 = np.einsum("...ab,...bc->...ac", w, w)
        return w2 - dw, w2 + dw

    def potential(self, x) -> np.ndarray:
        """Catalog Hamiltonian potential V = V- + fc (H = -d^2 + V)."""
        vm, _ = self.pair_potentials(x)
        eye = np.eye(self.dim)
        return vm + self.factorization_constant() * eye

    def factorization_constant(self) -> float:
        return self.kind.factorization_constant(self.params)

    def shape_constant(self) -> float:
        return self.kind.shape_constant(self.params)

    def shifted(self, n: int = 1) -> "SuperpotentialInstance":
        p = self.params
        for _ in range(n):
            p = self.kind.shift(p)
        return SuperpotentialInstance(self.kind, p, self.shift_count + n)

    def apply_lowering(self, grid: Grid, samples: np.ndarray) -> np.ndarray:
        """a- psi = psi' + W psi on sampled spinors of shape (m, d)."""
        from ..numkit.grid import differentiate

        w = self.evaluate(grid.nodes)
        return differentiate(grid, samples, 1) + np.einsum("jab,jb->ja", w, samples)

    def apply_raising(self, grid: Grid, samples: np.ndarray) -> np.ndarray:
        """a+ psi = -psi' + W psi."""
        from ..numkit.grid import differentiate

        w = self.evaluate(grid.nodes)
        return -differentiate(grid, samples, 1) + np.einsum("jab,jb->ja", w, samples)


def shift(instance: SuperpotentialInstance) -> SuperpotentialInstance:
    return instance.shifted(1)


def _max_matrix_norm(arr: np.ndarray) -> float:
    return float(np.max(np.abs(arr)))


def shape_invariance_residual(
    kind: SuperpotentialKind, params: ParamSet, grid: Grid
) -> float:
    """max_x || V+(x; p) - V-(x; T p) - C(p) || over the grid nodes.

    C(p) = fc(T p) - fc(p) is the kind's closed-form level spacing; a
    correct catalog entry drives this to roundoff on a well-conditioned
    grid, and any error in W, W' or fc shows up at its own magnitude.
    """
    inst = SuperpotentialInstance(kind, params)
    _, vplus = inst.pair_potentials(grid.nodes)
    vminus_up, _ = inst.shifted().pair_potentials(grid.nodes)
    c = kind.shape_constant(params) * np.eye(kind.dim)
    return _max_matrix_norm(vplus - vminus_up - c)


def classification_residual(a, b, c, da, dc, constants: dict) -> dict:
    """Residual norms of the four defining conditions of the split
    W = k A + B/k + C, for sampled A, B, C and their derivatives.

    Returns max-norm residuals of::

        A' - alpha (A^2 + nu I)
        C' - (alpha/2){A, C} + kappa I
        {B, C} + lam I
        B^2 - omega^2 I
    """
    a = np.asarray(a)
    c_arr = np.asarray(c)
    b = np.asarray(b)
    if a.shape != c_arr.shape:
        raise ValueError("A and C samples must share a shape")
    dim = a.shape[-1]
    eye = np.eye(dim)
    alpha = constants["alpha"]
    a2 = np.einsum("...ab,...bc->...ac", a, a)
    r_a = _max_matrix_norm(da - alpha * (a2 + constants["nu"] * eye))
    anti_ac = np.einsum("...ab,...bc->...ac", a, c_arr) + np.einsum(
        "...ab,...bc->...ac", c_arr, a
    )
    r_c = _max_matrix_norm(dc - 0.5 * alpha * anti_ac + constants["kappa"] * eye)
    anti_bc = np.einsum("ab,...bc->...ac", b, c_arr) + np.einsum(
        "...ab,bc->...ac", c_arr, b
    )
    r_bc = _max_matrix_norm(anti_bc + constants["lam"] * eye)
    r_b2 = _max_matrix_norm(b @ b - constants["omega"] ** 2 * eye)
    return {"A": r_a, "C": r_c, "BC": r_bc, "B2": r_b2}


def decomposition_residuals(
    kind: SuperpotentialKind, params: ParamSet, grid: Grid
) -> dict:
    """Classification residuals for a kind's own (A, B, C) split, plus the
    reconstruction error |W - (k A + B/k + C)|."""
    dec = kind.decomposition(params)
    if dec is None:
        raise ValueError(f"{kind.name} does not declare a k A + B/k + C split")
    xs = grid.nodes
    a = _combine(dec.a_terms, xs)
    da = _combine(dec.da_terms, xs)
    c = _combine(dec.c_terms, xs)
    dc = _combine(dec.dc_terms, xs)
    res = classification_residual(a, dec.b_matrix, c, da, dc, dec.constants)
    w = kind.weval(params, xs)
    rebuilt = dec.k * a + dec.b_matrix / dec.k + c
    res["reconstruction"] = _max_matrix_norm(w - rebuilt)
    return res
