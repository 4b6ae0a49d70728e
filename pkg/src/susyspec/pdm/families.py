"""Shape-invariant families for the transformed PDM problems.

Every effective potential produced by the Liouville transforms belongs
to one of six bare families on the half line (or a finite box):

    coulomb : A/u^2 + B/u + c0,              E_n = c0 - (B/2)^2/(kap+n)^2
    osc3d   : A/u^2 + B u^2 + c0,            E_n = c0 + (4n + 2 kap + 1) sqrt(B)
    eckart  : A csch^2(g u) + B coth(g u),   E_n = c0 - g^2 N^2 - w^2/N^2
    trig-rm : A csc^2(g u) + B cot(g u),     E_n = c0 + g^2 N^2 - w^2/N^2
    trig-pt : A csc^2 + B csc cot,           E_n = c0 + g^2 (kap + n)^2
    genpt   : A csch^2 + B coth csch,        E_k = c0 - (g/2)^2 (s - s0 - 2k)^2

with kap(kap-1) = A/g^2 (coulomb/osc3d: g = 1), N = kap + n, and
w = -B/(2g).  The last family is the hyperbolic Poschl-Teller well in
half-argument form, P csch^2(g u/2) - Q sech^2(g u/2) with
P = (A+B)/4 and Q = (A-B)/4; its tower is indexed by the well parameter
s(s+1) = 4Q/g^2 and the barrier exponent s0(s0-1) = 4P/g^2.  The fit is
linear least squares in (A, B, c0) with the frequency g supplied by the
row metadata; the anchor end of the coordinate u is chosen by residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

__all__ = ["FamilyFit", "fit_family", "fit_family_linear", "family_energy"]


@dataclass(frozen=True)
class FamilyFit:
    family: str
    g: float
    a: float
    b: float
    c0: float
    residual: float
    anchor: str  # "left" or "right"
    params: Optional[dict]  # None when the coefficients leave the family's
    #                         physical window (no bound tower there)

    def energy(self, n: int) -> float:
        return family_energy(self, n)

    def max_levels(self) -> int:
        """Number of admissible tower levels (large for unbounded towers)."""
        fam, prm = self.family, self.params
        if prm is None:
            return 0
        if fam == "eckart":
            w, kap, g = prm["omega"], prm["kappa"], self.g
            if w <= 0:
                return 0
            top = math.sqrt(w / g)
            return max(0, int(math.ceil(top - kap - 1e-12)))
        if fam == "genpt":
            span = prm["s"] - prm["s0"]
            return max(0, int(math.ceil(0.5 * span - 1e-12)))
        if fam == "coulomb":
            return 10**6 if prm["omega"] > 0 else 0
        return 10**6


def _solve_kappa(a_over_g2: float) -> float:
    disc = 1.0 + 4.0 * a_over_g2
    if disc < 0:
        raise ValueError("inverse-square coefficient below the critical value")
    return 0.5 * (1.0 + math.sqrt(disc))


def _pair_from_quadratic(a: float, b: float, plus_one: bool):
    """kappa, mu with kappa(kappa -/+ ... ) for the two-term PT families.

    Solves u^2 - (4a+1) u + 4 b^2 = 0 for u = (2 kappa -/+ 1)^2; the root
    branch is chosen so kappa is maximal (ground-supporting branch).
    """
    disc = (4 * a + 1.0) ** 2 - 16.0 * b * b
    if disc < 0:
        raise ValueError("no real parameter pair for the fitted coefficients")
    u = 0.5 * ((4 * a + 1.0) + math.sqrt(disc))
    if u <= 0:
        raise ValueError("degenerate parameter pair")
    root = math.sqrt(u)
    if plus_one:  # genpt: u = (2 kappa + 1)^2, mu (2 kappa + 1) = b
        return 0.5 * (root - 1.0), b / root
    # trig-pt: u = (2 kappa - 1)^2, mu (2 kappa - 1) = -b
    return 0.5 * (root + 1.0), -b / root


def family_energy(fit: FamilyFit, n: int) -> float:
    fam, prm, g = fit.family, fit.params, fit.g
    if prm is None:
        raise ValueError(f"no bound tower for the fitted {fam} coefficients")
    if fam == "coulomb":
        big_n = prm["kappa"] + n
        return fit.c0 - prm["omega"] ** 2 / big_n**2
    if fam == "osc3d":
        return fit.c0 + (4 * n + 2 * prm["kappa"] + 1.0) * prm["freq"]
    if fam == "eckart":
        big_n = prm["kappa"] + n
        return fit.c0 - g**2 * big_n**2 - prm["omega"] ** 2 / big_n**2
    if fam == "trig-rm":
        big_n = prm["kappa"] + n
        return fit.c0 + g**2 * big_n**2 - prm["omega"] ** 2 / big_n**2
    if fam == "trig-pt":
        return fit.c0 + g**2 * (prm["kappa"] + n) ** 2
    if fam == "genpt":
        gt = 0.5 * g
        return fit.c0 - gt**2 * (prm["s"] - prm["s0"] - 2 * n) ** 2
    raise ValueError(f"unknown family {fam!r}")


def _design(family: str, u: np.ndarray, g: float) -> np.ndarray:
    one = np.ones_like(u)
    if family == "coulomb":
        cols = [u**-2, u**-1, one]
    elif family == "osc3d":
        cols = [u**-2, u**2, one]
    elif family == "eckart":
        cols = [np.sinh(g * u) ** -2, 1.0 / np.tanh(g * u), one]
    elif family == "trig-rm":
        cols = [np.sin(g * u) ** -2, 1.0 / np.tan(g * u), one]
    elif family == "trig-pt":
        cols = [np.sin(g * u) ** -2, np.cos(g * u) / np.sin(g * u) ** 2, one]
    elif family == "genpt":
        cols = [np.sinh(g * u) ** -2, np.cosh(g * u) / np.sinh(g * u) ** 2, one]
    else:
        raise ValueError(f"unknown family {family!r}")
    return np.stack(cols, axis=1)


def _fit_params(family: str, g: float, a: float, b: float) -> dict:
    if family == "coulomb":
        return {"kappa": _solve_kappa(a), "omega": -b / 2.0}
    if family == "osc3d":
        if b <= 0:
            raise ValueError("oscillator coefficient must be positive")
        return {"kappa": _solve_kappa(a), "freq": math.sqrt(b)}
    if family == "eckart":
        return {"kappa": _solve_kappa(a / g**2), "omega": -b / (2.0 * g)}
    if family == "trig-rm":
        return {"kappa": _solve_kappa(a / g**2), "omega": -b / (2.0 * g)}
    if family == "trig-pt":
        kap, mu = _pair_from_quadratic(a / g**2, b / g**2, plus_one=False)
        return {"kappa": kap, "mu": mu}
    if family == "genpt":
        # half-argument form: P csch^2 - Q sech^2 at frequency g/2
        gt2 = (0.5 * g) ** 2
        p_barrier = 0.25 * (a + b)
        q_well = 0.25 * (a - b)
        if q_well <= 0:
            raise ValueError("no attractive well in the fitted coefficients")
        disc0 = 1.0 + 4.0 * p_barrier / gt2
        if disc0 < 0:
            raise ValueError("barrier below the critical strength")
        s0 = 0.5 * (1.0 + math.sqrt(disc0))
        s_well = 0.5 * (-1.0 + math.sqrt(1.0 + 4.0 * q_well / gt2))
        return {"s": s_well, "s0": s0}
    raise ValueError(family)


def _window_mask(family: str, u: np.ndarray, g: float, hint: Optional[dict]) -> np.ndarray:
    """Sample window where the family's basis is well conditioned."""
    if family in ("eckart", "genpt"):
        return (g * u > 0.05) & (g * u < 6.0)
    if family in ("trig-rm", "trig-pt"):
        return (g * u > 0.04 * math.pi) & (g * u < 0.96 * math.pi)
    if hint is not None:
        if family == "coulomb" and hint.get("omega", 0.0) > 0:
            u_scale = max(hint["kappa"], 0.5) / hint["omega"]
            return (u > 0.05 * u_scale) & (u < 30.0 * u_scale)
        if family == "osc3d" and hint.get("freq", 0.0) > 0:
            u_scale = math.sqrt((2 * hint["kappa"] + 1.0) / hint["freq"])
            return (u > 0.05 * u_scale) & (u < 6.0 * u_scale)
    lo, hi = np.quantile(u, [0.02, 0.9])
    return (u >= lo) & (u <= hi)


def _lstsq_once(family, u, v, g, hint):
    mask = _window_mask(family, u, g, hint)
    if np.count_nonzero(mask) < 32:
        raise ValueError("window too small for the fit")
    uu = u[mask]
    design = _design(family, uu, g)
    scale = np.max(np.abs(design), axis=0)
    coef, *_ = np.linalg.lstsq(design / scale, v[mask], rcond=None)
    coef = coef / scale
    resid = float(
        np.max(np.abs(design @ coef - v[mask]))
        / max(1.0, float(np.max(np.abs(v[mask]))))
    )
    return coef, resid


def fit_family(
    family: str,
    y: np.ndarray,
    v: np.ndarray,
    g: float = 1.0,
    total_length: float = math.inf,
) -> FamilyFit:
    """Least-squares fit of the effective potential samples to a family.

    Both coordinate anchors are tried when the map length is finite (the
    singular end of the transformed problem may sit at either endpoint);
    the anchor with the smaller relative residual wins.  The unbounded
    families refit on a window scaled to the first pass's parameters.
    """
    y = np.asarray(y, dtype=float)
    v = np.asarray(v, dtype=float)
    candidates = [("left", y)]
    if math.isfinite(total_length):
        candidates.append(("right", total_length - y))
    best: Optional[FamilyFit] = None
    for anchor, u in candidates:
        if np.any(u <= 0.0):
            continue
        try:
            coef, resid = _lstsq_once(family, u, v, g, None)
            if family in ("coulomb", "osc3d"):
                try:
                    hint = _fit_params(family, g, coef[0], coef[1])
                    coef, resid = _lstsq_once(family, u, v, g, hint)
                except ValueError:
                    pass
        except (ValueError, np.linalg.LinAlgError):
            continue
        a, b, c0 = coef
        try:
            params = _fit_params(family, g, a, b)
        except ValueError:
            params = None
        fit = FamilyFit(
            family=family, g=g, a=a, b=b, c0=c0, residual=resid,
            anchor=anchor, params=params,
        )
        if best is None or fit.residual < best.residual:
            best = fit
    if best is None:
        raise ValueError(f"could not fit family {family!r}")
    return best


def fit_family_linear(
    family: str,
    y: np.ndarray,
    base: np.ndarray,
    slope: np.ndarray,
    g: float,
    total_length: float,
    probes: tuple,
):
    """Coefficient lines (a, b, c0)(E) = base_coef + E*slope_coef for a
    potential that is linear in a trial energy E.

    A probe fit locates the anchor and window on which the family is
    well conditioned; base and slope samples are then projected on that
    single design so the coefficient interpolation is exact.
    Returns (coef_base, coef_slope, anchor, residual_of_probe).
    """
    y = np.asarray(y, dtype=float)
    probe_fit = None
    for e in probes:
        try:
            cand = fit_family(family, y, base + e * slope, g, total_length)
        except ValueError:
            continue
        if cand.params is not None and (probe_fit is None or cand.residual < probe_fit.residual):
            probe_fit = cand
    if probe_fit is None:
        raise ValueError(f"no probe energy produced a valid {family} fit")
    u = y if probe_fit.anchor == "left" else total_length - y
    hint = probe_fit.params if family in ("coulomb", "osc3d") else None
    mask = _window_mask(family, u, g, hint)
    design = _design(family, u[mask], g)
    scale = np.max(np.abs(design), axis=0)
    sol, *_ = np.linalg.lstsq(
        design / scale, np.stack([base[mask], slope[mask]], axis=1), rcond=None
    )
    coef_base = sol[:, 0] / scale
    coef_slope = sol[:, 1] / scale
    return coef_base, coef_slope, probe_fit.anchor, probe_fit.residual
