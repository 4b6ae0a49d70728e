"""Catalog of the twenty rotationally invariant position-dependent-mass
systems (ten with vector integrals of motion, ten with tensor ones),
plus the four special inverse masses with extended point symmetry.

Each row stores closed forms for the inverse mass f and coupling V, the
declared solution approaches, the working branch of the radial variable
(the tables leave domains implicit; branches here are chosen so the
transformed problem is complete: rows whose f vanishes at x = 1 are
solved on (0, 1), which contains the physical origin), and the effective
shape-invariant family of each route with its frequency hint in the
Liouville coordinate.

For the two-step rows the stored ``ft`` trio is the transformed inverse
mass alpha f / V, which is a clean polynomial even where f and V change
sign individually; ``ts_sign`` records the sign factor making it
positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

__all__ = ["PdmRow", "PDM_ROWS", "SPECIAL_ROWS", "get_row"]


@dataclass(frozen=True)
class PdmRow:
    key: str
    table: int
    item: int
    f: Callable
    fp: Callable
    fpp: Callable
    v: Callable  # v(x, alpha, nu)
    approaches: tuple
    domain: tuple  # open interval of the working branch
    direct_family: Optional[str] = None
    direct_lam: float = 1.0
    ts_family: Optional[str] = None
    ts_lam: float = 1.0
    ft: Optional[tuple] = None  # (ft, ftp, ftpp) transformed inverse mass
    ts_sign: float = 1.0
    ts_domain: Optional[tuple] = None
    analytic_ok: bool = True  # closed-form spectra reachable on the branch
    has_nu: bool = False
    numeric_route: str = "x-domain"  # eigensolver formulation for cross-checks
    note: str = ""

    def describe(self) -> dict:
        return {
            "key": self.key,
            "approaches": list(self.approaches),
            "domain": list(self.domain),
            "direct_family": self.direct_family,
            "two_step_family": self.ts_family,
            "two_parameter": self.has_nu,
            "analytic": self.analytic_ok,
            "note": self.note,
        }


INF = math.inf


def _row(key, table, item, f3, v, approaches, domain, **kw):
    f, fp, fpp = f3
    return PdmRow(
        key=key, table=table, item=item, f=f, fp=fp, fpp=fpp, v=v,
        approaches=approaches, domain=domain, **kw,
    )


# inverse-mass closed forms (f, f', f'')
_F_X = (lambda x: x, lambda x: 1.0 + 0.0 * x, lambda x: 0.0 * x)
_F_X4 = (lambda x: x**4, lambda x: 4 * x**3, lambda x: 12 * x**2)
_F_X6 = (lambda x: x**6, lambda x: 6 * x**5, lambda x: 30 * x**4)
_F_ONE = (lambda x: 1.0 + 0.0 * x, lambda x: 0.0 * x, lambda x: 0.0 * x)
_F_XM2 = (lambda x: x**-2, lambda x: -2.0 * x**-3, lambda x: 6.0 * x**-4)
_F_T13 = (
    lambda x: x * (x - 1) ** 2,
    lambda x: 3 * x**2 - 4 * x + 1,
    lambda x: 6 * x - 4,
)
_F_T14 = (
    lambda x: x * (x + 1) ** 2,
    lambda x: 3 * x**2 + 4 * x + 1,
    lambda x: 6 * x + 4,
)
_F_1PX2 = (lambda x: (1 + x**2) ** 2, lambda x: 4 * x * (1 + x**2), lambda x: 4 + 12 * x**2)
_F_1MX2 = (lambda x: (1 - x**2) ** 2, lambda x: -4 * x * (1 - x**2), lambda x: -4 + 12 * x**2)
_F_X2M1 = (lambda x: (x**2 - 1) ** 2, lambda x: 4 * x * (x**2 - 1), lambda x: 12 * x**2 - 4)
_F_Q5 = (
    lambda x: x**6 - 2 * x**2 + x**-2,
    lambda x: 6 * x**5 - 4 * x - 2 * x**-3,
    lambda x: 30 * x**4 - 4 + 6 * x**-4,
)
_F_Q6 = (
    lambda x: x**6 + 2 * x**2 + x**-2,
    lambda x: 6 * x**5 + 4 * x - 2 * x**-3,
    lambda x: 30 * x**4 + 4 + 6 * x**-4,
)
_F_T17 = (
    lambda x: x / (x + 1),
    lambda x: (x + 1) ** -2,
    lambda x: -2.0 * (x + 1) ** -3,
)
_F_T18 = (
    lambda x: x / (x - 1),
    lambda x: -((x - 1) ** -2),
    lambda x: 2.0 * (x - 1) ** -3,
)
_F_T27 = (
    lambda x: 1.0 / (x**2 + 1),
    lambda x: -2 * x / (x**2 + 1) ** 2,
    lambda x: (6 * x**2 - 2) / (x**2 + 1) ** 3,
)
_F_T28 = (
    lambda x: 1.0 / (x**2 - 1),
    lambda x: -2 * x / (x**2 - 1) ** 2,
    lambda x: (6 * x**2 + 2) / (x**2 - 1) ** 3,
)

PDM_ROWS = {}

for row in [
    _row(
        "t1.1", 1, 1, _F_X, lambda x, a, nu: a * x,
        ("direct", "two-step"), (0.0, INF),
        direct_family="osc3d", ts_family="coulomb", ft=_F_ONE,
        ts_domain=(0.0, INF),
    ),
    _row(
        "t1.2", 1, 2, _F_X4, lambda x, a, nu: a * x,
        ("direct", "two-step"), (0.0, INF),
        direct_family="coulomb", ts_family="osc3d",
        ft=(lambda x: x**3, lambda x: 3 * x**2, lambda x: 6 * x),
        ts_domain=(0.0, INF), numeric_route="effective",
        note="bound states pile up toward the origin; the eigensolver "
             "cross-check runs on the transformed problem",
    ),
    _row(
        "t1.3", 1, 3, _F_T13, lambda x, a, nu: a * x / (x + 1) ** 2,
        ("direct", "two-step"), (0.0, 1.0),
        direct_family="genpt", direct_lam=2.0,
        ts_family="eckart", ts_lam=2.0, ft=_F_X2M1, ts_domain=(0.0, 1.0),
        note="branch containing the origin; f vanishes at x = 1",
    ),
    _row(
        "t1.4", 1, 4, _F_T14, lambda x, a, nu: a * x / (x - 1) ** 2,
        ("direct", "two-step"), (0.0, 1.0),
        direct_family="trig-pt", direct_lam=2.0,
        ts_family="eckart", ts_lam=2.0, ft=_F_X2M1, ts_domain=(0.0, 1.0),
        note="branch below the coupling pole at x = 1",
    ),
    _row(
        "t1.5", 1, 5, _F_1PX2, lambda x, a, nu: a * (1 - x**2) / x,
        ("direct",), (0.0, INF), direct_family="trig-rm", direct_lam=2.0,
    ),
    _row(
        "t1.6", 1, 6, _F_1MX2, lambda x, a, nu: a * (1 + x**2) / x,
        ("direct",), (0.0, 1.0), direct_family="eckart", direct_lam=2.0,
    ),
    _row(
        "t1.7", 1, 7, _F_T17, lambda x, a, nu: a * x / (x + 1),
        ("two-step",), (0.0, INF),
        ts_family="coulomb", ft=_F_ONE, ts_domain=(0.0, INF),
    ),
    _row(
        "t1.8", 1, 8, _F_T18, lambda x, a, nu: a * x / (x - 1),
        ("two-step",), (1.0, INF),
        ts_family="coulomb", ft=_F_ONE, ts_domain=(1.0, INF),
        analytic_ok=False,
        note="transformed problem lives on a shifted half line; spectra numeric",
    ),
    _row(
        "t1.9", 1, 9,
        (
            lambda x: (x**2 - 1) ** 2 * x / (x**2 - 2 * 0.0 * x + 1),
            None,
            None,
        ),
        lambda x, a, nu: a * x / (x**2 - 2 * nu * x + 1),
        ("two-step",), (0.0, 1.0),
        ts_family="eckart", ts_lam=2.0, ft=_F_X2M1, ts_domain=(0.0, 1.0),
        has_nu=True,
        note="f depends on nu; stored f is the nu = 0 slice, use f_of(nu)",
    ),
    _row(
        "t1.10", 1, 10,
        (
            lambda x: (x**2 + 1) ** 2 * x / (x**2 - 2 * 0.0 * x - 1),
            None,
            None,
        ),
        lambda x, a, nu: a * x / (x**2 - 2 * nu * x - 1),
        ("two-step",), (0.0, INF),
        ts_family="trig-rm", ts_lam=2.0, ft=_F_1PX2, ts_domain=(0.0, INF),
        has_nu=True,
    ),
    _row(
        "t2.1", 2, 1, _F_XM2, lambda x, a, nu: a / x**2,
        ("direct", "two-step"), (0.0, INF),
        direct_family="coulomb", ts_family="osc3d", ft=_F_ONE,
        ts_domain=(0.0, INF),
    ),
    _row(
        "t2.2", 2, 2, _F_X4, lambda x, a, nu: -a / x**2,
        ("direct", "two-step"), (0.0, INF),
        direct_family="osc3d", ts_family="coulomb", ft=_F_X6, ts_sign=-1.0,
        ts_domain=(0.0, INF), numeric_route="effective",
        note="bound states pile up toward the origin; the eigensolver "
             "cross-check runs on the transformed problem",
    ),
    _row(
        "t2.3", 2, 3, _F_X2M1, lambda x, a, nu: a * x**2 / (x**2 + 1) ** 2,
        ("direct", "two-step"), (0.0, 1.0),
        direct_family="genpt", direct_lam=4.0,
        ts_family="eckart", ts_lam=4.0, ft=_F_Q5, ts_domain=(0.0, 1.0),
    ),
    _row(
        "t2.4", 2, 4, _F_1PX2, lambda x, a, nu: a * x**2 / (x**2 - 1) ** 2,
        ("direct", "two-step"), (0.0, 1.0),
        direct_family="trig-pt", direct_lam=4.0,
        ts_family="eckart", ts_lam=4.0, ft=_F_Q5, ts_domain=(0.0, 1.0),
    ),
    _row(
        "t2.5", 2, 5, _F_Q5, lambda x, a, nu: a * (x**4 + 1) / x**2,
        ("direct",), (0.0, 1.0), direct_family="eckart", direct_lam=4.0,
    ),
    _row(
        "t2.6", 2, 6, _F_Q6, lambda x, a, nu: a * (x**4 - 1) / x**2,
        ("direct",), (0.0, INF), direct_family="trig-rm", direct_lam=4.0,
    ),
    _row(
        "t2.7", 2, 7, _F_T27, lambda x, a, nu: a / (x**2 + 1),
        ("two-step",), (0.0, INF),
        ts_family="osc3d", ft=_F_ONE, ts_domain=(0.0, INF),
    ),
    _row(
        "t2.8", 2, 8, _F_T28, lambda x, a, nu: a / (x**2 - 1),
        ("two-step",), (1.0, INF),
        ts_family="osc3d", ft=_F_ONE, ts_domain=(1.0, INF),
        analytic_ok=False,
        note="transformed problem lives on a shifted half line; spectra numeric",
    ),
    _row(
        "t2.9", 2, 9,
        (
            lambda x: (x**4 - 1) ** 2 / (x**4 - 2 * 0.0 * x**2 + 1),
            None,
            None,
        ),
        lambda x, a, nu: a * x**2 / (x**4 - 2 * nu * x**2 + 1),
        ("two-step",), (0.0, 1.0),
        ts_family="eckart", ts_lam=4.0, ft=_F_Q5, ts_domain=(0.0, 1.0),
        has_nu=True,
    ),
    _row(
        "t2.10", 2, 10,
        (
            lambda x: (x**4 + 1) ** 2 / (x**4 - 2 * 0.0 * x**2 - 1),
            None,
            None,
        ),
        lambda x, a, nu: a * x**2 / (x**4 - 2 * nu * x**2 - 1),
        ("two-step",), (0.0, INF),
        ts_family="trig-rm", ts_lam=4.0, ft=_F_Q6, ts_domain=(0.0, INF),
        has_nu=True,
        note="two-parameter row; closed-form spectrum available",
    ),
]:
    PDM_ROWS[row.key] = row


def f_of(row: PdmRow, nu: float) -> Callable:
    """Inverse mass of the two-parameter rows at a given nu."""
    if row.key == "t1.9":
        return lambda x: (x**2 - 1) ** 2 * x / (x**2 - 2 * nu * x + 1)
    if row.key == "t1.10":
        return lambda x: (x**2 + 1) ** 2 * x / (x**2 - 2 * nu * x - 1)
    if row.key == "t2.9":
        return lambda x: (x**4 - 1) ** 2 / (x**4 - 2 * nu * x**2 + 1)
    if row.key == "t2.10":
        return lambda x: (x**4 + 1) ** 2 / (x**4 - 2 * nu * x**2 - 1)
    return row.f


# the four inverse masses with extended point symmetry; V is fixed
SPECIAL_ROWS = {
    "g1": _row("g1", 0, 1, (lambda x: x**2, lambda x: 2 * x, lambda x: 2.0 + 0 * x),
               lambda x, a, nu: 0.0 * x, ("direct",), (0.0, INF)),
    "g2": _row("g2", 0, 2, _F_1PX2, lambda x, a, nu: -6.0 * x**2,
               ("direct",), (0.0, INF)),
    "g3": _row("g3", 0, 3, _F_1MX2, lambda x, a, nu: -6.0 * x**2,
               ("direct",), (0.0, 1.0)),
    "g4": _row("g4", 0, 4, _F_X4, lambda x, a, nu: -6.0 * x**2,
               ("direct",), (0.0, INF)),
}


def get_row(key: str) -> PdmRow:
    if key in PDM_ROWS:
        return PDM_ROWS[key]
    if key in SPECIAL_ROWS:
        return SPECIAL_ROWS[key]
    raise KeyError(f"unknown PDM row {key!r}; valid: t1.1..t2.10, g1..g4")
