"""Parameter bundle shared by every catalog entry."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

__all__ = ["ParamSet", "ParameterError"]


class ParameterError(ValueError):
    """Raised when a parameter set violates a kind's structural constraints."""


@dataclass(frozen=True)
class ParamSet:
    """Flat bag of real parameters; each kind reads the subset it declares.

    ``lam`` is the trigonometric/hyperbolic frequency (lambda is reserved
    in Python), ``alpha`` the unit of the kappa-shift, kappa = alpha * nu.
    """

    nu: float = 1.0
    mu: float = 0.0
    omega: float = 1.0
    lam: float = 1.0
    kappa: float = 1.0
    c: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    r2: float = 0.0
    r3: float = 0.0
    mu1: float = 0.0
    mu2: float = 0.0
    mu3: float = 0.0
    alpha: float = 1.0

    def replace(self, **kw) -> "ParamSet":
        return dataclasses.replace(self, **kw)

    def shifted(self, field: str, step: float) -> "ParamSet":
        return self.replace(**{field: getattr(self, field) + step})
