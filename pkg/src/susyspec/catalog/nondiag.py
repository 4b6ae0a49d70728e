"""2x2 superpotentials with a non-diagonal leading part.

These nine entries are catalogued for evaluation, hermiticity and the
k A + B/k + C classification residuals; no closed-form bound states are
attached to them.  The constant matrix R = r3 s3 + r2 s2 is constrained
by r2^2 + r3^2 = omega^2.  In the fourth entry the published table pairs
both hyperbolic terms with the upper projector; only the upper/lower
split satisfies the defining first-order system, so that is what is
implemented.
"""

from __future__ import annotations

import math

import numpy as np

from .base import DomainSpec, SPDecomposition, SuperpotentialKind
from .matrices import ID2, SIGMA1, SIGMA2, SIGMA3, SIGMA_MINUS, SIGMA_PLUS
from .params import ParamSet, ParameterError

__all__ = ["NONDIAG_KINDS"]


def _coth(z):
    return 1.0 / np.tanh(z)


def _csch(z):
    return 1.0 / np.sinh(z)


def _sech(z):
    return 1.0 / np.cosh(z)


def _sec(z):
    return 1.0 / np.cos(z)


def _r_matrix(p: ParamSet) -> np.ndarray:
    return p.r3 * SIGMA3 + p.r2 * SIGMA2


class _NonDiagKind(SuperpotentialKind):
    dim = 2
    parameters = ("kappa", "mu", "lam", "c", "r2", "r3", "omega")
    uses_c = True
    scale_by_lam = True

    def validate(self, p):
        if p.kappa == 0.0:
            raise ParameterError(f"{self.name}: kappa must be nonzero")
        if self.scale_by_lam and p.lam <= 0.0:
            raise ParameterError(f"{self.name}: lam must be positive")
        if self.uses_c and p.c == 0.0:
            raise ParameterError(f"{self.name}: c must be nonzero")
        target = p.omega**2
        if abs(p.r2**2 + p.r3**2 - target) > 1e-12 * max(1.0, target):
            raise ParameterError(f"{self.name}: requires r2^2 + r3^2 = omega^2")

    # diagonal (projector) part f_plus, f_minus and radical part g, with
    # derivatives; subclasses fill these in
    def _parts(self, p):
        raise NotImplementedError

    def terms(self, p):
        fp, fm, g, _, _, _ = self._parts(p)
        lam = p.lam if self.scale_by_lam else 1.0
        return [
            (fp, lam * p.kappa * np.asarray(SIGMA_PLUS)),
            (fm, lam * p.kappa * np.asarray(SIGMA_MINUS)),
            (g, lam * p.mu * SIGMA1),
            (lambda x: np.ones_like(x), lam / p.kappa * _r_matrix(p)),
        ]

    def dterms(self, p):
        _, _, _, dfp, dfm, dg = self._parts(p)
        lam = p.lam if self.scale_by_lam else 1.0
        return [
            (dfp, lam * p.kappa * np.asarray(SIGMA_PLUS)),
            (dfm, lam * p.kappa * np.asarray(SIGMA_MINUS)),
            (dg, lam * p.mu * SIGMA1),
        ]

    def decomposition(self, p):
        fp, fm, g, dfp, dfm, dg = self._parts(p)
        lam = p.lam if self.scale_by_lam else 1.0
        sp = np.asarray(SIGMA_PLUS)
        sm = np.asarray(SIGMA_MINUS)
        cmat = lam * p.mu * SIGMA1
        return SPDecomposition(
            k=p.kappa,
            a_terms=[(fp, lam * sp), (fm, lam * sm)],
            da_terms=[(dfp, lam * sp), (dfm, lam * sm)],
            b_matrix=lam * _r_matrix(p),
            c_terms=[(g, cmat)],
            dc_terms=[(dg, cmat)],
            constants={
                "alpha": 1.0,
                "nu": self._nu_constant(p),
                "kappa": 0.0,
                "lam": 0.0,
                "omega": lam * p.omega,
            },
        )

    def _nu_constant(self, p) -> float:
        raise NotImplementedError


class W1(_NonDiagKind):
    """lam [kappa(s+ tan(lam x+c) + s- tan(lam x-c)) + mu s1 sqrt(sec- sec+) + R/kappa]."""

    name = "nondiag.w1"

    def validate(self, p):
        super().validate(p)
        if abs(p.c) >= 0.5 * math.pi:
            raise ParameterError("w1: |c| must be below pi/2")

    def _parts(self, p):
        lam, c = p.lam, p.c
        fp = lambda x: np.tan(lam * x + c)
        fm = lambda x: np.tan(lam * x - c)
        g = lambda x: np.sqrt(_sec(lam * x - c) * _sec(lam * x + c))
        dfp = lambda x: lam * _sec(lam * x + c) ** 2
        dfm = lambda x: lam * _sec(lam * x - c) ** 2
        dg = lambda x: 0.5 * lam * g(x) * (np.tan(lam * x - c) + np.tan(lam * x + c))
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return p.lam**2

    def domain(self, p):
        half = (0.5 * math.pi - abs(p.c)) / p.lam
        return DomainSpec(-half, half, "pole", "pole")


class W2(_NonDiagKind):
    """lam [-kappa(s+ coth(lam x+c) + s- coth(lam x-c)) + mu s1 sqrt(csch- csch+) + R/kappa]."""

    name = "nondiag.w2"

    def _parts(self, p):
        lam, c = p.lam, p.c
        fp = lambda x: -_coth(lam * x + c)
        fm = lambda x: -_coth(lam * x - c)
        g = lambda x: np.sqrt(_csch(lam * x - c) * _csch(lam * x + c))
        dfp = lambda x: lam * _csch(lam * x + c) ** 2
        dfm = lambda x: lam * _csch(lam * x - c) ** 2
        dg = lambda x: -0.5 * lam * g(x) * (_coth(lam * x - c) + _coth(lam * x + c))
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return -(p.lam**2)

    def domain(self, p):
        return DomainSpec(abs(p.c) / p.lam, math.inf, "pole", "const")


class W3(_NonDiagKind):
    """lam [-kappa(s+ tanh(lam x+c) + s- tanh(lam x-c)) + mu s1 sqrt(sech- sech+) + R/kappa]."""

    name = "nondiag.w3"

    def _parts(self, p):
        lam, c = p.lam, p.c
        fp = lambda x: -np.tanh(lam * x + c)
        fm = lambda x: -np.tanh(lam * x - c)
        g = lambda x: np.sqrt(_sech(lam * x - c) * _sech(lam * x + c))
        dfp = lambda x: -lam * _sech(lam * x + c) ** 2
        dfm = lambda x: -lam * _sech(lam * x - c) ** 2
        dg = lambda x: -0.5 * lam * g(x) * (np.tanh(lam * x - c) + np.tanh(lam * x + c))
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return -(p.lam**2)

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "const", "const")


class W4(_NonDiagKind):
    """lam [-kappa(s+ tanh(lam x+c) + s- coth(lam x-c)) + mu s1 sqrt(sech+ csch-) + R/kappa]."""

    name = "nondiag.w4"

    def _parts(self, p):
        lam, c = p.lam, p.c
        fp = lambda x: -np.tanh(lam * x + c)
        fm = lambda x: -_coth(lam * x - c)
        g = lambda x: np.sqrt(_sech(lam * x + c) * _csch(lam * x - c))
        dfp = lambda x: -lam * _sech(lam * x + c) ** 2
        dfm = lambda x: lam * _csch(lam * x - c) ** 2
        dg = lambda x: -0.5 * lam * g(x) * (np.tanh(lam * x + c) + _coth(lam * x - c))
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return -(p.lam**2)

    def domain(self, p):
        return DomainSpec(p.c / p.lam, math.inf, "pole", "const")


class W5(_NonDiagKind):
    """lam [-kappa(s+ tanh(lam x) + s-) + mu s1 sqrt(sech(lam x) e^(-lam x)) + R/kappa]."""

    name = "nondiag.w5"
    uses_c = False

    def _parts(self, p):
        lam = p.lam
        fp = lambda x: -np.tanh(lam * x)
        fm = lambda x: -np.ones_like(x)
        g = lambda x: np.sqrt(_sech(lam * x) * np.exp(-lam * x))
        dfp = lambda x: -lam * _sech(lam * x) ** 2
        dfm = lambda x: np.zeros_like(x)
        dg = lambda x: -0.5 * lam * g(x) * (np.tanh(lam * x) + 1.0)
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return -(p.lam**2)

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "const", "const")


class W6(_NonDiagKind):
    """lam [-kappa(s+ coth(lam x) + s-) + mu s1 sqrt(csch(lam x) e^(-lam x)) + R/kappa]."""

    name = "nondiag.w6"
    uses_c = False

    def _parts(self, p):
        lam = p.lam
        fp = lambda x: -_coth(lam * x)
        fm = lambda x: -np.ones_like(x)
        g = lambda x: np.sqrt(_csch(lam * x) * np.exp(-lam * x))
        dfp = lambda x: lam * _csch(lam * x) ** 2
        dfm = lambda x: np.zeros_like(x)
        dg = lambda x: -0.5 * lam * g(x) * (_coth(lam * x) + 1.0)
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return -(p.lam**2)

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")


class W7(_NonDiagKind):
    """-kappa(s+/(x+c) + s-/(x-c)) + mu s1 / sqrt(x^2-c^2) + R/kappa."""

    name = "nondiag.w7"
    scale_by_lam = False

    def _parts(self, p):
        c = p.c
        fp = lambda x: -1.0 / (x + c)
        fm = lambda x: -1.0 / (x - c)
        g = lambda x: 1.0 / np.sqrt(x * x - c * c)
        dfp = lambda x: 1.0 / (x + c) ** 2
        dfm = lambda x: 1.0 / (x - c) ** 2
        dg = lambda x: -x * (x * x - c * c) ** (-1.5)
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return 0.0

    def domain(self, p):
        return DomainSpec(abs(p.c), math.inf, "pole", "const")


class W8(_NonDiagKind):
    """-kappa s+/x + mu s1 / sqrt(x) + R/kappa."""

    name = "nondiag.w8"
    uses_c = False
    scale_by_lam = False

    def _parts(self, p):
        fp = lambda x: -1.0 / x
        fm = lambda x: np.zeros_like(x)
        g = lambda x: 1.0 / np.sqrt(x)
        dfp = lambda x: 1.0 / x**2
        dfm = lambda x: np.zeros_like(x)
        dg = lambda x: -0.5 * x ** (-1.5)
        return fp, fm, g, dfp, dfm, dg

    def _nu_constant(self, p):
        return 0.0

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")


class W9(_NonDiagKind):
    """lam [-kappa I + mu e^(-lam x) s1 - (omega/kappa) s3]."""

    name = "nondiag.w9"
    uses_c = False

    def validate(self, p):
        if p.kappa == 0.0:
            raise ParameterError("w9: kappa must be nonzero")
        if p.lam <= 0.0:
            raise ParameterError("w9: lam must be positive")

    def terms(self, p):
        lam = p.lam
        return [
            (lambda x: np.ones_like(x), -lam * p.kappa * ID2 - lam * p.omega / p.kappa * SIGMA3),
            (lambda x: np.exp(-lam * x), lam * p.mu * SIGMA1),
        ]

    def dterms(self, p):
        lam = p.lam
        return [(lambda x: np.exp(-lam * x), -(lam**2) * p.mu * SIGMA1)]

    def decomposition(self, p):
        lam = p.lam
        cmat = lam * p.mu * SIGMA1
        return SPDecomposition(
            k=p.kappa,
            a_terms=[(lambda x: np.ones_like(x), -lam * ID2)],
            da_terms=[(lambda x: np.zeros_like(x), ID2)],
            b_matrix=-lam * p.omega * SIGMA3,
            c_terms=[(lambda x: np.exp(-lam * x), cmat)],
            dc_terms=[(lambda x: np.exp(-lam * x), -lam * cmat)],
            constants={
                "alpha": 1.0,
                "nu": -(lam**2),
                "kappa": 0.0,
                "lam": 0.0,
                "omega": lam * p.omega,
            },
        )

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "divergent", "const")


NONDIAG_KINDS = {k.name: k for k in (W1(), W2(), W3(), W4(), W5(), W6(), W7(), W8(), W9())}
