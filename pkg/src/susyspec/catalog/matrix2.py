"""Irreducible 2x2 matrix superpotentials with diagonal leading part,
and the alternative (dual) factorizations of the three families that are
shape invariant in the second parameter as well.

Primary entries shift nu -> nu + 1; dual entries shift mu -> mu + 1.
The family potentials (V = V- + fc) are

    inverse:  [mu(mu+1) + nu^2 - nu(2mu+1) s3]/x^2 - (omega/x) s1
    exp:      lam^2 [mu^2 e^(-2 lam x) - (2nu-1) mu e^(-lam x) s1 + 2 omega s3]
    tan:      lam^2 [(nu(nu-1)+mu^2) sec^2 + 2 omega tan s1 + mu(2nu-1) sec tan s3]
    cotanh:   lam^2 [(nu(nu-1)+mu^2) csch^2 + 2 omega coth s1 + mu(1-2nu) coth csch s3]
    tanh:     lam^2 [(mu^2-nu(nu-1)) sech^2 + 2 omega tanh s3 - mu(2nu-1) sech tanh s1]

with s1, s3 the Pauli matrices; the dual entries reproduce the inverse,
tan and cotanh potentials identically with mu as the shifted parameter.
"""

from __future__ import annotations

import math

import numpy as np

from .base import DomainSpec, SPDecomposition, SuperpotentialKind
from .matrices import ID2, SIGMA1, SIGMA3
from .params import ParamSet, ParameterError

__all__ = ["MATRIX2_KINDS", "DUAL_PARTNERS"]

_ONE2 = ID2


def _sec(z):
    return 1.0 / np.cos(z)


def _csch(z):
    return 1.0 / np.sinh(z)


class _Matrix2Kind(SuperpotentialKind):
    dim = 2

    def ground_gate(self, p: ParamSet):
        raise NotImplementedError


class Inverse(_Matrix2Kind):
    """W = [(2mu+1) s3 - (2nu+1)]/(2x) + omega s1/(2nu+1)."""

    name = "matrix2.inverse"
    shift_field = "nu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega")

    def validate(self, p):
        if p.mu <= -0.5:
            raise ParameterError("inverse: mu must exceed -1/2")
        if p.nu == -0.5:
            raise ParameterError("inverse: nu = -1/2 is singular")
        if p.omega == 0.0:
            raise ParameterError("inverse: omega must be nonzero")

    def terms(self, p):
        mat = 0.5 * ((2 * p.mu + 1) * SIGMA3 - (2 * p.nu + 1) * ID2)
        return [
            (lambda x: 1.0 / x, mat),
            (lambda x: np.ones_like(x), p.omega / (2 * p.nu + 1) * SIGMA1),
        ]

    def dterms(self, p):
        mat = 0.5 * ((2 * p.mu + 1) * SIGMA3 - (2 * p.nu + 1) * ID2)
        return [(lambda x: -1.0 / x**2, mat)]

    def factorization_constant(self, p):
        return -((p.omega / (2 * p.nu + 1)) ** 2)

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")

    def pole_residue(self, p, side):
        if side != "lo":
            return None
        return 0.5 * ((2 * p.mu + 1) * SIGMA3 - (2 * p.nu + 1) * ID2)

    def ground_gate(self, p):
        ok = p.nu > 0.0 and p.nu - p.mu > 0.0 and p.omega > 0.0
        return ok, "nu-mu-window", "requires nu > 0, nu - mu > 0 and omega > 0"

    def decomposition(self, p):
        # split in the stepped variable k = 2 nu + 1 (step of 2 per shift)
        k = 2 * p.nu + 1
        half = 0.5 * ID2
        cmat = 0.5 * (2 * p.mu + 1) * SIGMA3
        return SPDecomposition(
            k=k,
            a_terms=[(lambda x: -1.0 / x, half)],
            da_terms=[(lambda x: 1.0 / x**2, half)],
            b_matrix=p.omega * SIGMA1,
            c_terms=[(lambda x: 1.0 / x, cmat)],
            dc_terms=[(lambda x: -1.0 / x**2, cmat)],
            constants={"alpha": 2.0, "nu": 0.0, "kappa": 0.0, "lam": 0.0, "omega": p.omega},
        )


class Exp(_Matrix2Kind):
    """W = lam [-nu + mu e^(-lam x) s1 - (omega/nu) s3]."""

    name = "matrix2.exp"
    shift_field = "nu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega", "lam")

    def validate(self, p):
        if p.nu == 0.0:
            raise ParameterError("exp: nu must be nonzero")
        if p.lam <= 0.0:
            raise ParameterError("exp: lam must be positive")

    def terms(self, p):
        lam = p.lam
        return [
            (lambda x: np.ones_like(x), -lam * p.nu * ID2 - lam * p.omega / p.nu * SIGMA3),
            (lambda x: np.exp(-lam * x), lam * p.mu * SIGMA1),
        ]

    def dterms(self, p):
        lam = p.lam
        return [(lambda x: np.exp(-lam * x), -(lam**2) * p.mu * SIGMA1)]

    def factorization_constant(self, p):
        return -(p.lam**2) * (p.nu**2 + (p.omega / p.nu) ** 2)

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "divergent", "const")

    def ground_gate(self, p):
        ok = p.nu < 0.0 and p.nu**2 > abs(p.omega) and p.mu > 0.0
        return ok, "exp-binding", "requires nu < 0, nu^2 > |omega| and mu > 0"

    def decomposition(self, p):
        lam = p.lam
        bmat = -lam * p.omega * SIGMA3
        cmat = lam * p.mu * SIGMA1
        return SPDecomposition(
            k=p.nu,
            a_terms=[(lambda x: np.ones_like(x), -lam * ID2)],
            da_terms=[(lambda x: np.zeros_like(x), ID2)],
            b_matrix=bmat,
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


class Tan(_Matrix2Kind):
    """W = lam [nu tan(lam x) + mu sec(lam x) s3 + (omega/nu) s1]."""

    name = "matrix2.tan"
    shift_field = "nu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega", "lam")

    def validate(self, p):
        if p.nu == 0.0:
            raise ParameterError("tan: nu must be nonzero")
        if p.lam <= 0.0:
            raise ParameterError("tan: lam must be positive")

    def terms(self, p):
        lam = p.lam
        return [
            (lambda x: lam * p.nu * np.tan(lam * x), _ONE2),
            (lambda x: lam * p.mu * _sec(lam * x), SIGMA3),
            (lambda x: np.ones_like(x), lam * p.omega / p.nu * SIGMA1),
        ]

    def dterms(self, p):
        lam = p.lam
        return [
            (lambda x: lam**2 * p.nu * _sec(lam * x) ** 2, _ONE2),
            (lambda x: lam**2 * p.mu * _sec(lam * x) * np.tan(lam * x), SIGMA3),
        ]

    def factorization_constant(self, p):
        return p.lam**2 * (p.nu**2 - (p.omega / p.nu) ** 2)

    def domain(self, p):
        half = 0.5 * math.pi / p.lam
        return DomainSpec(-half, half, "pole", "pole")

    def pole_residue(self, p, side):
        sign = 1.0 if side == "lo" else -1.0
        return -p.nu * ID2 + sign * p.mu * SIGMA3

    def ground_gate(self, p):
        # trigonometric family: empirical gate, the box confines for nu > 0
        return p.nu > 0.0, "tan-binding", "requires nu > 0"

    def decomposition(self, p):
        lam = p.lam
        cmat = lam * p.mu * SIGMA3
        return SPDecomposition(
            k=p.nu,
            a_terms=[(lambda x: lam * np.tan(lam * x), _ONE2)],
            da_terms=[(lambda x: lam**2 * _sec(lam * x) ** 2, _ONE2)],
            b_matrix=lam * p.omega * SIGMA1,
            c_terms=[(lambda x: _sec(lam * x), cmat)],
            dc_terms=[(lambda x: lam * _sec(lam * x) * np.tan(lam * x), cmat)],
            constants={
                "alpha": 1.0,
                "nu": lam**2,
                "kappa": 0.0,
                "lam": 0.0,
                "omega": lam * p.omega,
            },
        )


class Cotanh(_Matrix2Kind):
    """W = lam [-nu coth(lam x) + mu csch(lam x) s3 - (omega/nu) s1]."""

    name = "matrix2.cotanh"
    shift_field = "nu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega", "lam")

    def validate(self, p):
        if p.nu == 0.0:
            raise ParameterError("cotanh: nu must be nonzero")
        if p.lam <= 0.0:
            raise ParameterError("cotanh: lam must be positive")

    def terms(self, p):
        lam = p.lam
        return [
            (lambda x: -lam * p.nu / np.tanh(lam * x), _ONE2),
            (lambda x: lam * p.mu * _csch(lam * x), SIGMA3),
            (lambda x: np.ones_like(x), -lam * p.omega / p.nu * SIGMA1),
        ]

    def dterms(self, p):
        lam = p.lam
        return [
            (lambda x: lam**2 * p.nu * _csch(lam * x) ** 2, _ONE2),
            (lambda x: -(lam**2) * p.mu * _csch(lam * x) / np.tanh(lam * x), SIGMA3),
        ]

    def factorization_constant(self, p):
        return -(p.lam**2) * (p.nu**2 + (p.omega / p.nu) ** 2)

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")

    def pole_residue(self, p, side):
        if side != "lo":
            return None
        return -p.nu * ID2 + p.mu * SIGMA3

    def ground_gate(self, p):
        ok = p.nu < 0.0 and p.nu**2 > abs(p.omega)
        return ok, "cotanh-binding", "requires nu < 0 and nu^2 > |omega| (empirical)"

    def decomposition(self, p):
        lam = p.lam
        cmat = lam * p.mu * SIGMA3
        return SPDecomposition(
            k=p.nu,
            a_terms=[(lambda x: -lam / np.tanh(lam * x), _ONE2)],
            da_terms=[(lambda x: lam**2 * _csch(lam * x) ** 2, _ONE2)],
            b_matrix=-lam * p.omega * SIGMA1,
            c_terms=[(lambda x: _csch(lam * x), cmat)],
            dc_terms=[(lambda x: -lam * _csch(lam * x) / np.tanh(lam * x), cmat)],
            constants={
                "alpha": 1.0,
                "nu": -(lam**2),
                "kappa": 0.0,
                "lam": 0.0,
                "omega": lam * p.omega,
            },
        )


class Tanh(_Matrix2Kind):
    """W = lam [-nu tanh(lam x) + mu sech(lam x) s1 - (omega/nu) s3]."""

    name = "matrix2.tanh"
    shift_field = "nu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega", "lam")

    def validate(self, p):
        if p.nu == 0.0:
            raise ParameterError("tanh: nu must be nonzero")
        if p.lam <= 0.0:
            raise ParameterError("tanh: lam must be positive")

    def terms(self, p):
        lam = p.lam
        return [
            (lambda x: -lam * p.nu * np.tanh(lam * x), _ONE2),
            (lambda x: lam * p.mu / np.cosh(lam * x), SIGMA1),
            (lambda x: np.ones_like(x), -lam * p.omega / p.nu * SIGMA3),
        ]

    def dterms(self, p):
        lam = p.lam
        return [
            (lambda x: -(lam**2) * p.nu / np.cosh(lam * x) ** 2, _ONE2),
            (lambda x: -(lam**2) * p.mu * np.tanh(lam * x) / np.cosh(lam * x), SIGMA1),
        ]

    def factorization_constant(self, p):
        return -(p.lam**2) * (p.nu**2 + (p.omega / p.nu) ** 2)

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "const", "const")

    def ground_gate(self, p):
        ok = p.nu < 0.0 and p.nu**2 > abs(p.omega)
        return ok, "tanh-binding", "requires nu < 0 and nu^2 > |omega| (empirical)"

    def decomposition(self, p):
        lam = p.lam
        cmat = lam * p.mu * SIGMA1
        return SPDecomposition(
            k=p.nu,
            a_terms=[(lambda x: -lam * np.tanh(lam * x), _ONE2)],
            da_terms=[(lambda x: -(lam**2) / np.cosh(lam * x) ** 2, _ONE2)],
            b_matrix=-lam * p.omega * SIGMA3,
            c_terms=[(lambda x: 1.0 / np.cosh(lam * x), cmat)],
            dc_terms=[(lambda x: -lam * np.tanh(lam * x) / np.cosh(lam * x), cmat)],
            constants={
                "alpha": 1.0,
                "nu": -(lam**2),
                "kappa": 0.0,
                "lam": 0.0,
                "omega": lam * p.omega,
            },
        )


class DualInverse(_Matrix2Kind):
    """W = (nu s3 - mu - 1)/x + omega s1 / (2(mu+1)); same potential as
    matrix2.inverse but shape invariant in mu."""

    name = "matrix2.dual-inverse"
    shift_field = "mu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega")

    def validate(self, p):
        if p.mu == -1.0:
            raise ParameterError("dual-inverse: mu = -1 is singular")
        if p.omega == 0.0:
            raise ParameterError("dual-inverse: omega must be nonzero")

    def terms(self, p):
        mat = p.nu * SIGMA3 - (p.mu + 1.0) * ID2
        return [
            (lambda x: 1.0 / x, mat),
            (lambda x: np.ones_like(x), p.omega / (2 * (p.mu + 1)) * SIGMA1),
        ]

    def dterms(self, p):
        mat = p.nu * SIGMA3 - (p.mu + 1.0) * ID2
        return [(lambda x: -1.0 / x**2, mat)]

    def factorization_constant(self, p):
        return -(p.omega**2) / (4.0 * (p.mu + 1.0) ** 2)

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")

    def pole_residue(self, p, side):
        if side != "lo":
            return None
        return p.nu * SIGMA3 - (p.mu + 1.0) * ID2

    def ground_gate(self, p):
        if p.nu >= 0.0:
            ok = p.nu - p.mu < 1.0
            msg = "requires nu - mu < 1 for nu >= 0"
        else:
            ok = p.nu + p.mu > 1.0
            msg = "requires nu + mu > 1 for nu < 0"
        ok = ok and p.omega > 0.0 and p.mu > -1.0
        return ok, "dual-window", msg + " (and omega > 0, mu > -1)"


class DualTan(_Matrix2Kind):
    """W = (lam/2)[(2mu+1) tan + (2nu-1) sec s3 + 4 omega s1/(2mu+1)];
    same potential as matrix2.tan but shape invariant in mu."""

    name = "matrix2.dual-tan"
    shift_field = "mu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega", "lam")

    def validate(self, p):
        if p.mu == -0.5:
            raise ParameterError("dual-tan: mu = -1/2 is singular")
        if p.lam <= 0.0:
            raise ParameterError("dual-tan: lam must be positive")

    def terms(self, p):
        lam = p.lam
        return [
            (lambda x: 0.5 * lam * (2 * p.mu + 1) * np.tan(lam * x), _ONE2),
            (lambda x: 0.5 * lam * (2 * p.nu - 1) * _sec(lam * x), SIGMA3),
            (lambda x: np.ones_like(x), 2.0 * lam * p.omega / (2 * p.mu + 1) * SIGMA1),
        ]

    def dterms(self, p):
        lam = p.lam
        return [
            (lambda x: 0.5 * lam**2 * (2 * p.mu + 1) * _sec(lam * x) ** 2, _ONE2),
            (
                lambda x: 0.5 * lam**2 * (2 * p.nu - 1) * _sec(lam * x) * np.tan(lam * x),
                SIGMA3,
            ),
        ]

    def factorization_constant(self, p):
        a = p.mu + 0.5
        return p.lam**2 * (a**2 - (p.omega / a) ** 2)

    def domain(self, p):
        half = 0.5 * math.pi / p.lam
        return DomainSpec(-half, half, "pole", "pole")

    def pole_residue(self, p, side):
        sign = 1.0 if side == "lo" else -1.0
        return -(p.mu + 0.5) * ID2 + sign * (p.nu - 0.5) * SIGMA3

    def ground_gate(self, p):
        return p.mu > -0.5, "dual-tan-binding", "requires mu > -1/2 (empirical)"


class DualCotanh(_Matrix2Kind):
    """W = (lam/2)[-(2mu+1) coth + (2nu-1) csch s3 - 4 omega s1/(2mu+1)];
    same potential as matrix2.cotanh but shape invariant in mu."""

    name = "matrix2.dual-cotanh"
    shift_field = "mu"
    shift_step = 1.0
    parameters = ("nu", "mu", "omega", "lam")

    def validate(self, p):
        if p.mu == -0.5:
            raise ParameterError("dual-cotanh: mu = -1/2 is singular")
        if p.lam <= 0.0:
            raise ParameterError("dual-cotanh: lam must be positive")

    def terms(self, p):
        lam = p.lam
        return [
            (lambda x: -0.5 * lam * (2 * p.mu + 1) / np.tanh(lam * x), _ONE2),
            (lambda x: 0.5 * lam * (2 * p.nu - 1) * _csch(lam * x), SIGMA3),
            (lambda x: np.ones_like(x), -2.0 * lam * p.omega / (2 * p.mu + 1) * SIGMA1),
        ]

    def dterms(self, p):
        lam = p.lam
        return [
            (lambda x: 0.5 * lam**2 * (2 * p.mu + 1) * _csch(lam * x) ** 2, _ONE2),
            (
                lambda x: -0.5
                * lam**2
                * (2 * p.nu - 1)
                * _csch(lam * x)
                / np.tanh(lam * x),
                SIGMA3,
            ),
        ]

    def factorization_constant(self, p):
        a = p.mu + 0.5
        return -(p.lam**2) * (a**2 + (p.omega / a) ** 2)

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")

    def pole_residue(self, p, side):
        if side != "lo":
            return None
        return -(p.mu + 0.5) * ID2 + (p.nu - 0.5) * SIGMA3

    def ground_gate(self, p):
        ok = (p.mu + 0.5) ** 2 < abs(p.omega)
        return ok, "dual-cotanh-binding", "requires (mu+1/2)^2 < |omega| (empirical)"


MATRIX2_KINDS = {
    k.name: k
    for k in (
        Inverse(),
        Exp(),
        Tan(),
        Cotanh(),
        Tanh(),
        DualInverse(),
        DualTan(),
        DualCotanh(),
    )
}

# map from a primary family to its alternative factorization (if any)
DUAL_PARTNERS = {
    "matrix2.inverse": "matrix2.dual-inverse",
    "matrix2.tan": "matrix2.dual-tan",
    "matrix2.cotanh": "matrix2.dual-cotanh",
}
