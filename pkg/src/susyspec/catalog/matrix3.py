"""Irreducible 3x3 superpotentials built from the spin-1 matrices.

Seven entries, catalogued for evaluation and hermiticity analysis.  Each
is a combination of (S_a^2 - 1)/(x + c_i) projector terms, S_a-coupled
inverse-square-root radicals, and constant pieces.  Hermiticity restricts
the parameters: the radical couplings demand x > 0, and any c_i entering
a radical must be negative (the admissible interval then starts at |c_i|
where the radicand turns positive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .base import DomainSpec, SuperpotentialKind
from .matrices import ID3, SPIN1_S1, SPIN1_S2, SPIN1_S3
from .params import ParamSet, ParameterError

__all__ = ["MATRIX3_KINDS", "HermiticityDomain", "hermiticity_domain"]

_P1 = (SPIN1_S1 @ SPIN1_S1 - ID3).real  # S1^2 - 1
_P2 = (SPIN1_S2 @ SPIN1_S2 - ID3).real
_P3 = (SPIN1_S3 @ SPIN1_S3 - ID3).real
_Z3 = (2.0 * SPIN1_S3 @ SPIN1_S3 - ID3).real  # 2 S3^2 - 1


def _inv(shift):
    return lambda x: 1.0 / (x + shift)


def _dinv(shift):
    return lambda x: -1.0 / (x + shift) ** 2


def _invsqrt1(shift):
    # (x (x+shift))^(-1/2) when shift != 0, else 1/x ... handled separately
    return lambda x: 1.0 / np.sqrt(x * (x + shift))


def _dinvsqrt1(shift):
    return lambda x: -(2.0 * x + shift) / (2.0 * (x * (x + shift)) ** 1.5)


def _invsqrt_pair(s1, s2):
    return lambda x: 1.0 / np.sqrt((x + s1) * (x + s2))


def _dinvsqrt_pair(s1, s2):
    return lambda x: -(2.0 * x + s1 + s2) / (2.0 * ((x + s1) * (x + s2)) ** 1.5)


def _invsqrt0():
    return lambda x: 1.0 / np.sqrt(x)


def _dinvsqrt0():
    return lambda x: -0.5 * x ** (-1.5)


class _Spin1Kind(SuperpotentialKind):
    dim = 3
    parameters = ("kappa", "omega", "c", "c1", "c2", "mu1", "mu2", "mu3")
    # (projector, shift-field) pairs and radical descriptors per entry
    #   radical entries: (spin matrix index 1..3, mu field, kind, shifts)
    projector_shifts: tuple = ()
    radicals: tuple = ()
    has_omega_term = True
    has_linear_c = False

    def _radical_funcs(self, p, which, shifts):
        if which == "pair0":  # sqrt(x (x+c))
            return _invsqrt1(shifts[0]), _dinvsqrt1(shifts[0])
        if which == "pair":  # sqrt((x+a)(x+b))
            return _invsqrt_pair(*shifts), _dinvsqrt_pair(*shifts)
        if which == "single":  # sqrt(x + a); a may be 0
            a = shifts[0]
            if a == 0.0:
                return _invsqrt0(), _dinvsqrt0()
            return (
                lambda x: 1.0 / np.sqrt(x + a),
                lambda x: -0.5 * (x + a) ** (-1.5),
            )
        raise ValueError(which)

    def terms(self, p):
        spin = (SPIN1_S1, SPIN1_S2, SPIN1_S3)
        out = []
        for proj, field in self.projector_shifts:
            shift = getattr(p, field) if field else 0.0
            out.append((_inv(shift), p.kappa * proj))
        for idx, mu_field, which, shift_fields in self.radicals:
            shifts = tuple(getattr(p, f) if f else 0.0 for f in shift_fields)
            g, _ = self._radical_funcs(p, which, shifts)
            out.append((g, getattr(p, mu_field) * spin[idx - 1]))
        if self.has_omega_term:
            out.append((lambda x: np.ones_like(x), p.omega / p.kappa * _Z3))
        if self.has_linear_c:
            out.append((lambda x: np.ones_like(x), p.c * SPIN1_S1))
        return out

    def dterms(self, p):
        spin = (SPIN1_S1, SPIN1_S2, SPIN1_S3)
        out = []
        for proj, field in self.projector_shifts:
            shift = getattr(p, field) if field else 0.0
            out.append((_dinv(shift), p.kappa * proj))
        for idx, mu_field, which, shift_fields in self.radicals:
            shifts = tuple(getattr(p, f) if f else 0.0 for f in shift_fields)
            _, dg = self._radical_funcs(p, which, shifts)
            out.append((dg, getattr(p, mu_field) * spin[idx - 1]))
        return out

    def validate(self, p):
        if self.has_omega_term and p.kappa == 0.0:
            raise ParameterError(f"{self.name}: kappa must be nonzero")
        dom = hermiticity_domain(self, p)
        if not dom.accepted:
            raise ParameterError(f"{self.name}: {dom.reason}")

    def domain(self, p):
        dom = hermiticity_domain(self, p)
        return DomainSpec(dom.x_min, math.inf, "pole", "const")

    def used_constants(self, p):
        """(c_field, mu_nonzero) pairs for the hermiticity rule."""
        out = []
        for idx, mu_field, which, shift_fields in self.radicals:
            mu_val = getattr(p, mu_field)
            for f in shift_fields:
                if f:
                    out.append((f, mu_val))
        return out


class M1(_Spin1Kind):
    """(S1^2-1)k/(x+c1) + (S2^2-1)k/(x+c2) + (S3^2-1)k/x
    + S1 mu1/sqrt(x(x+c1)) + S2 mu2/sqrt(x(x+c2)) + (omega/k)(2S3^2-1)."""

    name = "matrix3.m1"
    projector_shifts = ((_P1, "c1"), (_P2, "c2"), (_P3, None))
    radicals = ((1, "mu1", "pair0", ("c1",)), (2, "mu2", "pair0", ("c2",)))


class M2(_Spin1Kind):
    """(S1^2-1)k/x + (S2^2-1)k/(x+c1) + S1 mu2/sqrt(x) + S2 mu1/sqrt(x+c1)
    + (omega/k)(2S3^2-1)."""

    name = "matrix3.m2"
    projector_shifts = ((_P1, None), (_P2, "c1"))
    radicals = ((1, "mu2", "single", (None,)), (2, "mu1", "single", ("c1",)))


class M3(_Spin1Kind):
    """(S1^2-1)k/(x+c1) + (S3^2-1)k/x + S1 mu2/sqrt(x) + S3 mu1/sqrt(x(x+c1))
    + (omega/k)(2S3^2-1)."""

    name = "matrix3.m3"
    projector_shifts = ((_P1, "c1"), (_P3, None))
    radicals = ((1, "mu2", "single", (None,)), (3, "mu1", "pair0", ("c1",)))


class M4(_Spin1Kind):
    """(S1^2-1)k/x + c S1 + S2 mu1/sqrt(x) + (omega/k)(2S3^2-1)."""

    name = "matrix3.m4"
    projector_shifts = ((_P1, None),)
    radicals = ((2, "mu1", "single", (None,)),)
    has_linear_c = True


class M5(_Spin1Kind):
    """(S1^2-1)k/(x+c1) + (S2^2-1)k/(x+c2) + (S3^2-1)k/x
    + S1 mu1/sqrt(x(x+c1)) + S2 mu2/sqrt(x(x+c2)) + S3 mu3/sqrt((x+c1)(x+c2))."""

    name = "matrix3.m5"
    projector_shifts = ((_P1, "c1"), (_P2, "c2"), (_P3, None))
    radicals = (
        (1, "mu1", "pair0", ("c1",)),
        (2, "mu2", "pair0", ("c2",)),
        (3, "mu3", "pair", ("c1", "c2")),
    )
    has_omega_term = False


class M6(_Spin1Kind):
    """(S1^2-1)k/x + (S2^2-1)k/(x+c2) + S1 mu1/sqrt(x) + S2 mu2/sqrt(x+c2)
    + S3 mu3/sqrt(x(x+c2))."""

    name = "matrix3.m6"
    projector_shifts = ((_P1, None), (_P2, "c2"))
    radicals = (
        (1, "mu1", "single", (None,)),
        (2, "mu2", "single", ("c2",)),
        (3, "mu3", "pair0", ("c2",)),
    )
    has_omega_term = False


class M7(_Spin1Kind):
    """(S1^2-1)k/x + c S1 + S3 mu1/sqrt(x) + S2 mu2/sqrt(x)."""

    name = "matrix3.m7"
    projector_shifts = ((_P1, None),)
    radicals = ((3, "mu1", "single", (None,)), (2, "mu2", "single", (None,)))
    has_omega_term = False
    has_linear_c = True


MATRIX3_KINDS = {k.name: k for k in (M1(), M2(), M3(), M4(), M5(), M6(), M7())}


@dataclass(frozen=True)
class HermiticityDomain:
    """Outcome of the hermiticity analysis; rejection is a value."""

    accepted: bool
    requires_positive_x: bool
    x_min: float
    reason: str = ""


def hermiticity_domain(kind: _Spin1Kind, params: ParamSet) -> HermiticityDomain:
    """Admissible x-interval of a spin-1 entry, or a rejection.

    Rule: any radical coupling (mu_i != 0) forces x > 0, and every shift
    constant c_i appearing under such a radical must be negative; the
    interval then starts where all radicands are positive.
    """
    uses = kind.used_constants(params)
    mu_active = any(
        getattr(params, mu_field) != 0.0
        for _, mu_field, _, _ in kind.radicals
    )
    x_min = 0.0
    for c_field, mu_val in uses:
        c_val = getattr(params, c_field)
        if mu_val != 0.0:
            if c_val >= 0.0:
                return HermiticityDomain(
                    accepted=False,
                    requires_positive_x=True,
                    x_min=math.nan,
                    reason=f"{c_field} must be negative when its radical coupling is nonzero",
                )
            x_min = max(x_min, -c_val)
    # projector poles restrict the interval regardless of the radicals
    for _, field in kind.projector_shifts:
        if field:
            x_min = max(x_min, -getattr(params, field))
    return HermiticityDomain(
        accepted=True,
        requires_positive_x=mu_active,
        x_min=x_min,
        reason="",
    )
