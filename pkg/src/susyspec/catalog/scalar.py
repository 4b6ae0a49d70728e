"""The ten shape-invariant scalar superpotentials.

Each entry records W, its analytic derivative, the raising shift, and the
factorization constant fc chosen so H = a+ a- + fc equals -d^2 + V with
the family potential V listed in the class docstring, and so that the
shape-invariance recurrence fc(T p) - fc(p) = V+(p) - V-(T p) holds
identically.  For the tangent-type entries the shift raises kappa; for
the tanh/coth/exp-type entries the raising direction is kappa -> kappa-1
(the partner matches the family at the lowered index).
"""

from __future__ import annotations

import math

import numpy as np

from .base import DomainSpec, SuperpotentialKind
from .params import ParamSet, ParameterError

__all__ = ["SCALAR_KINDS"]

_ONE = np.ones((1, 1))


def _sec(z):
    return 1.0 / np.cos(z)


def _csch(z):
    return 1.0 / np.sinh(z)


class _ScalarKind(SuperpotentialKind):
    dim = 1

    def ground_gate(self, p: ParamSet):
        """(ok, name, message) for normalizability of exp(-int W)."""
        raise NotImplementedError


class Coulomb(_ScalarKind):
    """W = -kappa/x + omega/kappa; V = kappa(kappa-1)/x^2 - 2 omega/x."""

    name = "scalar.coulomb"
    shift_field = "kappa"
    shift_step = 1.0
    parameters = ("kappa", "omega")

    def validate(self, p):
        if p.kappa == 0.0:
            raise ParameterError("coulomb: kappa must be nonzero")

    def terms(self, p):
        return [(lambda x: -p.kappa / x + p.omega / p.kappa, _ONE)]

    def dterms(self, p):
        return [(lambda x: p.kappa / x**2, _ONE)]

    def factorization_constant(self, p):
        return -(p.omega / p.kappa) ** 2

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")

    def pole_residue(self, p, side):
        return -p.kappa * _ONE if side == "lo" else None

    def ground_gate(self, p):
        ok = p.kappa > 0.0 and p.omega > 0.0
        return ok, "coulomb-binding", "requires kappa > 0 and omega > 0"


class RosenMorseTrig(_ScalarKind):
    """W = lam kappa tan(lam x) + omega/kappa;
    V = lam^2 kappa(kappa-1) sec^2(lam x) + 2 omega lam tan(lam x)."""

    name = "scalar.rosen1"
    shift_field = "kappa"
    shift_step = 1.0
    parameters = ("kappa", "omega", "lam")

    def validate(self, p):
        if p.lam <= 0.0:
            raise ParameterError("rosen1: lam must be positive")
        if p.kappa == 0.0:
            raise ParameterError("rosen1: kappa must be nonzero")

    def terms(self, p):
        return [(lambda x: p.lam * p.kappa * np.tan(p.lam * x) + p.omega / p.kappa, _ONE)]

    def dterms(self, p):
        return [(lambda x: p.lam**2 * p.kappa * _sec(p.lam * x) ** 2, _ONE)]

    def factorization_constant(self, p):
        return (p.lam * p.kappa) ** 2 - (p.omega / p.kappa) ** 2

    def domain(self, p):
        half = 0.5 * math.pi / p.lam
        return DomainSpec(-half, half, "pole", "pole")

    def pole_residue(self, p, side):
        return -p.kappa * _ONE

    def ground_gate(self, p):
        return p.kappa > 0.0, "trig-binding", "requires kappa > 0"


class RosenMorseHyp(_ScalarKind):
    """W = lam kappa tanh(lam x) + omega/kappa (raising shift kappa -> kappa-1);
    V = -lam^2 kappa(kappa+1) sech^2(lam x) + 2 omega lam tanh(lam x)."""

    name = "scalar.rosen2"
    shift_field = "kappa"
    shift_step = -1.0
    parameters = ("kappa", "omega", "lam")

    def validate(self, p):
        if p.lam <= 0.0:
            raise ParameterError("rosen2: lam must be positive")
        if p.kappa == 0.0:
            raise ParameterError("rosen2: kappa must be nonzero")

    def terms(self, p):
        return [(lambda x: p.lam * p.kappa * np.tanh(p.lam * x) + p.omega / p.kappa, _ONE)]

    def dterms(self, p):
        return [(lambda x: p.lam**2 * p.kappa / np.cosh(p.lam * x) ** 2, _ONE)]

    def factorization_constant(self, p):
        return -((p.lam * p.kappa) ** 2) - (p.omega / p.kappa) ** 2

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "const", "const")

    def ground_gate(self, p):
        ok = p.kappa > 0.0 and abs(p.omega) < p.lam * p.kappa**2
        return ok, "rosen2-binding", "requires kappa > 0 and |omega| < lam kappa^2"


class Eckart(_ScalarKind):
    """W = -lam kappa coth(lam x) + omega/kappa;
    V = lam^2 kappa(kappa-1) csch^2(lam x) - 2 omega lam coth(lam x)."""

    name = "scalar.eckart"
    shift_field = "kappa"
    shift_step = 1.0
    parameters = ("kappa", "omega", "lam")

    def validate(self, p):
        if p.lam <= 0.0:
            raise ParameterError("eckart: lam must be positive")
        if p.kappa == 0.0:
            raise ParameterError("eckart: kappa must be nonzero")

    def terms(self, p):
        return [
            (lambda x: -p.lam * p.kappa / np.tanh(p.lam * x) + p.omega / p.kappa, _ONE)
        ]

    def dterms(self, p):
        return [(lambda x: p.lam**2 * p.kappa * _csch(p.lam * x) ** 2, _ONE)]

    def factorization_constant(self, p):
        return -((p.lam * p.kappa) ** 2) - (p.omega / p.kappa) ** 2

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")

    def pole_residue(self, p, side):
        return -p.kappa * _ONE if side == "lo" else None

    def ground_gate(self, p):
        ok = p.kappa > 0.0 and p.omega > p.lam * p.kappa**2
        return ok, "eckart-binding", "requires kappa > 0 and omega > lam kappa^2"


class HarmonicOsc(_ScalarKind):
    """W = mu x; V = mu^2 x^2.  No shifting parameter; spacing 2 mu."""

    name = "scalar.harmonic"
    shift_field = None
    parameters = ("mu",)

    def validate(self, p):
        if p.mu == 0.0:
            raise ParameterError("harmonic: mu must be nonzero")

    def terms(self, p):
        return [(lambda x: p.mu * x, _ONE)]

    def dterms(self, p):
        return [(lambda x: p.mu * np.ones_like(x), _ONE)]

    def factorization_constant(self, p):
        return p.mu

    def shape_constant(self, p):
        return 2.0 * p.mu

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "divergent", "divergent")

    def ground_gate(self, p):
        return p.mu > 0.0, "oscillator-binding", "requires mu > 0"


class Osc3D(_ScalarKind):
    """W = mu x - kappa/x; V = mu^2 x^2 + kappa(kappa-1)/x^2 + 2(kappa-1) mu.

    The additive 2(kappa-1) mu term (zero at kappa = 1) is the price of an
    exact shift recurrence: the level spacing of the radial oscillator is
    4 mu while the bare W^2 -/+ W' constants step by 2 mu.
    """

    name = "scalar.osc3d"
    shift_field = "kappa"
    shift_step = 1.0
    parameters = ("kappa", "mu")

    def validate(self, p):
        if p.mu == 0.0:
            raise ParameterError("osc3d: mu must be nonzero")

    def terms(self, p):
        return [(lambda x: p.mu * x - p.kappa / x, _ONE)]

    def dterms(self, p):
        return [(lambda x: p.mu + p.kappa / x**2, _ONE)]

    def factorization_constant(self, p):
        return (4.0 * p.kappa - 1.0) * p.mu

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "divergent")

    def pole_residue(self, p, side):
        return -p.kappa * _ONE if side == "lo" else None

    def ground_gate(self, p):
        ok = p.kappa > 0.0 and p.mu > 0.0
        return ok, "osc3d-binding", "requires kappa > 0 and mu > 0"


class ScarfTrig(_ScalarKind):
    """W = lam kappa tan(lam x) + lam mu sec(lam x);
    V = lam^2 [ (kappa(kappa-1)+mu^2) sec^2 + mu(2 kappa - 1) sec tan ]."""

    name = "scalar.scarf1"
    shift_field = "kappa"
    shift_step = 1.0
    parameters = ("kappa", "mu", "lam")

    def validate(self, p):
        if p.lam <= 0.0:
            raise ParameterError("scarf1: lam must be positive")

    def terms(self, p):
        return [
            (
                lambda x: p.lam * (p.kappa * np.tan(p.lam * x) + p.mu * _sec(p.lam * x)),
                _ONE,
            )
        ]

    def dterms(self, p):
        return [
            (
                lambda x: p.lam**2
                * _sec(p.lam * x)
                * (p.kappa * _sec(p.lam * x) + p.mu * np.tan(p.lam * x)),
                _ONE,
            )
        ]

    def factorization_constant(self, p):
        return (p.lam * p.kappa) ** 2

    def domain(self, p):
        half = 0.5 * math.pi / p.lam
        return DomainSpec(-half, half, "pole", "pole")

    def pole_residue(self, p, side):
        r = -p.kappa + (p.mu if side == "lo" else -p.mu)
        return r * _ONE

    def ground_gate(self, p):
        return p.kappa > abs(p.mu), "scarf1-binding", "requires kappa > |mu|"


class ScarfHyp(_ScalarKind):
    """W = lam kappa tanh(lam x) + lam mu sech(lam x) (shift kappa -> kappa-1);
    V = lam^2 [ (mu^2 - kappa(kappa+1)) sech^2 + mu(2 kappa + 1) sech tanh ]."""

    name = "scalar.scarf2"
    shift_field = "kappa"
    shift_step = -1.0
    parameters = ("kappa", "mu", "lam")

    def validate(self, p):
        if p.lam <= 0.0:
            raise ParameterError("scarf2: lam must be positive")

    def terms(self, p):
        return [
            (
                lambda x: p.lam
                * (p.kappa * np.tanh(p.lam * x) + p.mu / np.cosh(p.lam * x)),
                _ONE,
            )
        ]

    def dterms(self, p):
        return [
            (
                lambda x: p.lam**2
                / np.cosh(p.lam * x)
                * (p.kappa / np.cosh(p.lam * x) - p.mu * np.tanh(p.lam * x)),
                _ONE,
            )
        ]

    def factorization_constant(self, p):
        return -((p.lam * p.kappa) ** 2)

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "const", "const")

    def ground_gate(self, p):
        return p.kappa > 0.0, "scarf2-binding", "requires kappa > 0"


class GenPoschlTeller(_ScalarKind):
    """W = lam kappa coth(lam x) + lam mu csch(lam x) (shift kappa -> kappa-1);
    V = lam^2 [ (kappa(kappa+1)+mu^2) csch^2 + mu(2 kappa + 1) coth csch ]."""

    name = "scalar.genpt"
    shift_field = "kappa"
    shift_step = -1.0
    parameters = ("kappa", "mu", "lam")

    def validate(self, p):
        if p.lam <= 0.0:
            raise ParameterError("genpt: lam must be positive")

    def terms(self, p):
        return [
            (
                lambda x: p.lam
                * (p.kappa / np.tanh(p.lam * x) + p.mu * _csch(p.lam * x)),
                _ONE,
            )
        ]

    def dterms(self, p):
        return [
            (
                lambda x: -p.lam**2
                * _csch(p.lam * x)
                * (p.kappa * _csch(p.lam * x) + p.mu / np.tanh(p.lam * x)),
                _ONE,
            )
        ]

    def factorization_constant(self, p):
        return -((p.lam * p.kappa) ** 2)

    def domain(self, p):
        return DomainSpec(0.0, math.inf, "pole", "const")

    def pole_residue(self, p, side):
        return (p.kappa + p.mu) * _ONE if side == "lo" else None

    def ground_gate(self, p):
        ok = p.kappa > 0.0 and p.kappa + p.mu < 0.0
        return ok, "genpt-binding", "requires kappa > 0 and mu < -kappa"


class Morse(_ScalarKind):
    """W = kappa - mu exp(-x) (shift kappa -> kappa-1);
    V = mu^2 exp(-2x) - mu(2 kappa + 1) exp(-x)."""

    name = "scalar.morse"
    shift_field = "kappa"
    shift_step = -1.0
    parameters = ("kappa", "mu")

    def terms(self, p):
        return [(lambda x: p.kappa - p.mu * np.exp(-x), _ONE)]

    def dterms(self, p):
        return [(lambda x: p.mu * np.exp(-x), _ONE)]

    def factorization_constant(self, p):
        return -(p.kappa**2)

    def domain(self, p):
        return DomainSpec(-math.inf, math.inf, "divergent", "const")

    def ground_gate(self, p):
        ok = p.kappa > 0.0 and p.mu > 0.0
        return ok, "morse-binding", "requires kappa > 0 and mu > 0"


SCALAR_KINDS = {
    k.name: k
    for k in (
        Coulomb(),
        RosenMorseTrig(),
        RosenMorseHyp(),
        Eckart(),
        HarmonicOsc(),
        Osc3D(),
        ScarfTrig(),
        ScarfHyp(),
        GenPoschlTeller(),
        Morse(),
    )
}
