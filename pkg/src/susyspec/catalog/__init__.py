"""Catalog of shape-invariant superpotentials (scalar, 2x2 and 3x3)."""

from __future__ import annotations

from .base import (
    DomainSpec,
    SPDecomposition,
    SuperpotentialInstance,
    SuperpotentialKind,
    classification_residual,
    decomposition_residuals,
    shape_invariance_residual,
    shift,
)
from .matrices import spin_one_matrices
from .matrix2 import DUAL_PARTNERS, MATRIX2_KINDS
from .matrix3 import MATRIX3_KINDS, HermiticityDomain, hermiticity_domain
from .nondiag import NONDIAG_KINDS
from .params import ParamSet, ParameterError
from .scalar import SCALAR_KINDS

ALL_KINDS: dict[str, SuperpotentialKind] = {
    **SCALAR_KINDS,
    **MATRIX2_KINDS,
    **NONDIAG_KINDS,
    **MATRIX3_KINDS,
}

# numbered aliases for the matrix potential families
KIND_ALIASES = {
    "matrix2.pot1": "matrix2.inverse",
    "matrix2.pot2": "matrix2.exp",
    "matrix2.pot3": "matrix2.tan",
    "matrix2.pot4": "matrix2.tanh",
    "matrix2.pot5": "matrix2.cotanh",
}


def get_kind(name: str) -> SuperpotentialKind:
    key = KIND_ALIASES.get(name, name)
    try:
        return ALL_KINDS[key]
    except KeyError:
        raise KeyError(
            f"unknown superpotential kind {name!r}; see `susyspec catalog`"
        ) from None


def instance(name: str, params: ParamSet | None = None, **kw) -> SuperpotentialInstance:
    """Convenience constructor: instance('matrix2.inverse', nu=1, mu=0)."""
    p = params if params is not None else ParamSet(**kw)
    return SuperpotentialInstance(get_kind(name), p)


# representative admissible parameter sets, used by the catalog dump and
# the verification suite
DEFAULT_PARAMS = {
        "scalar.coulomb": ParamSet(kappa=1.0, omega=1.0),
        "scalar.rosen1": ParamSet(kappa=1.0, omega=1.0),
        "scalar.rosen2": ParamSet(kappa=2.0, omega=1.0),
        "scalar.eckart": ParamSet(kappa=1.0, omega=4.0),
        "scalar.harmonic": ParamSet(mu=1.0),
        "scalar.osc3d": ParamSet(kappa=1.0, mu=1.0),
        "scalar.scarf1": ParamSet(kappa=1.0, mu=0.5),
        "scalar.scarf2": ParamSet(kappa=2.0, mu=0.5),
        "scalar.genpt": ParamSet(kappa=1.0, mu=-2.5),
        "scalar.morse": ParamSet(kappa=2.0, mu=1.0),
        "matrix2.inverse": ParamSet(nu=1.0, mu=0.0, omega=1.0),
        "matrix2.exp": ParamSet(nu=-2.0, mu=1.0, omega=1.0),
        "matrix2.tan": ParamSet(nu=1.0, mu=0.5, omega=1.0),
        "matrix2.cotanh": ParamSet(nu=-3.0, mu=0.5, omega=1.0),
        "matrix2.tanh": ParamSet(nu=-3.0, mu=0.5, omega=1.0),
        "matrix2.dual-inverse": ParamSet(nu=0.5, mu=1.0, omega=1.0),
        "matrix2.dual-tan": ParamSet(nu=1.0, mu=0.5, omega=1.0),
        "matrix2.dual-cotanh": ParamSet(nu=1.0, mu=0.5, omega=4.0),
}

NONDIAG_DEFAULT = ParamSet(kappa=1.0, mu=0.5, lam=1.0, c=0.5, omega=1.0, r2=0.6, r3=0.8)
SPIN1_DEFAULT = ParamSet(kappa=1.0, omega=1.0, c1=-1.0, c2=-2.0, mu1=1.0, mu2=1.0, mu3=1.0)


def default_params(name: str) -> ParamSet:
    key = KIND_ALIASES.get(name, name)
    if key in DEFAULT_PARAMS:
        return DEFAULT_PARAMS[key]
    if key.startswith("nondiag."):
        return NONDIAG_DEFAULT
    return SPIN1_DEFAULT


def catalog_dump() -> list[dict]:
    """Machine-readable catalog listing for the CLI."""
    fc_formulas = {
        "scalar.coulomb": "-(omega/kappa)^2",
        "scalar.rosen1": "(lam kappa)^2 - (omega/kappa)^2",
        "scalar.rosen2": "-(lam kappa)^2 - (omega/kappa)^2",
        "scalar.eckart": "-(lam kappa)^2 - (omega/kappa)^2",
        "scalar.harmonic": "mu",
        "scalar.osc3d": "(4 kappa - 1) mu",
        "scalar.scarf1": "(lam kappa)^2",
        "scalar.scarf2": "-(lam kappa)^2",
        "scalar.genpt": "-(lam kappa)^2",
        "scalar.morse": "-kappa^2",
        "matrix2.inverse": "-omega^2/(2 nu + 1)^2",
        "matrix2.exp": "-lam^2 (nu^2 + omega^2/nu^2)",
        "matrix2.tan": "lam^2 (nu^2 - omega^2/nu^2)",
        "matrix2.cotanh": "-lam^2 (nu^2 + omega^2/nu^2)",
        "matrix2.tanh": "-lam^2 (nu^2 + omega^2/nu^2)",
        "matrix2.dual-inverse": "-omega^2/(2(mu+1))^2",
        "matrix2.dual-tan": "lam^2 ((mu+1/2)^2 - omega^2/(mu+1/2)^2)",
        "matrix2.dual-cotanh": "-lam^2 ((mu+1/2)^2 + omega^2/(mu+1/2)^2)",
    }
    rows = []
    for name, kind in sorted(ALL_KINDS.items()):
        p = default_params(name)
        row = {
            "name": name,
            "dimension": kind.dim,
            "parameters": list(kind.parameters),
            "shift": {"field": kind.shift_field, "step": kind.shift_step},
        }
        try:
            dom = kind.domain(p)
            row["domain"] = [dom.lo, dom.hi]
        except ParameterError:
            row["domain"] = None
        row["factorization_constant"] = fc_formulas.get(name)
        if hasattr(kind, "ground_gate"):
            try:
                _, gate_name, gate_msg = kind.ground_gate(p)
                row["ground_state_gate"] = {"name": gate_name, "condition": gate_msg}
            except NotImplementedError:
                row["ground_state_gate"] = None
        else:
            row["ground_state_gate"] = None
        rows.append(row)
    aliases = [{"alias": a, "name": n} for a, n in sorted(KIND_ALIASES.items())]
    return rows + [{"aliases": aliases}]


__all__ = [
    "ALL_KINDS",
    "DUAL_PARTNERS",
    "DomainSpec",
    "HermiticityDomain",
    "KIND_ALIASES",
    "MATRIX2_KINDS",
    "MATRIX3_KINDS",
    "NONDIAG_KINDS",
    "ParamSet",
    "ParameterError",
    "SCALAR_KINDS",
    "SPDecomposition",
    "SuperpotentialInstance",
    "SuperpotentialKind",
    "catalog_dump",
    "DEFAULT_PARAMS",
    "default_params",
    "classification_residual",
    "decomposition_residuals",
    "get_kind",
    "hermiticity_domain",
    "instance",
    "shape_invariance_residual",
    "shift",
    "spin_one_matrices",
]
