"""Superpotential catalog: evaluation, partners, shifts, residual checks."""

import math

import numpy as np
import pytest

from susyspec.catalog import (
    ALL_KINDS,
    MATRIX2_KINDS,
    MATRIX3_KINDS,
    NONDIAG_KINDS,
    SCALAR_KINDS,
    ParamSet,
    ParameterError,
    SuperpotentialInstance,
    decomposition_residuals,
    default_params,
    get_kind,
    hermiticity_domain,
    instance,
    shape_invariance_residual,
    spin_one_matrices,
)
from susyspec.catalog.matrices import SIGMA1, SIGMA3
from susyspec.models import ps_superpotential
from susyspec.numkit import Grid

RESIDUAL_PARAMS = ParamSet(nu=1.3, mu=0.4, omega=1.7, lam=1.0, kappa=2.2)


def residual_grid_for(kind, params, m=200):
    dom = kind.domain(params)
    if math.isfinite(dom.lo) and math.isfinite(dom.hi):
        span = dom.hi - dom.lo
        return Grid(dom.lo + 0.07 * span, 0.86 * span / (m - 1), m)
    if math.isfinite(dom.lo):
        return Grid(dom.lo + 0.1, 19.9 / (m - 1), m)
    return Grid(-5.0, 10.0 / (m - 1), m)


class TestEvaluate:
    def test_harmonic_linear(self):
        w = instance("scalar.harmonic", mu=1.0)
        assert w.evaluate(2.0)[0, 0] == pytest.approx(2.0)

    def test_inverse_matrix_value(self):
        w = instance("matrix2.inverse", nu=1.0, mu=0.0, omega=1.0)
        expected = 0.5 * SIGMA3 - 1.5 * np.eye(2) + SIGMA1 / 3.0
        assert np.allclose(w.evaluate(1.0), expected, atol=1e-15)

    def test_wire_problem_reduction(self):
        # at mu = 0, omega = 1 the inverse family reproduces the wire
        # problem's superpotential in the sigma3-conjugated sign frame
        for kappa in (1.0, 2.0, 3.0):
            w = instance("matrix2.inverse", nu=kappa, mu=0.0, omega=1.0)
            x = np.linspace(0.3, 9.0, 40)
            ours = w.evaluate(x)
            frame = np.einsum("ab,jbc,cd->jad", SIGMA3, ours, SIGMA3)
            assert np.allclose(frame, ps_superpotential(kappa, x), atol=1e-14)

    def test_pole_guard(self):
        w = instance("matrix2.inverse", nu=1.0, mu=0.0, omega=1.0)
        with pytest.raises(ValueError):
            w.evaluate(0.0)
        with pytest.raises(ValueError):
            w.evaluate(-1.0)

    def test_hermiticity_all_kinds(self):
        for name, kind in ALL_KINDS.items():
            p = default_params(name)
            w = SuperpotentialInstance(kind, p)
            grid = residual_grid_for(kind, p, m=60)
            vals = w.evaluate(grid.nodes)
            herm = np.max(np.abs(vals - np.conj(np.swapaxes(vals, -1, -2))))
            assert herm == 0.0, name


class TestPairPotentials:
    def test_linear_superpotential(self):
        w = instance("scalar.harmonic", mu=1.0)
        vm, vp = w.pair_potentials(2.0)
        assert vm[0, 0] == pytest.approx(3.0)
        assert vp[0, 0] == pytest.approx(5.0)

    def test_inverse_family_expansion(self):
        # W^2 - W' expands to the family potential plus omega^2/(2nu+1)^2
        nu, mu, om = 1.0, 0.0, 1.0
        w = instance("matrix2.inverse", nu=nu, mu=mu, omega=om)
        x = np.linspace(0.3, 8.0, 60)
        vm, _ = w.pair_potentials(x)
        pot = (
            (mu * (mu + 1) + nu**2) * np.eye(2) / x[:, None, None] ** 2
            - nu * (2 * mu + 1) * SIGMA3 / x[:, None, None] ** 2
            - om * SIGMA1 / x[:, None, None]
        )
        shift = om**2 / (2 * nu + 1) ** 2
        assert np.max(np.abs(vm - pot - shift * np.eye(2))) < 1e-12
        assert np.max(np.abs(w.potential(x) - pot)) < 1e-12

    def test_zero_superpotential_limit(self):
        # mu -> 0 kills both V- and V+ for the pure-oscillator entry
        w = instance("scalar.harmonic", mu=1e-30)
        vm, vp = w.pair_potentials(1.0)
        assert abs(vm[0, 0]) < 1e-29 and abs(vp[0, 0]) < 1e-29


class TestShift:
    def test_single(self):
        w = instance("matrix2.inverse", nu=1.0, mu=0.25, omega=1.0)
        assert w.shifted().params.nu == 2.0
        assert w.shifted().shift_count == 1

    def test_dual_shifts_mu(self):
        w = instance("matrix2.dual-inverse", nu=0.5, mu=0.0, omega=1.0)
        assert w.shifted().params.mu == 1.0

    def test_composition(self):
        w = instance("scalar.coulomb", kappa=1.0, omega=1.0)
        assert w.shifted(2).params.kappa == 3.0


class TestShapeInvariance:
    @pytest.mark.parametrize("name", sorted(SCALAR_KINDS) + sorted(MATRIX2_KINDS))
    def test_residual_small(self, name):
        kind = get_kind(name)
        grid = residual_grid_for(kind, RESIDUAL_PARAMS)
        resid = shape_invariance_residual(kind, RESIDUAL_PARAMS, grid)
        assert resid <= 1e-10, (name, resid)

    def test_harmonic_constant(self):
        kind = get_kind("scalar.harmonic")
        assert kind.shape_constant(ParamSet(mu=1.5)) == pytest.approx(3.0)

    def test_corrupted_entry_detected(self):
        # perturb omega only on the shifted side: the residual must see it
        kind = get_kind("matrix2.inverse")
        p = ParamSet(nu=1.0, mu=0.0, omega=1.0)
        grid = residual_grid_for(kind, p)
        w = SuperpotentialInstance(kind, p)
        _, vplus = w.pair_potentials(grid.nodes)
        c = kind.shape_constant(p) * np.eye(2)

        def residual_for(eps):
            partner = SuperpotentialInstance(kind, p.replace(omega=1.0 + eps)).shifted()
            vminus, _ = partner.pair_potentials(grid.nodes)
            return np.max(np.abs(vplus - vminus - c))

        r1 = residual_for(1e-4)
        assert 1e-4 / 2 <= r1 <= 1e-4 * 50  # detected at the perturbation scale
        assert residual_for(1e-3) == pytest.approx(10 * r1, rel=0.05)  # linear response


class TestClassification:
    @pytest.mark.parametrize("name", sorted(MATRIX2_KINDS)[:5] + sorted(NONDIAG_KINDS))
    def test_defining_equations(self, name):
        kind = get_kind(name)
        if kind.decomposition(default_params(name)) is None:
            pytest.skip("no split declared")
        p = default_params(name)
        grid = residual_grid_for(kind, p)
        res = decomposition_residuals(kind, p, grid)
        for key in ("A", "C", "BC", "B2"):
            assert res[key] <= 1e-10, (name, key, res)
        assert res["reconstruction"] <= 1e-14

    def test_trivial_constant_case(self):
        # A = C = 0 and B^2 = omega^2 satisfies everything with zero constants
        from susyspec.catalog.base import classification_residual

        b = 1.7 * SIGMA1
        zeros = np.zeros((10, 2, 2))
        res = classification_residual(
            zeros, b, zeros, zeros, zeros,
            {"alpha": 1.0, "nu": 0.0, "kappa": 0.0, "lam": 0.0, "omega": 1.7},
        )
        assert all(v == 0.0 for v in res.values())


class TestUnitaryEquivalence:
    # the mu term rides sigma1 for the exp/tanh entries and sigma3 for the
    # tan/cotanh entries; the omega term rides the other one
    @pytest.mark.parametrize(
        "name,mu_on_sigma1",
        [
            ("matrix2.exp", True),
            ("matrix2.tan", False),
            ("matrix2.cotanh", False),
            ("matrix2.tanh", True),
        ],
    )
    def test_sign_flips(self, name, mu_on_sigma1):
        # sigma conjugation flips the sign of mu or omega pointwise
        p = default_params(name)
        kind = get_kind(name)
        grid = residual_grid_for(kind, p, m=40)
        w = SuperpotentialInstance(kind, p).evaluate(grid.nodes)
        flips_mu = SIGMA3 if mu_on_sigma1 else SIGMA1
        p_mu = p.replace(mu=-p.mu)
        w_mu = SuperpotentialInstance(kind, p_mu).evaluate(grid.nodes)
        conj = np.einsum("ab,jbc,cd->jad", flips_mu, w, flips_mu)
        assert np.max(np.abs(conj - w_mu)) < 1e-14
        flips_om = SIGMA1 if mu_on_sigma1 else SIGMA3
        p_om = p.replace(omega=-p.omega)
        w_om = SuperpotentialInstance(kind, p_om).evaluate(grid.nodes)
        conj = np.einsum("ab,jbc,cd->jad", flips_om, w, flips_om)
        assert np.max(np.abs(conj - w_om)) < 1e-14


class TestSpinOne:
    def test_matrix_identities(self):
        s1, s2, s3 = spin_one_matrices()
        assert np.max(np.abs(s1 @ s2 - s2 @ s1 - 1j * s3)) == 0.0
        assert np.max(np.abs(s2 @ s3 - s3 @ s2 - 1j * s1)) == 0.0
        assert np.max(np.abs(s3 @ s1 - s1 @ s3 - 1j * s2)) == 0.0
        assert np.max(np.abs(s1 @ s1 + s2 @ s2 + s3 @ s3 - 2 * np.eye(3))) == 0.0
        for s in (s1, s2, s3):
            assert np.max(np.abs(s - s.conj().T)) == 0.0

    def test_hermiticity_domain_examples(self):
        m1 = MATRIX3_KINDS["matrix3.m1"]
        accepted = hermiticity_domain(m1, ParamSet(kappa=1.0, mu1=1.0, c1=-2.0, c2=-1.0, mu2=0.0))
        assert accepted.accepted and accepted.requires_positive_x

        rejected = hermiticity_domain(m1, ParamSet(kappa=1.0, mu1=1.0, c1=1.0, c2=-1.0, mu2=0.0))
        assert not rejected.accepted
        assert "negative" in rejected.reason

        vacuous = hermiticity_domain(m1, ParamSet(kappa=1.0, mu1=0.0, mu2=0.0, c1=-1.0, c2=-1.0))
        assert vacuous.accepted and not vacuous.requires_positive_x

    def test_rejection_blocks_instance(self):
        with pytest.raises(ParameterError):
            instance("matrix3.m1", kappa=1.0, mu1=1.0, c1=1.0, c2=-1.0)


class TestParameterValidation:
    def test_inverse_mu_floor(self):
        with pytest.raises(ParameterError):
            instance("matrix2.inverse", nu=1.0, mu=-0.75, omega=1.0)

    def test_nondiag_radius_constraint(self):
        with pytest.raises(ParameterError):
            instance("nondiag.w1", kappa=1.0, mu=0.5, c=0.4, omega=2.0, r2=0.6, r3=0.8)
        # consistent radius passes
        instance("nondiag.w1", kappa=1.0, mu=0.5, c=0.4, omega=1.0, r2=0.6, r3=0.8)
