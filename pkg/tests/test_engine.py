"""Exact-solution engine: ground states, ladders, spectra, duality."""

import math

import numpy as np
import pytest

from susyspec.catalog import ParamSet, instance
from susyspec.engine import (
    GateRejection,
    KernelSearchError,
    LadderProblem,
    NoDualFactorization,
    admissible_levels,
    dual_factorization,
    dual_ground_state,
    energy_level,
    energy_levels,
    excited_state,
    ground_state_analytic,
    ground_state_numeric,
    hamiltonian_operator,
    intertwining_residual,
    level_label,
)
from susyspec.numkit import Grid, bessel_k, eig_banded, integrate


@pytest.fixture(scope="module")
def inverse_instance():
    return instance("matrix2.inverse", nu=1.0, mu=0.0, omega=1.0)


@pytest.fixture(scope="module")
def refined_grid():
    return Grid(1.0, 49.0 / 11999, 12000)


class TestGroundStateAnalytic:
    def test_bessel_spinor(self, inverse_instance, refined_grid):
        gs = ground_state_analytic(inverse_instance, refined_grid)
        assert gs.energy == pytest.approx(-1.0 / 9.0, abs=1e-14)
        y = refined_grid.nodes / 3.0
        phi = y**2 * np.array([bessel_k(1.0, v) for v in y])
        xi = y**2 * np.array([bessel_k(0.0, v) for v in y])
        ref = np.stack([phi, xi], axis=1)
        ref /= math.sqrt(integrate(refined_grid, ref))
        assert np.max(np.abs(ref - gs.samples)) < 1e-12

    def test_kernel_residual(self, inverse_instance, refined_grid):
        gs = ground_state_analytic(inverse_instance, refined_grid)
        res = inverse_instance.apply_lowering(refined_grid, gs.samples)
        assert math.sqrt(integrate(refined_grid, res)) < 1e-7

    def test_gate_rejection_names_inequality(self, refined_grid):
        w = instance("matrix2.inverse", nu=0.5, mu=1.0, omega=1.0)
        with pytest.raises(GateRejection) as err:
            ground_state_analytic(w, refined_grid)
        assert "nu - mu" in str(err.value)
        assert err.value.gate_name == "nu-mu-window"

    def test_exp_family_gate(self):
        accepted = instance("matrix2.exp", nu=-2.0, mu=1.0, omega=1.0)
        g = Grid(-3.0, 40.0 / 4999, 5000)
        gs = ground_state_analytic(accepted, g)
        assert gs.energy == pytest.approx(-(4.0 + 0.25))
        res = accepted.apply_lowering(g, gs.samples)
        assert math.sqrt(integrate(g, res)) < 1e-6
        with pytest.raises(GateRejection):
            ground_state_analytic(
                instance("matrix2.exp", nu=-1.0, mu=1.0, omega=2.0), g
            )


class TestGroundStateNumeric:
    def test_harmonic_gaussian(self):
        w = instance("scalar.harmonic", mu=1.0)
        g = Grid.symmetric(9.0, 8000)
        gs = ground_state_numeric(w, g)
        res = w.apply_lowering(g, gs.samples)
        assert math.sqrt(integrate(g, res)) < 1e-10
        gauss = np.exp(-g.nodes**2 / 2)
        gauss /= math.sqrt(integrate(g, gauss))
        assert np.max(np.abs(gs.samples[:, 0] - gauss)) < 1e-10

    def test_matches_bessel_form(self, inverse_instance, refined_grid):
        analytic = ground_state_analytic(inverse_instance, refined_grid)
        numeric = ground_state_numeric(inverse_instance, refined_grid)
        assert numeric.overlap(analytic) >= 1.0 - 1e-7
        assert np.max(np.abs(numeric.samples - analytic.samples)) < 1e-7

    def test_coulomb_kernel(self):
        w = instance("scalar.coulomb", kappa=1.0, omega=1.0)
        g = Grid(0.05, 29.95 / 3999, 4000)
        gs = ground_state_numeric(w, g)
        res = w.apply_lowering(g, gs.samples)
        assert math.sqrt(integrate(g, res)) < 1e-9
        ref = g.nodes * np.exp(-g.nodes)
        ref /= math.sqrt(integrate(g, ref))
        assert np.max(np.abs(gs.samples[:, 0] - ref)) < 1e-9

    def test_gate_soundness(self, refined_grid):
        # whenever the analytic gate rejects, the numeric search fails too
        rejected = [
            instance("matrix2.inverse", nu=0.5, mu=1.0, omega=1.0),
            instance("matrix2.inverse", nu=-1.0, mu=0.0, omega=1.0),
        ]
        for w in rejected:
            with pytest.raises(KernelSearchError):
                ground_state_numeric(w, refined_grid)


class TestLadder:
    def test_n0_is_ground(self, inverse_instance, refined_grid):
        prob = LadderProblem(inverse_instance, refined_grid, n_max=3)
        st = excited_state(prob, 0)
        gs = ground_state_analytic(inverse_instance, refined_grid)
        assert st.overlap(gs) >= 1.0 - 1e-12

    def test_harmonic_first_excited(self):
        w = instance("scalar.harmonic", mu=1.0)
        g = Grid.symmetric(9.0, 3000)
        prob = LadderProblem(w, g, n_max=2)
        st = excited_state(prob, 1)
        assert st.energy == pytest.approx(3.0)
        op = hamiltonian_operator(w, g)
        res = eig_banded(op, 2)
        overlap = abs(
            g.h * np.sum(np.conj(res.eigenvectors[1][:, 0]) * st.samples[:, 0])
        )
        assert overlap >= 1.0 - 1e-6

    def test_inverse_first_excited_energy(self, inverse_instance):
        g = Grid.half_line(100.0, 10000)
        prob = LadderProblem(inverse_instance, g, n_max=2)
        st = excited_state(prob, 1)
        assert st.energy == pytest.approx(-1.0 / 25.0, abs=1e-14)
        res = eig_banded(hamiltonian_operator(inverse_instance, g), 2)
        assert abs(res.eigenvalues[1] - st.energy) < 1e-5
        overlap = abs(
            g.h * np.sum(np.conj(res.eigenvectors[1]) * st.samples)
        )
        assert overlap >= 1.0 - 1e-5

    def test_gate_failure_at_intermediate_shift(self):
        # the exp family tower terminates when (nu+n)^2 drops below |omega|
        w = instance("matrix2.exp", nu=-2.0, mu=1.0, omega=3.0)
        g = Grid(-3.0, 30.0 / 1999, 2000)
        prob = LadderProblem(w, g, n_max=3)
        with pytest.raises(GateRejection):
            excited_state(prob, 1)


class TestEnergyLevels:
    def test_inverse_family_values(self):
        w = instance("matrix2.inverse", nu=1.0, mu=0.0, omega=1.0)
        assert energy_level(w, 0) == pytest.approx(-1.0 / 9.0)
        assert energy_level(w, 2) == pytest.approx(-1.0 / 49.0)

    def test_tan_family_value(self):
        # lam = 1, omega = 2, N = 2 gives 4 - 1 = 3
        w = instance("matrix2.tan", nu=2.0, mu=0.5, omega=2.0)
        assert energy_level(w, 0) == pytest.approx(3.0)
        assert level_label(w, 0) == 2.0

    def test_exp_family_bound(self):
        w = instance("matrix2.exp", nu=-2.0, mu=1.0, omega=3.0)
        assert energy_level(w, 0) == pytest.approx(-6.25)
        assert admissible_levels(w, 5) == [0]

    def test_exp_family_count_matches_numeric(self):
        w = instance("matrix2.exp", nu=-2.0, mu=1.0, omega=3.0)
        table = energy_levels(w, 5)
        assert len(table.rows) == 1
        assert table.rows[0].abs_err < 5e-5
        # numeric bound-state count below the continuum edge -2 omega lam^2
        g = Grid(-4.0, 44.0 / 11999, 12000)
        res = eig_banded(hamiltonian_operator(w, g), 4)
        below = np.sum(res.eigenvalues < -6.0 - 1e-3)
        assert below == 1

    def test_scalar_morse_truncation(self):
        w = instance("scalar.morse", kappa=2.5, mu=1.0)
        levels = admissible_levels(w, 10)
        assert levels == [0, 1, 2]  # kappa - n must stay positive

    def test_table_serialization(self):
        w = instance("matrix2.inverse", nu=1.0, mu=0.0, omega=1.0)
        table = energy_levels(w, 1, numeric=False)
        text = table.to_csv()
        assert text.splitlines()[0] == "n,N,E_analytic,E_numeric,abs_err"
        assert "-0.111111111111" in text
        doc = table.to_json()
        assert '"E_analytic"' in doc

    def test_monotone_energies(self):
        w = instance("scalar.eckart", kappa=1.0, omega=9.0)
        table = energy_levels(w, 4, numeric=False)
        es = [r.e_analytic for r in table.rows]
        assert all(b > a for a, b in zip(es, es[1:]))
        assert len(es) == 2  # (kappa+n)^2 < omega/lam admits only N = 1, 2


class TestDuality:
    def test_inverse_dual_constant(self):
        w = instance("matrix2.inverse", nu=0.5, mu=1.0, omega=1.0)
        dual, c_mu = dual_factorization(w)
        assert dual.kind.name == "matrix2.dual-inverse"
        assert c_mu == pytest.approx(1.0 / 16.0)

    def test_tan_dual_constant(self):
        w = instance("matrix2.tan", nu=1.0, mu=0.5, omega=1.0, lam=1.0)
        _, c_mu = dual_factorization(w)
        # lam^2 (4 omega^2/(2mu+1)^2 - (2mu+1)^2/4) at mu=1/2: 1 - 1 = 0
        assert c_mu == pytest.approx(1.0 - 1.0)
        w2 = instance("matrix2.tan", nu=1.0, mu=1.0, omega=2.0, lam=1.0)
        _, c_mu2 = dual_factorization(w2)
        assert c_mu2 == pytest.approx(16.0 / 9.0 - 9.0 / 4.0)

    def test_exp_has_no_dual(self):
        with pytest.raises(NoDualFactorization):
            dual_factorization(instance("matrix2.exp", nu=-2.0, mu=1.0, omega=1.0))
        with pytest.raises(NoDualFactorization):
            dual_factorization(instance("matrix2.tanh", nu=-3.0, mu=0.5, omega=1.0))

    def test_dual_ground_state_gates(self):
        g = Grid(0.5, 59.5 / 5999, 6000)
        accepted = instance("matrix2.dual-inverse", nu=0.5, mu=1.0, omega=1.0)
        st = dual_ground_state(accepted, g)
        assert st.energy == pytest.approx(-1.0 / 16.0)
        # complementary windows: (nu=2, mu=0) passes the primary gate only
        with pytest.raises(GateRejection):
            dual_ground_state(
                instance("matrix2.dual-inverse", nu=2.0, mu=0.0, omega=1.0), g
            )
        primary = instance("matrix2.inverse", nu=2.0, mu=0.0, omega=1.0)
        ground_state_analytic(primary, g)  # does not raise

    def test_dual_scaling_invariance(self):
        # omega -> 2 omega with x -> x/2 leaves the dual spinor shape fixed
        m = 4000
        g1 = Grid(0.4, 39.6 / (m - 1), m)
        g2 = Grid(0.2, 19.8 / (m - 1), m)
        a = dual_ground_state(instance("matrix2.dual-inverse", nu=0.5, mu=1.0, omega=1.0), g1)
        b = dual_ground_state(instance("matrix2.dual-inverse", nu=0.5, mu=1.0, omega=2.0), g2)
        ratio = b.samples / a.samples
        assert np.max(np.abs(ratio - ratio[m // 2])) < 1e-9

    def test_self_dual_consistency(self):
        # on nu = mu + 1/2 both factorizations give the same ground state
        g = Grid(0.5, 59.5 / 5999, 6000)
        for mu in (0.5, 1.0, 1.5):
            nu = mu + 0.5
            primary = instance("matrix2.inverse", nu=nu, mu=mu, omega=1.0)
            dual, _ = dual_factorization(primary)
            s1 = ground_state_analytic(primary, g)
            s2 = dual_ground_state(dual, g)
            assert abs(s1.energy - s2.energy) < 1e-12
            assert np.max(np.abs(s1.samples - s2.samples)) < 1e-10


class TestIntertwining:
    @pytest.mark.parametrize(
        "name",
        ["scalar.coulomb", "scalar.osc3d", "matrix2.inverse", "matrix2.exp",
         "matrix2.tan", "matrix2.dual-inverse"],
    )
    def test_random_spinors(self, name):
        from susyspec.catalog import default_params

        inst = instance(name, default_params(name))
        assert intertwining_residual(inst, n_spinors=20) <= 1e-6
