"""Position-dependent-mass rows: transforms, fits, spectra, consistency."""

import math

import numpy as np
import pytest

from susyspec.pdm import (
    PDM_ROWS,
    SPECIAL_ROWS,
    direct_energies,
    direct_fit,
    direct_transform,
    get_row,
    item10_energy,
    liouville_grid,
    pdm_spectrum,
    radial_operator,
    radial_reduce,
    two_step_energies,
    two_step_transform,
)
from susyspec.numkit import Grid, eig_banded

# working coupling per row (sign chosen so the branch binds states)
ALPHAS = {
    "t1.1": 4.0, "t1.2": -4.0, "t1.3": 200.0, "t1.4": 4.0, "t1.5": 2.0,
    "t1.6": -6.0, "t1.7": 6.0, "t1.8": 6.0, "t1.9": -8.0, "t1.10": 2.0,
    "t2.1": -6.0, "t2.2": -4.0, "t2.3": 200.0, "t2.4": 4.0, "t2.5": -6.0,
    "t2.6": 2.0, "t2.7": -12.0, "t2.8": -12.0, "t2.9": -8.0, "t2.10": 13.0,
}


class TestCatalog:
    def test_twenty_rows_present(self):
        assert len(PDM_ROWS) == 20
        assert {r.table for r in PDM_ROWS.values()} == {1, 2}

    def test_special_inverse_masses_present(self):
        assert set(SPECIAL_ROWS) == {"g1", "g2", "g3", "g4"}

    def test_special_rows_regular_effective_potentials(self):
        for key, row in SPECIAL_ROWS.items():
            problem = radial_reduce(row, l=1, alpha=0.0)
            eff = direct_transform(problem, n_samples=600)
            inner = slice(30, -30)
            assert np.all(np.isfinite(eff.v[inner])), key

    def test_unknown_row(self):
        with pytest.raises(KeyError):
            get_row("t3.1")


class TestRadialReduce:
    def test_free_row(self):
        row = get_row("t2.1")
        prob = radial_reduce(row, l=0, alpha=1.0)
        x = np.array([0.5, 1.0, 2.0])
        assert np.allclose(prob.coupling_potential(x), 1.0 / x**2)
        assert np.allclose(prob.full_potential(x), 1.0 / x**2)

    def test_centrifugal_weighting(self):
        row = get_row("t2.1")
        prob = radial_reduce(row, l=2, alpha=0.0)
        x = np.array([0.5, 2.0])
        assert np.allclose(prob.full_potential(x), 6.0 / x**4)

    def test_weight_bookkeeping(self):
        row = get_row("t1.1")
        prob = radial_reduce(row, l=0, alpha=1.0)
        assert prob.weight(4.0) == pytest.approx(2.0)

    def test_degeneracy(self):
        assert radial_reduce(get_row("t1.1"), 3, 1.0).channel.degeneracy == 7


class TestLiouville:
    def test_identity_map(self):
        xs = np.linspace(0.1, 5.0, 200)
        ys = liouville_grid(lambda x: np.ones_like(x), xs)
        assert np.allclose(ys, xs - xs[0], atol=1e-13)

    def test_known_map_row(self):
        # the tensor-class row with f = (x^4+1)^2/x^2 maps to arctan(x^2)/2
        row = get_row("t2.6")
        xs = np.linspace(0.2, 3.0, 120)
        ys = liouville_grid(row.f, xs)
        exact = 0.5 * np.arctan(xs**2)
        assert np.allclose(ys, exact - exact[0], atol=1e-12)

    def test_monotonicity_all_rows(self):
        for key, row in PDM_ROWS.items():
            prob = radial_reduce(row, 0, ALPHAS[key], nu=0.0)
            lo, hi = row.domain
            hi_eff = min(hi, 50.0)
            xs = np.linspace(lo + 1e-4, hi_eff - 1e-6, 10000)
            f_vals = prob.f(xs)
            if np.any(f_vals <= 0):  # two-parameter rows with sign change
                continue
            ys = liouville_grid(prob.f, xs)
            assert np.all(np.diff(ys) > 0.0), key


class TestDirectTransform:
    def test_identity_inverse_mass(self):
        row = get_row("t1.7")  # has no direct route; build by hand
        prob = radial_reduce(get_row("t1.1"), l=1, alpha=1.0)
        eff = direct_transform(prob)
        # map x(y) and y(x) invert each other on the sample range
        xq = np.linspace(eff.x[50], eff.x[-50], 40)
        assert np.allclose(eff.x_of_y(eff.y_of_x(xq)), xq, rtol=1e-9)

    def test_oscillator_row_closed_form(self):
        # f = x, V = alpha x: y = 2 sqrt(x), effective (alpha/4) y^2 + ...
        prob = radial_reduce(get_row("t1.1"), l=0, alpha=4.0)
        eff = direct_transform(prob)
        y = eff.y[200:-200]
        expected = (4.0 / 4.0) * y**2 + (3.0 / 4.0) / y**2
        assert np.max(np.abs(eff.v[200:-200] - expected) / np.abs(expected)) < 1e-10

    def test_trig_row_closed_form(self):
        # f = (x^4+1)^2/x^2, V = alpha (x^4-1)/x^2: trig family in 4y
        prob = radial_reduce(get_row("t2.6"), l=0, alpha=2.0)
        eff = direct_transform(prob)
        y = eff.y[300:-300]
        expected = -2.0 * 2.0 / np.tan(4 * y) - 3.0 / np.sin(4 * y) ** 2 - 4.0
        # fifth-column family: fit confirms the trig Rosen-Morse shape
        fit = direct_fit(prob)
        assert fit.family == "trig-rm"
        assert fit.residual < 1e-8
        assert fit.a == pytest.approx(-3.0, abs=1e-10)
        assert fit.b == pytest.approx(-4.0, abs=1e-10)
        scale = np.maximum(np.abs(expected), 1.0)
        assert np.max(np.abs(eff.v[300:-300] - expected) / scale) < 1e-8

    @pytest.mark.parametrize("key", [k for k, r in PDM_ROWS.items() if "direct" in r.approaches])
    def test_effective_kind_fit(self, key):
        prob = radial_reduce(get_row(key), l=0, alpha=ALPHAS[key])
        fit = direct_fit(prob)
        assert fit.residual <= 1e-8, (key, fit.family, fit.residual)


class TestTwoStep:
    def test_coulomb_row_closed_form(self):
        # f = x/(x+1), V = alpha x/(x+1): swap gives a plain Coulomb problem
        prob = radial_reduce(get_row("t1.7"), l=0, alpha=6.0)
        energies = two_step_energies(prob, 2)
        # alpha = E + E^2/(4 N^2), N = l+1+n
        expected = [2 * n_big**2 * (-1 + math.sqrt(1 + 6.0 / n_big**2)) for n_big in (1, 2, 3)]
        assert np.allclose(energies, expected, rtol=1e-9)

    def test_alpha_sign_flip_negates_target(self):
        prob = radial_reduce(get_row("t1.7"), l=0, alpha=6.0)
        t1 = two_step_transform(prob)
        t2 = two_step_transform(radial_reduce(get_row("t1.7"), l=0, alpha=-6.0))
        assert t1.target == -t2.target

    def test_sign_change_rejection(self):
        from susyspec.pdm.tables import PdmRow

        row = get_row("t1.7")
        bad = PdmRow(
            key="bad", table=1, item=99, f=row.f, fp=row.fp, fpp=row.fpp,
            v=row.v, approaches=("two-step",), domain=row.domain,
            ts_family="coulomb",
            ft=(lambda x: x - 1.0, lambda x: 1.0 + 0 * x, lambda x: 0.0 * x),
            ts_domain=(0.0, 3.0),
        )
        with pytest.raises(ValueError):
            two_step_transform(radial_reduce(bad, 0, 1.0))

    def test_two_parameter_row_reduction(self):
        # the worked two-parameter system: base potential is the shifted
        # trigonometric family with strength mu(mu-4), mu = 2l+3
        prob = radial_reduce(get_row("t2.10"), l=0, alpha=13.0, nu=0.0)
        tr = two_step_transform(prob)
        from susyspec.pdm.families import fit_family

        fit = fit_family("trig-rm", tr.y, tr.base, g=4.0, total_length=tr.total_length)
        assert fit.a == pytest.approx(-3.0, abs=1e-9)   # mu(mu-4) at l=0
        assert fit.c0 == pytest.approx(-4.0, abs=1e-9)  # eigenvalue offset
        assert fit.residual < 1e-12

    def test_dual_route_rows_agree(self):
        for key in ("t1.1", "t1.2", "t1.3", "t1.4", "t2.1", "t2.2", "t2.3", "t2.4"):
            prob = radial_reduce(get_row(key), l=0, alpha=ALPHAS[key])
            de = direct_energies(prob, 2)
            ts = two_step_energies(prob, 2)
            k = min(len(de), len(ts))
            assert k >= 1, key
            assert np.max(np.abs(np.array(de[:k]) - np.array(ts[:k]))) < 1e-6, key


class TestItem10:
    def test_degenerate_coupling(self):
        assert item10_energy(4.0, 0.0, 0, 0) == pytest.approx(-9.0)
        assert item10_energy(4.0, 0.0, 0, 1) == pytest.approx(-49.0)
        assert item10_energy(4.0, 0.0, 1, 0) == pytest.approx(-25.0)

    def test_general_coupling(self):
        assert item10_energy(13.0, 0.0, 0, 0) == pytest.approx(-9.0 * math.sqrt(2.0))

    def test_nu_dependence(self):
        # E = P^2 (nu - sqrt(nu^2 + 1)) at alpha = 4
        for nu in (0.5, -0.5, 2.0):
            e = item10_energy(4.0, nu, 0, 0)
            assert e == pytest.approx(9.0 * (nu - math.sqrt(nu * nu + 1.0)))

    def test_negative_discriminant(self):
        with pytest.raises(ValueError):
            item10_energy(-100.0, 0.0, 0, 0)


class TestSpectra:
    def test_item10_dual_method(self):
        table = pdm_spectrum("t2.10", l=0, n_max=1, alpha=13.0, nu=0.0)
        for row in table.rows:
            assert row.abs_err / abs(row.e_analytic) < 1e-4

    def test_oscillator_row_numeric(self):
        table = pdm_spectrum("t1.1", l=0, n_max=2, alpha=4.0)
        for row in table.rows:
            assert row.e_analytic == pytest.approx(4.0 * (row.n + 1), abs=1e-8)
            assert row.abs_err < 1e-4 * max(1.0, abs(row.e_analytic))

    def test_degeneracy_bookkeeping(self):
        table = pdm_spectrum("t1.1", l=2, n_max=0, alpha=4.0, numeric=False)
        assert table.rows[0].label == 5.0  # 2l+1

    def test_route_validation(self):
        with pytest.raises(ValueError):
            pdm_spectrum("t1.5", l=0, n_max=1, alpha=2.0, route="two-step")

    def test_numeric_only_row(self):
        # the shifted-half-line rows carry no closed-form spectra
        table = pdm_spectrum("t1.8", l=0, n_max=1, alpha=6.0)
        assert all(math.isnan(r.e_analytic) for r in table.rows)
        assert all(math.isfinite(r.e_numeric) for r in table.rows)
