"""Physical models mapped onto catalog problems."""

import math

import numpy as np
import pytest

from susyspec.engine import excited_state, ground_state_analytic
from susyspec.models import (
    ep1_reduction,
    ps_descriptor,
    ps_potential,
    ps_radial_problem,
    spin1_radial_problem,
)
from susyspec.numkit import Grid, eig_banded, integrate, schrodinger_operator


class TestWireProblem:
    def test_mapped_potential_pointwise(self):
        desc = ps_descriptor(2)
        x = np.linspace(0.3, 15.0, 80)
        mapped = desc.model_potential(x)
        assert np.max(np.abs(mapped - ps_potential(2, x))) < 1e-12

    def test_factorization_constant(self):
        for kappa in (1, 2, 3):
            prob = ps_radial_problem(kappa, Grid.half_line(40.0, 400))
            fc = prob.superpotential.factorization_constant()
            assert fc == pytest.approx(-1.0 / (2 * kappa + 1) ** 2)

    def test_ground_level_matches_eigensolver(self):
        g = Grid.half_line(60.0, 6000)
        res = eig_banded(schrodinger_operator(g, lambda x: ps_potential(1, x)), 1)
        assert res.eigenvalues[0] == pytest.approx(-1.0 / 9.0, abs=5e-5)

    def test_ground_spinor_matches_bessel_form(self):
        g = Grid.half_line(50.0, 8000)
        prob = ps_radial_problem(1, g)
        gs = ground_state_analytic(prob.superpotential, g)
        # eigensolver state of the model potential agrees after the
        # sigma3 sign-frame flip (second component changes sign)
        res = eig_banded(schrodinger_operator(g, lambda x: ps_potential(1, x)), 1)
        frame = gs.samples.copy()
        frame[:, 1] *= -1.0
        overlap = abs(g.h * np.sum(res.eigenvectors[0] * frame))
        assert overlap >= 1.0 - 1e-6

    def test_spectra_match_for_small_kappa(self):
        for kappa, length in ((1, 100.0), (2, 150.0), (3, 260.0)):
            g = Grid.half_line(length, int(100 * length))
            res = eig_banded(
                schrodinger_operator(g, lambda x: ps_potential(kappa, x)), 1
            )
            exact = -1.0 / (2 * kappa + 1) ** 2
            assert abs(res.eigenvalues[0] - exact) < 5e-5

    def test_integer_kappa_required(self):
        with pytest.raises(ValueError):
            ps_radial_problem(0, Grid.half_line(10.0, 100))
        with pytest.raises(ValueError):
            ps_radial_problem(1.5, Grid.half_line(10.0, 100))


class TestExponentialFieldModel:
    def test_pointwise_potential_match(self):
        desc = ep1_reduction(lam=1.3, nu=2.0, p=0.5)
        x = np.linspace(-2.0, 10.0, 100)
        assert np.max(np.abs(desc.model_potential(x) - desc.potential(x))) < 1e-12

    def test_energy_offset(self):
        desc = ep1_reduction(lam=1.0, nu=-2.0, p=0.5)
        assert desc.energy_offset == pytest.approx(0.5**2 + 0.25)
        # full-model bookkeeping: E_full = E + p^2 + 1/4 exactly
        e_sep = desc.catalog.factorization_constant()
        assert e_sep + desc.energy_offset == pytest.approx(e_sep + 0.5)

    def test_free_limit(self):
        desc = ep1_reduction(lam=0.0, nu=1.0, p=1.0)
        x = np.linspace(-3.0, 3.0, 20)
        v = desc.model_potential(x)
        const = np.diag([-1.0, 1.0])
        assert np.max(np.abs(v - const)) < 1e-14

    def test_separated_spectrum_vs_eigensolver(self):
        desc = ep1_reduction(lam=1.0, nu=-2.5, p=0.8)
        w = desc.catalog
        from susyspec.engine import energy_levels

        table = energy_levels(w, 2)
        assert len(table.rows) >= 1
        for row in table.rows:
            assert row.abs_err < 5e-5


class TestSpinOneModel:
    def test_assembled_vs_decomposed_spectra(self):
        g = Grid.half_line(150.0, 9000)
        red = spin1_radial_problem(mu=1.0, lam=0.0, grid=g, j=1)
        assembled, merged = red.spectra(4)
        assert np.max(np.abs(assembled - merged)) < 1e-6

    def test_block_maps_to_inverse_family(self):
        g = Grid.half_line(60.0, 600)
        red = spin1_radial_problem(mu=2.0, lam=0.5, grid=g, j=1)
        w = red.pot1_instance
        assert w is not None
        x = np.linspace(0.5, 20.0, 50)
        vb = np.stack([np.asarray(red_v, dtype=float) for red_v in map(
            lambda xx: np.diag([(1 - 1) ** 2 - 0.25, (1 + 1) ** 2 - 0.25]) / xx**2
            + (0.5 - 2.0) / xx * np.array([[0.0, 1.0], [1.0, 0.0]]),
            x,
        )])
        assert np.max(np.abs(w.potential(x) - vb)) < 1e-12

    def test_free_limit(self):
        # mu = lam = 0 leaves only the centrifugal channels
        g = Grid.half_line(30.0, 200)
        red = spin1_radial_problem(mu=0.0, lam=0.0, grid=g, j=1)
        blocks = red.assembled.blocks_full() - 2.0 / g.h**2 * np.eye(3)
        for xj, block in zip(g.nodes, blocks):
            eigs = np.sort(np.linalg.eigvalsh(block))
            expected = np.sort(np.array([-0.25, 0.75, 3.75]) / xj**2)
            assert np.max(np.abs(eigs - expected)) < 1e-9 / xj**2
