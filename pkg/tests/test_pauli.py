"""Discretized supercharges, parity classification, uniform-field reduction."""

import math

import numpy as np
import pytest

from susyspec.numkit import Grid, eig_banded
from susyspec.pauli import (
    DiscretePauliOperator,
    PauliGrid,
    VectorPotential,
    build_supercharges,
    landau_reduction,
    parity_classify,
    superalgebra_residual,
)


@pytest.fixture(scope="module")
def constant_field():
    return VectorPotential.constant_field(1.0)


class TestOperators:
    def test_reflections_are_involutions(self, constant_field):
        grid = PauliGrid(5.0, 32)
        op = DiscretePauliOperator(constant_field, grid)
        rng = np.random.default_rng(0)
        psi = rng.standard_normal((2, 32, 32)) + 1j * rng.standard_normal((2, 32, 32))
        for a in (1, 2, 3):
            twice = op.reflect(op.reflect(psi, a), a)
            assert np.array_equal(twice, psi)

    def test_charge_conjugation_squares_to_minus_one(self, constant_field):
        grid = PauliGrid(5.0, 16)
        op = DiscretePauliOperator(constant_field, grid)
        rng = np.random.default_rng(1)
        psi = rng.standard_normal((2, 16, 16)) + 1j * rng.standard_normal((2, 16, 16))
        assert np.allclose(op.charge_conj(op.charge_conj(psi)), -psi, atol=1e-15)

    def test_q3_p3_commutes_exactly(self, constant_field):
        # in the separated representation pi_3 multiplies by p3 - A3; for
        # the planar gauge it is the constant p3 and commutes with Q1
        grid = PauliGrid(5.0, 32)
        op = DiscretePauliOperator(constant_field, grid, p3=0.7)
        rng = np.random.default_rng(2)
        psi = rng.standard_normal((2, 32, 32)) + 1j * rng.standard_normal((2, 32, 32))
        q1 = lambda f: op.s1(op.pi(f, 1)) + op.s2(op.pi(f, 2))
        p3 = lambda f: op.pi(f, 3)
        comm = q1(p3(psi)) - p3(q1(psi))
        assert np.max(np.abs(comm)) < 1e-13


class TestSuperalgebra:
    def test_residual_decay_order(self, constant_field):
        residuals = {}
        for n in (64, 128):
            qs = build_supercharges(constant_field, PauliGrid(7.0, n))
            residuals[n] = superalgebra_residual(qs, n_spinors=4, seed=5)
        # diagonal anticommutators carry the O(h^2) discretization error
        for k in range(4):
            r64, r128 = residuals[64][k, k], residuals[128][k, k]
            order = math.log2(r64 / r128)
            assert order >= 1.8, (k, r64, r128)
        # cross anticommutators cancel identically in the discrete algebra
        off = residuals[128] - np.diag(np.diag(residuals[128]))
        assert np.max(off) < 1e-12

    def test_parity_violation_negative_control(self):
        # an asymmetric extra term breaks the reflection parities; the
        # residuals of the reflection-built charges stay O(1)
        broken = VectorPotential(
            a1=lambda x1, x2, x3: -0.5 * x2 + 0.2 * x1 * x1,
            a2=lambda x1, x2, x3: 0.5 * x1,
            a3=lambda x1, x2, x3: np.zeros_like(x1),
        )
        res = {}
        for n in (64, 128):
            qs = build_supercharges(broken, PauliGrid(7.0, n))
            res[n] = superalgebra_residual(qs, n_spinors=4, seed=5)
        # Q1 alone still squares to H: second-order decay survives
        assert math.log2(res[64][0, 0] / res[128][0, 0]) >= 1.8
        # the x1^2 term is even under the first reflection, so only the
        # second-reflection charge loses its algebra; its residuals stay O(1)
        assert res[128][3, 3] > 0.5 * res[64][3, 3]
        assert res[128][3, 3] > 1e-1
        assert res[128][0, 3] > 1e-1

    def test_even_grid_required(self):
        with pytest.raises(ValueError):
            PauliGrid(5.0, 33)


class TestParityClassify:
    def test_constant_field_gauge(self, constant_field):
        report = parity_classify(constant_field)
        assert all(report.reflections.values())
        assert report.n_supercharges == 4
        assert report.n5_predicted

    def test_uniform_planar_field(self):
        a = VectorPotential(
            a1=lambda x1, x2, x3: -0.5 * x2 * (1 + x1**2 + x2**2),
            a2=lambda x1, x2, x3: 0.5 * x1 * (1 + x1**2 + x2**2),
            a3=lambda x1, x2, x3: np.zeros_like(x1),
        )
        report = parity_classify(a)
        assert all(report.reflections.values())
        assert report.n_supercharges == 4

    def test_generic_field_keeps_one_supercharge(self):
        a = VectorPotential(
            a1=lambda x1, x2, x3: x1 + x2 * x3,
            a2=lambda x1, x2, x3: x2**2,
            a3=lambda x1, x2, x3: 1.0 + 0.0 * x1,
        )
        report = parity_classify(a)
        assert not any(report.reflections.values())
        assert report.n_supercharges == 1


class TestLandauReduction:
    def test_cartesian_spectra(self):
        red = landau_reduction(1.0, sector="cartesian")
        grid = Grid.symmetric(12.0, 2400)
        res = eig_banded(red.block_operator(grid), 8)
        levels = np.sort(res.eigenvalues)
        # block spectrum {0, 2, 2, 4, 4, ...}: zero mode plus doubled levels
        assert abs(levels[0]) < 1e-4
        assert np.allclose(levels[1:3], 2.0, atol=1e-4)
        assert np.allclose(levels[3:5], 4.0, atol=1e-3)

    def test_operator_shift_identity(self):
        red = landau_reduction(1.5, sector="cartesian")
        x = np.linspace(-3.0, 3.0, 11)
        assert np.allclose(
            red.potential_plus(x) - red.potential_minus(x), 2 * red.spacing_constant / 2.0
        )
        assert red.spacing_constant == pytest.approx(3.0)

    def test_radial_shape_invariance_constant(self):
        red1 = landau_reduction(1.0, sector="radial", index=1)
        red0 = landau_reduction(1.0, sector="radial", index=0)
        x = np.linspace(0.3, 6.0, 40)
        diff = red1.potential_plus(x) - red0.potential_minus(x)
        assert np.allclose(diff, 2.0)

    def test_radial_degeneracy_with_cartesian(self):
        # the radial blocks reproduce the same even-spaced level set
        red = landau_reduction(1.0, sector="radial", index=1)
        grid = Grid.half_line(14.0, 2800)
        res = eig_banded(red.block_operator(grid), 4)
        assert np.allclose(res.eigenvalues[:2], [4.0, 4.0], atol=1e-3)

    def test_field_positive(self):
        with pytest.raises(ValueError):
            landau_reduction(-1.0)


class TestAngularConstants:
    def test_j3_and_shift_invariants_commute(self, constant_field):
        # J3 = x1 p2 - x2 p1 + s3/2 and the magnetic translation
        # generators commute with H at the discretization order
        res = {}
        for n in (64, 128):
            grid = PauliGrid(7.0, n)
            op = DiscretePauliOperator(constant_field, grid)
            x1, x2 = grid.mesh()

            def j3(psi):
                d1 = np.stack([op._deriv(psi[0], 0), op._deriv(psi[1], 0)])
                d2 = np.stack([op._deriv(psi[0], 1), op._deriv(psi[1], 1)])
                return x1 * (-1j * d2) - x2 * (-1j * d1) + 0.5 * op.s3(psi)

            def k1(psi):
                # translation generator with its momentum factor restored
                d1 = np.stack([op._deriv(psi[0], 0), op._deriv(psi[1], 0)])
                return -1j * d1 - 0.5 * x2 * psi

            x1g, x2g = grid.mesh()
            blob = np.exp(-(x1g**2 + x2g**2) / 2.0)
            psi = np.stack([blob, 0.5 * blob]) * np.exp(1j * (0.4 * x1g - 0.3 * x2g))
            comm_j = j3(op.h2(psi)) - op.h2(j3(psi))
            comm_k = k1(op.h2(psi)) - op.h2(k1(psi))
            res[n] = (op.norm(comm_j) / op.norm(psi), op.norm(comm_k) / op.norm(psi))
        for i in range(2):
            assert math.log2(res[64][i] / res[128][i]) >= 1.5
