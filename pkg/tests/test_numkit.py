"""Grids, quadrature, stencils and the banded eigensolver."""

import math

import numpy as np
import pytest

from susyspec.numkit import (
    BandedHermitianOperator,
    Grid,
    differentiate,
    eig_banded,
    integrate,
    schrodinger_operator,
)

S1 = np.array([[0.0, 1.0], [1.0, 0.0]])
S3 = np.diag([1.0, -1.0])


def inverse_family_potential(x, nu=1.0, mu=0.0, omega=1.0):
    return (
        (mu * (mu + 1) + nu * nu) * np.eye(2) / x**2
        - nu * (2 * mu + 1) * S3 / x**2
        - omega * S1 / x
    )


class TestGrid:
    def test_nodes_increasing(self):
        g = Grid(0.5, 0.1, 20)
        assert np.all(np.diff(g.nodes) > 0)
        assert g.nodes[0] == 0.5

    def test_invalid(self):
        with pytest.raises(ValueError):
            Grid(0.0, -0.1, 10)
        with pytest.raises(ValueError):
            Grid(0.0, 0.1, 2)

    def test_half_line(self):
        g = Grid.half_line(10.0, 99)
        assert g.nodes[0] == pytest.approx(g.h)
        assert g.nodes[-1] == pytest.approx(10.0 - g.h)


class TestIntegrate:
    def test_constant(self):
        g = Grid(0.0, 1.0 / 3999, 4000)
        assert integrate(g, np.ones(4000)) == pytest.approx(1.0, abs=1e-12)

    def test_exponential(self):
        g = Grid(0.0, 40.0 / 3999, 4000)
        val = integrate(g, np.exp(-g.nodes))
        assert val == pytest.approx(0.5, abs=1e-6)

    def test_spinor_columns(self):
        g = Grid(0.0, 1.0 / 999, 1000)
        samples = np.stack([np.ones(1000), np.zeros(1000)], axis=1)
        assert integrate(g, samples) == pytest.approx(1.0, abs=1e-12)

    def test_length_mismatch(self):
        g = Grid(0.0, 0.1, 10)
        with pytest.raises(ValueError):
            integrate(g, np.ones(11))


class TestDifferentiate:
    def test_sine(self):
        g = Grid(0.0, 1e-3, 2001)
        d = differentiate(g, np.sin(g.nodes), 1)
        assert np.max(np.abs(d - np.cos(g.nodes))) < 1e-8

    def test_constant_interior(self):
        g = Grid(0.0, 1e-3, 501)
        d = differentiate(g, np.ones(501), 1)
        assert np.max(np.abs(d[2:-2])) == 0.0

    def test_second_derivative_parabola(self):
        g = Grid(0.0, 1e-2, 101)
        d = differentiate(g, g.nodes**2, 2)
        assert np.max(np.abs(d - 2.0)) < 1e-9

    def test_edges_smooth(self):
        g = Grid(0.0, 2e-3, 400)
        f = np.exp(-g.nodes) * g.nodes
        d = differentiate(g, f, 1)
        exact = np.exp(-g.nodes) * (1 - g.nodes)
        assert np.max(np.abs(d - exact)) < 1e-8


class TestEigBanded:
    def test_oscillator(self):
        g = Grid.symmetric(12.0, 2400)
        res = eig_banded(schrodinger_operator(g, lambda y: y * y), 3)
        assert np.allclose(res.eigenvalues, [1.0, 3.0, 5.0], atol=1e-4)
        assert np.max(np.abs(res.eigenvalues - [1, 3, 5])) < 1e-4

    def test_particle_in_box(self):
        g = Grid.half_line(math.pi, 2500)
        res = eig_banded(schrodinger_operator(g, lambda x: 0.0), 3)
        # O(h^2) accuracy
        assert np.allclose(res.eigenvalues, [1.0, 4.0, 9.0], atol=5e-5)

    def test_matrix_block_ground_level(self):
        g = Grid.half_line(60.0, 6000)
        res = eig_banded(schrodinger_operator(g, inverse_family_potential), 1)
        assert res.eigenvalues[0] == pytest.approx(-1.0 / 9.0, abs=5e-5)

    def test_eigenvector_norm_and_residual(self):
        g = Grid.half_line(30.0, 2000)
        op = schrodinger_operator(g, inverse_family_potential)
        res = eig_banded(op, 2)
        v = res.eigenvectors[1]
        assert integrate(g, v) == pytest.approx(1.0, rel=1e-6)
        resid = op.apply(v) - res.eigenvalues[1] * v
        scale = np.max(np.abs(op.to_banded()))
        assert np.linalg.norm(resid) / scale < 1e-8

    def test_determinism(self):
        g = Grid.half_line(30.0, 1500)
        op = schrodinger_operator(g, inverse_family_potential)
        a = eig_banded(op, 3)
        b = eig_banded(op, 3)
        assert np.array_equal(a.eigenvalues, b.eigenvalues)
        assert np.array_equal(a.eigenvectors, b.eigenvectors)

    def test_exact_hermitian_storage(self):
        g = Grid(0.5, 0.1, 40)
        blocks = np.zeros((40, 2, 2), dtype=complex)
        blocks[:, 0, 0] = 1.0
        blocks[:, 1, 0] = 0.3 + 0.2j
        blocks[:, 0, 1] = 99.0  # ignored: upper triangle comes from conjugation
        blocks[:, 1, 1] = -1.0
        op = BandedHermitianOperator(
            grid=g, block_size=2, diagonal_blocks=blocks, coupling=-1.0
        )
        dense = op.to_dense()
        assert np.max(np.abs(dense - dense.conj().T)) == 0.0

    def test_refinement_convergence_factor(self):
        errs = []
        for m in (600, 1200):
            g = Grid.symmetric(10.0, m)
            res = eig_banded(schrodinger_operator(g, lambda y: y * y), 1)
            errs.append(abs(res.eigenvalues[0] - 1.0))
        assert errs[0] / errs[1] >= 3.0
