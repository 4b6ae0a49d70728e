"""Modified Bessel function K: closed forms, quadrature oracle, recurrences."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from susyspec.numkit import BesselUnderflow, bessel_k, bessel_k_scaled


def kv_quadrature(order: float, x: float) -> float:
    """Independent oracle: K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt."""
    t_max = 1.0
    # extend until the integrand is negligible
    while x * math.cosh(t_max) - abs(order) * t_max < 745.0 and t_max < 60.0:
        t_max += 1.0
    val, err = quad(
        lambda t: math.exp(-x * math.cosh(t)) * math.cosh(order * t),
        0.0,
        t_max,
        epsabs=1e-300,
        epsrel=1e-13,
        limit=400,
    )
    return val


def test_half_order_closed_form():
    # K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    assert bessel_k(0.5, 2.0) == pytest.approx(math.sqrt(math.pi / 4.0) * math.exp(-2.0), rel=1e-13)
    for x in (0.3, 1.0, 5.0, 40.0):
        assert bessel_k(0.5, x) == pytest.approx(
            math.sqrt(math.pi / (2 * x)) * math.exp(-x), rel=1e-13
        )


def test_against_quadrature_oracle():
    # the integral-representation oracle predates the routine; spot values
    assert bessel_k(0.0, 1.0) == pytest.approx(kv_quadrature(0.0, 1.0), rel=1e-12)
    for order in (0.0, 0.3, 1.0, 2.5, 6.0):
        for x in (0.05, 0.7, 2.0, 13.0, 80.0):
            assert bessel_k(order, x) == pytest.approx(
                kv_quadrature(order, x), rel=1e-12
            ), (order, x)


def test_asymptotic_ratio():
    # shared e^{-x} sqrt(pi/2x) asymptote: K_3/K_2 -> 1 like 1 + 5/(2x)
    # (the subleading term is (4 nu^2 - 1)/(8x), so the deviation at
    # x = 50 is 0.05 and reaches the 1e-2 scale only past x = 250)
    assert bessel_k(3.0, 50.0) / bessel_k(2.0, 50.0) == pytest.approx(1.0 + 2.5 / 50.0, abs=2e-3)
    assert bessel_k(3.0, 300.0) / bessel_k(2.0, 300.0) == pytest.approx(1.0, abs=1e-2)


def test_recurrence_relation():
    # K_{nu+1} = K_{nu-1} + (2 nu / x) K_nu to relative 1e-10
    for nu in np.linspace(0.5, 10.0, 12):
        for x in np.geomspace(0.1, 50.0, 12):
            lhs = bessel_k(nu + 1.0, x)
            rhs = bessel_k(nu - 1.0, x) + 2.0 * nu / x * bessel_k(nu, x)
            assert lhs == pytest.approx(rhs, rel=1e-10), (nu, x)


def test_accuracy_range_against_scipy():
    from scipy.special import kv

    rng = np.random.default_rng(42)
    for _ in range(600):
        nu = rng.uniform(0.0, 12.0)
        x = 10 ** rng.uniform(-6, math.log10(700.0))
        ours = bessel_k(nu, x)
        ref = kv(nu, x)
        assert ours == pytest.approx(ref, rel=1e-12), (nu, x)


def test_scaled_variant():
    from scipy.special import kve

    for nu in (0.0, 1.5, 4.0):
        for x in (0.5, 10.0, 600.0):
            assert bessel_k_scaled(nu, x) == pytest.approx(kve(nu, x), rel=1e-12)


def test_domain_errors():
    with pytest.raises(ValueError):
        bessel_k(1.0, 0.0)
    with pytest.raises(ValueError):
        bessel_k(1.0, -3.0)
    with pytest.raises(ValueError):
        bessel_k(math.inf, 1.0)


def test_underflow_flag():
    with pytest.warns(BesselUnderflow):
        val = bessel_k(0.5, 800.0)
    assert val == 0.0
    # the scaled variant stays finite out there
    assert bessel_k_scaled(0.5, 800.0) > 0.0
