"""Isospectrality of matrix families with scalar direct sums (small grids)."""

import numpy as np
import pytest

from susyspec.catalog import ParamSet, instance
from susyspec.engine import coulomb_references, isospectral_check, trig_references
from susyspec.numkit import Grid


def test_coulomb_pair_matches_matrix_levels():
    # half-integer mu: the level set equals the union of two scalar
    # Coulomb towers; three lowest levels on a moderate grid
    params = ParamSet(nu=2.0, mu=0.5, omega=1.0)
    w = instance("matrix2.inverse", params)
    grid = Grid.half_line(220.0, 22000)
    disc = isospectral_check(w, coulomb_references(params), grid, k=3)
    assert disc < 1e-5


def test_negative_control_detects_condition():
    params = ParamSet(nu=1.0, mu=0.3, omega=1.0)
    w = instance("matrix2.inverse", params)
    grid = Grid.half_line(220.0, 22000)
    disc = isospectral_check(w, coulomb_references(params), grid, k=3)
    assert disc > 1e-2


def test_tangent_family_pair():
    # half-integer nu with integer mu: decoupled trigonometric pair
    params = ParamSet(nu=2.5, mu=1.0, omega=2.0, lam=1.0)
    w = instance("matrix2.tan", params)
    grid = Grid.symmetric(np.pi / 2 * 0.9999, 6000)
    refs = trig_references(params)
    disc = isospectral_check(w, refs, grid, k=4)
    assert disc < 1e-4
