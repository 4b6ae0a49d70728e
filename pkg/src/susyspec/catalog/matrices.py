"""Constant spin matrices used across the catalog."""

import numpy as np

ID2 = np.eye(2)
SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]])
SIGMA_PLUS = 0.5 * (ID2 + SIGMA3)   # projector onto the upper component
SIGMA_MINUS = 0.5 * (ID2 - SIGMA3)

ID3 = np.eye(3)
# spin-1 generators in the Cartesian basis, (S_a)_bc = -i eps_abc
SPIN1_S1 = np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex)
SPIN1_S2 = np.array([[0, 0, 1j], [0, 0, 0], [-1j, 0, 0]], dtype=complex)
SPIN1_S3 = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex)


def spin_one_matrices():
    """The (S1, S2, S3) triple; [S1, S2] = i S3 and cyclic, S^2 = 2."""
    return SPIN1_S1, SPIN1_S2, SPIN1_S3
