"""susyspec: shape-invariant supersymmetric quantum mechanics.

Superpotential catalogs (scalar, 2x2 and 3x3 matrix), the ladder-operator
exact-solution engine with dual shape invariance, discretized supercharges
for the uniform-field problem, radial models, position-dependent-mass
spectral solvers, and a finite-difference eigensolver oracle that
cross-validates every analytic spectrum.
"""

from . import catalog, engine, models, numkit, pauli, pdm

__all__ = ["catalog", "engine", "models", "numkit", "pauli", "pdm"]
__version__ = "0.1.0"
