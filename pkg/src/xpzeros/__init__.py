"""Regularized xp Hamiltonian and the average Riemann zeros.

The model is H = x (p + lp^2/p) on the half-line x >= lx.  Its classical
orbits are closed, its smooth level count matches the smooth Riemann zero
count, and its quantum spectrum is the zero set of a real Bessel-function
determinant.
"""

from xpzeros.classical import integrate_orbit, orbit_closed_form
from xpzeros.errors import (
    AccuracyError,
    ConvergenceError,
    DomainError,
    MissedRootWarning,
    NoSolutionError,
    XPError,
)
from xpzeros.params import ModelParams
from xpzeros.spectrum import (
    average_level,
    eigenfunction,
    solve_spectrum,
    spectral_determinant,
)

__all__ = [
    "AccuracyError",
    "ConvergenceError",
    "DomainError",
    "MissedRootWarning",
    "ModelParams",
    "NoSolutionError",
    "XPError",
    "average_level",
    "eigenfunction",
    "integrate_orbit",
    "orbit_closed_form",
    "solve_spectrum",
    "spectral_determinant",
]
