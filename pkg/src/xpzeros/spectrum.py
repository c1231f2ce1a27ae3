r"""Quantum spectrum of the regularized xp Hamiltonian.

Eigenfunctions are :math:`\psi_E(x) = x^{iE/2\hbar} K_{1/2 - iE/2\hbar}(\ell_p x/\hbar)`.
They solve the integro-differential eigenvalue equation for every real E;
the non-local boundary condition selects the spectrum as the zeros of

.. math::
    \Xi(E) = e^{-i\vartheta/2} K_{1/2 + iE/2\hbar}(h/\hbar)
           + e^{i\vartheta/2} K_{1/2 - iE/2\hbar}(h/\hbar)
           = 2\,\mathrm{Re}\left[e^{i\vartheta/2} K_{1/2 - iE/2\hbar}(h/\hbar)\right].

For large E the zeros approach the solutions of
:math:`(E/2\pi\hbar)\log(E/he) - \vartheta/2\pi = m + 1/2`.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.integrate import trapezoid
from scipy.interpolate import make_interp_spline
from scipy.optimize import brentq

from xpzeros.errors import (
    DomainError,
    GridResolutionError,
    MissedRootWarning,
    NoSolutionError,
    TailTruncationError,
)
from xpzeros.numerics.bessel import bessel_k
from xpzeros.numerics.roots import find_real_roots, scan_grid
from xpzeros.params import ModelParams

SPLINE_DEGREE = 7
#: relative disagreement between degree-7 and degree-5 derivatives that
#: signals an under-resolved grid
RESOLUTION_LIMIT = 1e-3
TAIL_LIMIT = 1e-10


# --------------------------------------------------------------------------
# eigenfunctions and grids


def eigenfunction(E, x, params: ModelParams, rtol=1e-12):
    """Unnormalized eigenfunction psi_E(x); ``x`` may be a scalar or an array, x >= lx."""
    xs = np.asarray(x, dtype=float)
    if np.any(xs < params.lx * (1 - 1e-14)):
        raise DomainError(f"eigenfunctions live on x >= lx = {params.lx}")
    order = complex(0.5, -0.5 * E / params.hbar)
    phase_rate = 0.5 * E / params.hbar
    out = np.empty(xs.shape, dtype=complex)
    for idx, xv in np.ndenumerate(xs):
        out[idx] = cmath.exp(1j * phase_rate * math.log(xv)) * bessel_k(order, params.lp * xv / params.hbar, rtol)
    return out if out.ndim else complex(out)


@dataclass(frozen=True)
class GridFunction:
    """Samples of a wave function on a grid starting at the wall x = lx.

    ``decay_exponent`` is the rate k of the asymptotic e^{-k x} fall-off,
    used to account for the part of the integrals beyond the last node.
    Arrays are made read-only.
    """

    nodes: np.ndarray
    values: np.ndarray
    decay_exponent: float

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        values = np.array(self.values, dtype=complex)
        if nodes.ndim != 1 or nodes.shape != values.shape:
            raise ValueError("nodes and values must be 1-d arrays of equal length")
        if nodes.size < SPLINE_DEGREE + 3:
            raise ValueError("too few nodes")
        if np.any(np.diff(nodes) <= 0.0):
            raise ValueError("nodes must be strictly increasing")
        if not self.decay_exponent > 0.0:
            raise ValueError("decay_exponent must be positive")
        nodes.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.nodes.size

    def scaled(self, c):
        return GridFunction(self.nodes, c * self.values, self.decay_exponent)

    def __add__(self, other):
        if not np.array_equal(self.nodes, other.nodes):
            raise ValueError("grid functions live on different grids")
        return GridFunction(self.nodes, self.values + other.values, self.decay_exponent)


def build_grid(E, params: ModelParams, points_per_wavelength=32, points_per_decay=12, x_max=None):
    """Nodes from lx to x_max, graded to the local oscillation and decay scales.

    The local wavelength of psi_E below the turning point is 2 pi hbar x / |E|;
    beyond it the function decays on the scale hbar / lp.  Nodes are equally
    spaced in the variable s(x) = int rho dx with density
    rho = sqrt((ppw |E| / 2 pi hbar x)^2 + (ppd lp / hbar)^2), so the spacing
    changes smoothly.
    """
    lx, hbar, lp = params.lx, params.hbar, params.lp
    if x_max is None:
        x_max = max(4.0 * abs(E) / (2.0 * lp), lx + 40.0 * hbar / lp)
    fine = np.geomspace(lx, x_max, 20001)
    rho = np.hypot(points_per_wavelength * abs(E) / (2 * math.pi * hbar * fine),
                   points_per_decay * lp / hbar)
    s = np.concatenate([[0.0], np.cumsum(0.5 * (rho[1:] + rho[:-1]) * np.diff(fine))])
    n = max(int(math.ceil(s[-1])) + 1, 4 * SPLINE_DEGREE)
    nodes = np.interp(np.linspace(0.0, s[-1], n), s, fine)
    nodes[0], nodes[-1] = lx, x_max
    return nodes


def sample_grid_function(func, nodes, params: ModelParams):
    return GridFunction(nodes, func(nodes), params.lp / params.hbar)


def eigenfunction_grid(E, params: ModelParams, points_per_wavelength=32, points_per_decay=12, rtol=1e-12):
    """psi_E sampled on :func:`build_grid`, extended until the tail is below 1e-14 of the peak."""
    x_max = None
    for _ in range(8):
        nodes = build_grid(E, params, points_per_wavelength, points_per_decay, x_max)
        values = eigenfunction(E, nodes, params, rtol)
        mags = np.abs(values)
        if mags[-1] < 1e-14 * mags.max():
            return GridFunction(nodes, values, params.lp / params.hbar)
        x_max = nodes[-1] + 10.0 * params.hbar / params.lp
    raise TailTruncationError("eigenfunction tail did not fall below 1e-14 of its peak")


def zero_mode(x, params: ModelParams):
    """Closed form x^{-1/2} exp(-lp x / hbar) of the E = 0 state at theta = pi."""
    x = np.asarray(x, dtype=float)
    return x**-0.5 * np.exp(-params.lp * x / params.hbar) + 0j


# --------------------------------------------------------------------------
# operator action and boundary condition


def _spline(x, y, k):
    return make_interp_spline(x, y, k=k)


def _tail_integrals(nodes, f, decay):
    """int_x^inf f(y) dy at every node, accumulated from the far end inwards."""
    z = -nodes[::-1]
    anti = _spline(z, f[::-1], SPLINE_DEGREE).antiderivative()
    inner = anti(z)[::-1] - anti(z[0])
    return inner + f[-1] / decay


class HamiltonianParts(NamedTuple):
    nodes: np.ndarray
    derivative_term: np.ndarray
    integral_term: np.ndarray
    resolution: float


def hamiltonian_parts(psi: GridFunction, params: ModelParams, trim: int = SPLINE_DEGREE) -> HamiltonianParts:
    """The two pieces of H psi, each already multiplied by -i x^{1/2}.

    derivative_term = -i x^{1/2} hbar d/dx (x^{1/2} psi)
    integral_term   = -i x^{1/2} (lp^2/hbar) int_x^inf y^{1/2} psi(y) dy
    ``resolution`` compares degree-7 and degree-5 spline derivatives.
    """
    x = psi.nodes
    root = np.sqrt(x)
    f = root * psi.values
    deriv = _spline(x, f, SPLINE_DEGREE).derivative()(x)
    deriv_lo = _spline(x, f, SPLINE_DEGREE - 2).derivative()(x)
    tail = _tail_integrals(x, f, psi.decay_exponent)
    sl = slice(trim, x.size - trim)
    scale = math.sqrt(trapezoid(np.abs(deriv[sl]) ** 2, x[sl]))
    resolution = math.sqrt(trapezoid(np.abs(deriv[sl] - deriv_lo[sl]) ** 2, x[sl])) / scale if scale else 0.0
    d_term = -1j * root * params.hbar * deriv
    i_term = -1j * root * (params.lp**2 / params.hbar) * tail
    return HamiltonianParts(x[sl], d_term[sl], i_term[sl], resolution)


def apply_hamiltonian(psi: GridFunction, params: ModelParams, trim: int = SPLINE_DEGREE) -> GridFunction:
    """H psi on the interior nodes (``trim`` nodes dropped at each end).

    Raises GridResolutionError when the derivative is not resolved to
    ``RESOLUTION_LIMIT``.
    """
    parts = hamiltonian_parts(psi, params, trim)
    if parts.resolution > RESOLUTION_LIMIT:
        raise GridResolutionError(f"derivative unresolved (relative spread {parts.resolution:.1e})")
    return GridFunction(parts.nodes, parts.derivative_term + parts.integral_term, psi.decay_exponent)


def operator_residual(psi: GridFunction, E, params: ModelParams, trim: int = SPLINE_DEGREE) -> float:
    """Relative L2 norm of H psi - E psi on the interior nodes.

    Normalized by the sum of the norms of the two operator pieces, which stays
    meaningful at E = 0 where H psi itself vanishes.
    """
    parts = hamiltonian_parts(psi, params, trim)
    if parts.resolution > RESOLUTION_LIMIT:
        raise GridResolutionError(f"derivative unresolved (relative spread {parts.resolution:.1e})")
    x = parts.nodes
    sl = slice(trim, psi.nodes.size - trim)
    resid = parts.derivative_term + parts.integral_term - E * psi.values[sl]

    def norm(v):
        return math.sqrt(trapezoid(np.abs(v) ** 2, x))

    return norm(resid) / (norm(parts.derivative_term) + norm(parts.integral_term))


def _boundary_terms(psi: GridFunction, params: ModelParams):
    x = psi.nodes
    if not math.isclose(x[0], params.lx, rel_tol=1e-12):
        raise DomainError("grid must start at the wall x = lx")
    f = np.sqrt(x) * psi.values
    anti = _spline(x, f, SPLINE_DEGREE).antiderivative()
    body = anti(x[-1]) - anti(x[0])
    tail = f[-1] / psi.decay_exponent
    if abs(tail) > TAIL_LIMIT * max(abs(body), np.abs(f).max() / psi.decay_exponent):
        raise TailTruncationError(f"tail beyond x = {x[-1]:g} is not negligible ({abs(tail):.1e})")
    if abs(f[-2]) > 0.0 and abs(f[-1]) > 0.0:
        rate = -math.log(abs(f[-1]) / abs(f[-2])) / (x[-1] - x[-2])
        if not 0.5 * psi.decay_exponent < rate < 2.0 * psi.decay_exponent:
            raise TailTruncationError(f"samples decay at rate {rate:.3g}, expected {psi.decay_exponent:.3g}")
    wall = params.hbar * math.sqrt(params.lx) * cmath.exp(1j * params.theta) * psi.values[0]
    return wall, params.lp * (body + tail)


def boundary_residual(psi: GridFunction, params: ModelParams) -> complex:
    """hbar lx^{1/2} e^{i theta} psi(lx) + lp int_lx^inf x^{1/2} psi(x) dx."""
    wall, bulk = _boundary_terms(psi, params)
    return complex(wall + bulk)


def relative_boundary_residual(psi: GridFunction, params: ModelParams) -> float:
    wall, bulk = _boundary_terms(psi, params)
    return abs(wall + bulk) / (abs(wall) + abs(bulk))


# --------------------------------------------------------------------------
# spectral determinant


def _order(E, params):
    return complex(0.5, -0.5 * float(E) / params.hbar)


def spectral_determinant(E, params: ModelParams, rtol=1e-12) -> float:
    """Real spectral determinant 2 Re[e^{i theta/2} K_{1/2 - iE/2hbar}(h/hbar)]."""
    k = bessel_k(_order(E, params), params.h / params.hbar, rtol)
    return 2.0 * (cmath.exp(0.5j * params.theta) * k).real


def spectral_determinant_terms(E, params: ModelParams, rtol=1e-12) -> complex:
    """The two-term sum evaluated literally, with two independent Bessel calls."""
    x = params.h / params.hbar
    plus = bessel_k(complex(0.5, 0.5 * float(E) / params.hbar), x, rtol)
    minus = bessel_k(_order(E, params), x, rtol)
    return cmath.exp(-0.5j * params.theta) * plus + cmath.exp(0.5j * params.theta) * minus


def determinant_envelope(E, params: ModelParams, rtol=1e-12) -> float:
    """2 |K_{1/2 - iE/2hbar}(h/hbar)|, the local amplitude of the determinant."""
    return 2.0 * abs(bessel_k(_order(E, params), params.h / params.hbar, rtol))


def spectral_determinant_asymptotic(E, params: ModelParams) -> float:
    """Large-E form sqrt(4 pi hbar/h) e^{-pi E/4hbar} cos((E/2hbar) log(E/he) - theta/2).

    Only meaningful for E >> h; at small E it is a rough guide.
    """
    E = float(E)
    hbar, h = params.hbar, params.h
    return (math.sqrt(4.0 * math.pi * hbar / h) * math.exp(-math.pi * E / (4.0 * hbar))
            * math.cos(0.5 * E / hbar * math.log(E / (h * math.e)) - 0.5 * params.theta))


def asymptotic_phase(E, params: ModelParams) -> float:
    """(E/2 pi hbar) log(E/he) - theta/2 pi; the determinant's zeros sit near half-integers."""
    return E / (2.0 * math.pi * params.hbar) * math.log(E / (params.h * math.e)) - params.theta / (2.0 * math.pi)


def first_level_integer(params: ModelParams) -> int:
    """Smallest integer m whose level m + 1/2 lies on the increasing branch (E > h)."""
    return math.floor(asymptotic_phase(params.h, params) - 0.5) + 1


def _solve_increasing(func, target, lo):
    hi = 2.0 * lo
    while func(hi) < target:
        hi *= 2.0
    return brentq(lambda e: func(e) - target, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)


def average_level(n: int, params: ModelParams) -> float:
    """n-th smooth level, n = 0, 1, ..., counted from the bottom of the increasing branch.

    Solves asymptotic_phase(E) = m + 1/2 with m = first_level_integer + n
    by bracketed root finding on E > h.
    """
    if n < 0:
        raise NoSolutionError(f"level index must be >= 0, got {n}")
    target = first_level_integer(params) + n + 0.5
    return _solve_increasing(lambda e: asymptotic_phase(e, params), target, params.h)


def predicted_level_count(E_lo, E_hi, params: ModelParams) -> int:
    """Number of smooth levels in [E_lo, E_hi]; negative energies use theta -> -theta."""
    def count_positive(lo, hi, p):
        lo, hi = max(lo, p.h), max(hi, p.h)
        if hi <= lo:
            return 0
        return math.floor(asymptotic_phase(hi, p) - 0.5) - math.floor(asymptotic_phase(lo, p) - 0.5)

    total = 0
    if E_hi > 0:
        total += count_positive(max(E_lo, 0.0), E_hi, params)
    if E_lo < 0:
        mirrored = ModelParams(params.hbar, params.lx, params.lp, -params.theta)
        total += count_positive(max(-E_hi, 0.0), -E_lo, mirrored)
    return total


# --------------------------------------------------------------------------
# eigenvalue solver


class Eigenvalue(NamedTuple):
    index: int
    energy: float
    determinant_residual: float
    operator_residual: float | None


@dataclass(frozen=True)
class SpectrumResult:
    params: ModelParams
    scan_range: tuple[float, float]
    eigenvalues: tuple[Eigenvalue, ...]
    tolerance: float
    predicted_count: int = 0
    count_mismatch: bool = False
    scan_step: float = field(default=0.0, compare=False)

    @property
    def energies(self) -> np.ndarray:
        return np.array([ev.energy for ev in self.eigenvalues])

    def __len__(self):
        return len(self.eigenvalues)


def default_scan_step(E_lo, E_hi, params: ModelParams) -> float:
    """A quarter of the smallest mean level spacing in the range."""
    e = max(abs(E_lo), abs(E_hi))
    return math.pi * params.hbar / (2.0 * math.log(e / params.h + math.e))


def solve_spectrum(params: ModelParams, E_lo, E_hi, rtol=1e-10, scan_step=None,
                   operator_check=False, bessel_rtol=1e-12) -> SpectrumResult:
    """All simple zeros of the spectral determinant in [E_lo, E_hi].

    Roots are indexed in increasing order: negative energies get -1, -2, ...
    outward from zero, a root at E = 0 gets 0 and positive ones count up from
    the first positive root.  A :class:`MissedRootWarning` is emitted when
    the count departs from the smooth prediction by more than one per ten
    levels.  With ``operator_check`` each eigenfunction is sampled and its
    operator residual recorded (slow).
    """
    E_lo, E_hi = float(E_lo), float(E_hi)
    if not E_lo < E_hi:
        raise DomainError(f"need E_lo < E_hi, got [{E_lo}, {E_hi}]")
    step = scan_step or default_scan_step(E_lo, E_hi, params)

    def det(e):
        return spectral_determinant(e, params, bessel_rtol)

    grid = scan_grid(E_lo, E_hi, step)
    values = np.array([det(e) for e in grid])
    found = find_real_roots(det, E_lo, E_hi, step, rtol, values=values)

    zero_tol = found.tolerance
    negatives = [r for r in found if r < -zero_tol]
    zeros = [r for r in found if abs(r) <= zero_tol]
    positives = [r for r in found if r > zero_tol]
    indexed = [(-(len(negatives) - i), r) for i, r in enumerate(negatives)]
    indexed += [(0, r) for r in zeros[:1]]
    start = 1 if zeros else 0
    indexed += [(start + i, r) for i, r in enumerate(positives)]

    eigenvalues = []
    for idx, energy in indexed:
        resid = abs(det(energy)) / determinant_envelope(energy, params, bessel_rtol)
        op = None
        if operator_check:
            op = operator_residual(eigenfunction_grid(energy, params), energy, params)
        eigenvalues.append(Eigenvalue(idx, energy, resid, op))

    predicted = predicted_level_count(E_lo, E_hi, params)
    mismatch = abs(len(eigenvalues) - predicted) > max(1.0, predicted / 10.0)
    if mismatch:
        warnings.warn(f"found {len(eigenvalues)} roots in [{E_lo}, {E_hi}], smooth count predicts {predicted}",
                      MissedRootWarning, stacklevel=2)
    return SpectrumResult(params, (E_lo, E_hi), tuple(eigenvalues), found.tolerance, predicted, mismatch, step)


def pair_with_levels(energies, levels):
    """Nearest-neighbour pairing of each energy with a level; returns (level, delta) pairs."""
    levels = np.asarray(levels, dtype=float)
    out = []
    for e in energies:
        j = int(np.argmin(np.abs(levels - e)))
        out.append((float(levels[j]), float(e - levels[j])))
    return out
