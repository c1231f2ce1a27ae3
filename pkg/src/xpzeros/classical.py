r"""Classical dynamics of :math:`H = x(p + \ell_p^2/p)` on the half line :math:`x \ge \ell_x`.

Hamilton's equations are

.. math::
    \dot x = x\,(1 - \ell_p^2/p^2), \qquad \dot p = -(p + \ell_p^2/p),

so that :math:`p^2 + \ell_p^2` decays as :math:`e^{-2t}`.  A cycle starts at
:math:`(\ell_x, p_0)`, turns at :math:`(E/2\ell_p, \ell_p)` and returns to the
wall at :math:`(\ell_x, \ell_p^2/p_0)` after :math:`T_E = \cosh^{-1}(E/2h)`,
where the bounce :math:`p \to \ell_p^2/p` restarts it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from xpzeros.errors import DomainError, StepSizeError
from xpzeros.numerics.quadrature import adaptive_integrate
from xpzeros.params import ModelParams


class PhaseSpacePoint(NamedTuple):
    x: complex
    p: complex


@dataclass(frozen=True)
class ClassicalOrbit:
    """One cycle sampled from the wall back to the wall, before the bounce."""

    energy: float
    p0: float
    period: float
    turning_x: float
    t: np.ndarray
    x: np.ndarray
    p: np.ndarray
    energy_drift: float = 0.0

    @property
    def samples(self):
        return [(float(t), PhaseSpacePoint(float(x), float(p))) for t, x, p in zip(self.t, self.x, self.p)]

    @property
    def end(self) -> PhaseSpacePoint:
        return PhaseSpacePoint(float(self.x[-1]), float(self.p[-1]))

    def after_bounce(self, params: ModelParams) -> PhaseSpacePoint:
        return PhaseSpacePoint(float(self.x[-1]), bounce(float(self.p[-1]), params))


def _check_momentum(p):
    if np.any(np.asarray(p) == 0):
        raise DomainError("momentum must be nonzero")


def hamiltonian(pt, params: ModelParams):
    """Energy x (p + lp^2 / p)."""
    x, p = pt
    _check_momentum(p)
    return x * (p + params.lp**2 / p)


def hamilton_rhs(pt, params: ModelParams):
    """Velocity field (dx/dt, dp/dt) = (dH/dp, -dH/dx)."""
    x, p = pt
    _check_momentum(p)
    lp2 = params.lp**2
    return x * (1.0 - lp2 / p**2), -(p + lp2 / p)


def bounce(p, params: ModelParams):
    """Momentum map at the wall, p -> lp^2 / p (an involution)."""
    _check_momentum(p)
    return params.lp**2 / p


def momentum_at_wall(E: float, params: ModelParams) -> float:
    """Initial momentum p0 with |p0| >= lp of the orbit with energy E, |E| >= 2h."""
    _require_energy(abs(E), params)
    e = abs(E) / params.lx
    p0 = 0.5 * (e + math.sqrt(max(e * e - 4.0 * params.lp**2, 0.0)))
    return math.copysign(p0, E)


def orbit_closed_form(p0, t, params: ModelParams) -> PhaseSpacePoint:
    """Exact trajectory from (lx, p0); ``t`` may be real, complex or an array.

    For real times the radicand (p0^2 + lp^2) e^{-2t} - lp^2 must stay
    non-negative.  Complex times use the principal square root.
    """
    p0 = float(p0)
    if abs(p0) < params.lp:
        raise DomainError(f"|p0| must be >= lp = {params.lp}, got {p0}")
    t = np.asarray(t)
    lp2 = params.lp**2
    decay = np.exp(-2.0 * t)
    radicand = (p0 * p0 + lp2) * decay - lp2
    if not np.iscomplexobj(t):
        if np.any(radicand < -1e-12 * lp2):
            raise DomainError("time beyond the end of the branch (negative radicand)")
        radicand = np.maximum(radicand, 0.0)
    root = np.sqrt(radicand)
    p = math.copysign(1.0, p0) * root
    x = params.lx / abs(p0) * root / decay
    if p.ndim == 0:
        return PhaseSpacePoint(p=p.item(), x=x.item())
    return PhaseSpacePoint(x, p)


def _rk4_step(state, dtau, lp2):
    # plain floats: numpy overhead dominates for a three-component state
    def rhs(x, p):
        p2 = p * p
        inv = 1.0 / (p2 + lp2)
        return x * (p2 - lp2) * inv, -p, p2 * inv  # last entry is dt/dtau

    x, p, t = state
    h2 = 0.5 * dtau
    a = rhs(x, p)
    b = rhs(x + h2 * a[0], p + h2 * a[1])
    c = rhs(x + h2 * b[0], p + h2 * b[1])
    d = rhs(x + dtau * c[0], p + dtau * c[1])
    w = dtau / 6.0
    return (x + w * (a[0] + 2 * b[0] + 2 * c[0] + d[0]),
            p + w * (a[1] + 2 * b[1] + 2 * c[1] + d[1]),
            t + w * (a[2] + 2 * b[2] + 2 * c[2] + d[2]))


def _integrate(p0, n_steps, params):
    lx, lp2 = params.lx, params.lp**2
    tau_end = math.log(p0 * p0 / lp2)
    dtau = tau_end / n_steps
    state = (lx, p0, 0.0)
    rows = [state]
    left_wall = False
    for _ in range(4 * n_steps):
        nxt = _rk4_step(state, dtau, lp2)
        if nxt[0] > lx:
            left_wall = True
        elif left_wall:
            # locate the return to the wall inside the last step
            base = state
            sigma = brentq(lambda s: _rk4_step(base, s, lp2)[0] - lx, 0.0, dtau, xtol=1e-15, rtol=1e-15)
            final = _rk4_step(base, sigma, lp2)
            rows.append((lx,) + final[1:])
            return np.array(rows)
        rows.append(nxt)
        state = nxt
    raise StepSizeError("orbit did not return to the wall")


def integrate_orbit(p0, params: ModelParams, steps: int = 4096, energy_tol: float = 1e-10,
                    max_doublings: int = 6) -> ClassicalOrbit:
    """Integrate Hamilton's equations numerically over one cycle from (lx, p0).

    Fixed-step RK4 is applied in the regularized time tau with
    dt/dtau = p^2/(p^2 + lp^2).  In tau the momentum obeys dp/dtau = -p and
    the fast collapse of x just before the wall, where dx/dt ~ -x lp^2/p^2
    blows up, becomes a smooth exponential.  Physical time is integrated
    alongside, so the period is a measured quantity.  The step count doubles
    until the relative energy drift falls below ``energy_tol``.
    """
    p0 = float(p0)
    lp = params.lp
    if abs(p0) < lp:
        raise DomainError(f"|p0| must be >= lp = {lp}, got {p0}")
    energy = float(hamiltonian((params.lx, p0), params))
    if abs(p0) == lp:
        z = np.zeros(1)
        return ClassicalOrbit(energy, p0, 0.0, params.lx, z, z + params.lx, z + p0)

    n = steps
    for _ in range(max_doublings + 1):
        rows = _integrate(p0, n, params)
        x, p, t = rows[:, 0], rows[:, 1], rows[:, 2]
        drift = float(np.max(np.abs(x * (p + lp * lp / p) - energy)) / abs(energy))
        if drift < energy_tol:
            return ClassicalOrbit(energy, p0, float(t[-1]), float(np.max(x)), t, x, p, drift)
        n *= 2
    raise StepSizeError(f"energy drift {drift:.2e} above {energy_tol:.0e} after {n // 2} steps")


def _require_energy(E, params):
    if not E >= 2.0 * params.h:
        raise DomainError(f"classical orbits need E >= 2h = {2.0 * params.h}, got {E}")


def period(E, params: ModelParams) -> float:
    """Period arccosh(E / 2h) of the orbit with energy E."""
    _require_energy(E, params)
    return math.acosh(E / (2.0 * params.h))


def turning_point(E, params: ModelParams) -> float:
    """Maximal elongation E / (2 lp)."""
    _require_energy(E, params)
    return E / (2.0 * params.lp)


def counting_smooth(E, params: ModelParams) -> float:
    """Semiclassical number of states: enclosed phase-space area over 2 pi hbar."""
    _require_energy(E, params)
    z = 2.0 * params.h / E
    return E / (2.0 * math.pi * params.hbar) * (math.acosh(1.0 / z) - math.sqrt(1.0 - z * z))


def counting_large_energy(E, params: ModelParams) -> float:
    """Leading large-E form (E / 2 pi hbar)(log(E/h) - 1)."""
    return E / (2.0 * math.pi * params.hbar) * (math.log(E / params.h) - 1.0)


def area_numeric(E, params: ModelParams, rtol: float = 1e-12) -> float:
    """Loop integral of p dx around one cycle, by quadrature.

    At fixed x the two branches solve p + lp^2/p = E/x.  The outward leg runs
    on the upper branch, the return leg on the lower one; the bounce segment
    at x = lx has dx = 0 and adds nothing.  Both legs are parametrized by
    x = x_m - (x_m - lx) s^2, which removes the square-root behaviour at the
    turning point.
    """
    _require_energy(E, params)
    x_m = turning_point(E, params)
    span = x_m - params.lx
    if span <= 0.0:
        return 0.0
    lp2 = params.lp**2

    def branch(sign):
        def integrand(s):
            x = x_m - span * s * s
            e = E / x
            disc = math.sqrt(max(e * e - 4.0 * lp2, 0.0))
            return 0.5 * (e + sign * disc) * 2.0 * span * s
        return integrand

    # dx = -2 span s ds; outward leg has s: 1 -> 0, return leg s: 0 -> 1
    out = -adaptive_integrate(branch(+1), 1.0, 0.0, rtol=rtol).value.real
    back = -adaptive_integrate(branch(-1), 0.0, 1.0, rtol=rtol).value.real
    return out + back
