import math

import numpy as np
import pytest

from xpzeros import classical
from xpzeros.errors import DomainError
from xpzeros.params import ModelParams

P = ModelParams()
ENERGIES = np.linspace(2.5, 100.0, 10) * P.h


def test_hamilton_rhs_examples():
    # at p = lp the bounce term balances and x is stationary
    dx, dp = classical.hamilton_rhs((1.0, P.lp), P)
    assert dx == pytest.approx(0.0, abs=1e-15)
    assert dp == pytest.approx(-2 * P.lp)
    dx, dp = classical.hamilton_rhs((1.0, 2 * P.lp), P)
    assert dx == pytest.approx(0.75 * P.lx)
    assert dp == pytest.approx(-2.5 * P.lp)


def test_bounce_maps_to_other_branch():
    p = 3.0 * P.lp
    q = classical.bounce(p, P)
    assert q == pytest.approx(P.lp / 3.0)
    assert classical.hamiltonian((1.0, p), P) == pytest.approx(classical.hamiltonian((1.0, q), P))


@pytest.mark.parametrize("E", ENERGIES)
def test_period_matches_closed_form(E):
    orbit = classical.integrate_orbit(classical.momentum_at_wall(E, P), P)
    assert abs(orbit.period - math.acosh(E / (2 * P.h))) < 1e-8
    assert orbit.energy_drift < 1e-10


@pytest.mark.parametrize("E", ENERGIES[[0, 4, 9]])
def test_orbit_matches_closed_form(E):
    p0 = classical.momentum_at_wall(E, P)
    orbit = classical.integrate_orbit(p0, P)
    exact = classical.orbit_closed_form(p0, orbit.t, P)
    np.testing.assert_allclose(orbit.x, exact.x, rtol=1e-8)
    np.testing.assert_allclose(orbit.p, exact.p, rtol=1e-8, atol=1e-8 * P.lp)
    # the cycle closes at the wall on the other branch
    assert orbit.end.x == pytest.approx(P.lx, rel=1e-10)
    assert orbit.end.p == pytest.approx(P.lp**2 / p0, rel=1e-8)


def test_imaginary_time_period():
    E = 12.0 * P.h
    p0 = classical.momentum_at_wall(E, P)
    t = np.linspace(0.0, 0.9 * classical.period(E, P), 7)
    a = classical.orbit_closed_form(p0, t, P)
    b = classical.orbit_closed_form(p0, t + 1j * math.pi, P)
    np.testing.assert_allclose(b.x, a.x, rtol=1e-12)
    np.testing.assert_allclose(b.p, a.p, rtol=1e-12)


@pytest.mark.parametrize("E", ENERGIES)
def test_area_equals_counting(E):
    area = classical.area_numeric(E, P)
    assert area == pytest.approx(2 * math.pi * P.hbar * classical.counting_smooth(E, P), rel=1e-8)


def test_large_energy_remainder_is_order_inverse_energy():
    scaled = [abs(classical.counting_smooth(E, P) - classical.counting_large_energy(E, P)) * E
              for E in np.geomspace(5 * P.h, 1e4 * P.h, 12)]
    # the remainder times E tends to h^2 / (2 pi hbar)
    assert max(scaled) < 1.5 * P.h**2 / (2 * math.pi * P.hbar)
    assert scaled[-1] == pytest.approx(P.h**2 / (2 * math.pi * P.hbar), rel=1e-4)


def test_turning_point():
    assert classical.turning_point(10 * P.h, P) == pytest.approx(5 * P.lx)


def test_below_threshold():
    with pytest.raises(DomainError):
        classical.period(1.9 * P.h, P)
    with pytest.raises(DomainError):
        classical.integrate_orbit(0.5 * P.lp, P)


def test_other_units():
    params = ModelParams(hbar=0.5, lx=2.0, lp=3.0)
    E = 7 * params.h
    orbit = classical.integrate_orbit(classical.momentum_at_wall(E, params), params)
    assert orbit.period == pytest.approx(math.acosh(3.5), abs=1e-8)
