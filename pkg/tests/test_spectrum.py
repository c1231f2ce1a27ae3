import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xpzeros import spectrum
from xpzeros.errors import DomainError, GridResolutionError, MissedRootWarning, NoSolutionError
from xpzeros.params import ModelParams

from _oracle_values import (
    SPECTRUM_Q3,
    SPECTRUM_Q4,
    SPECTRUM_RIEMANN_NEG,
    SPECTRUM_RIEMANN_POS,
    SPECTRUM_THETA_PI,
)

P = ModelParams()


def test_riemann_configuration_roots():
    res = spectrum.solve_spectrum(P, 5.0, 60.0)
    np.testing.assert_allclose(res.energies, SPECTRUM_RIEMANN_POS, rtol=1e-9)
    assert [ev.index for ev in res.eigenvalues] == list(range(12))
    assert max(ev.determinant_residual for ev in res.eigenvalues) < 1e-8
    assert res.predicted_count == 13
    assert not res.count_mismatch


def test_negative_side():
    res = spectrum.solve_spectrum(P, -60.0, -5.0)
    np.testing.assert_allclose(res.energies, SPECTRUM_RIEMANN_NEG, rtol=1e-9)
    assert [ev.index for ev in res.eigenvalues] == list(range(-12, 0))


def test_theta_pi_has_zero_mode_and_paired_roots():
    res = spectrum.solve_spectrum(ModelParams(theta=math.pi), -25.0, 25.0)
    np.testing.assert_allclose(res.energies, SPECTRUM_THETA_PI, atol=1e-9)
    assert [ev.index for ev in res.eigenvalues] == [-1, 0, 1]


@pytest.mark.parametrize("q, ref", [(3, SPECTRUM_Q3), (4, SPECTRUM_Q4)])
def test_dirichlet_configurations(q, ref):
    params = ModelParams.from_action(2 * math.pi / q, theta=7 * math.pi / 4)
    res = spectrum.solve_spectrum(params, 0.5, 60.0)
    np.testing.assert_allclose(res.energies, ref, rtol=1e-9)


@settings(max_examples=25, deadline=None)
@given(E=st.floats(-80.0, 80.0), theta=st.floats(0.0, 2 * math.pi))
def test_determinant_is_real_and_matches_two_term_sum(E, theta):
    params = ModelParams(theta=theta)
    direct = spectrum.spectral_determinant_terms(E, params)
    env = spectrum.determinant_envelope(E, params)
    assert abs(direct.imag) <= 1e-13 * env
    assert abs(direct.real - spectrum.spectral_determinant(E, params)) <= 1e-13 * env


def test_theta_shift_by_two_pi_flips_sign():
    # theta enters through e^{i theta/2}; the stored angle is reduced mod 2 pi
    a = spectrum.spectral_determinant(30.0, ModelParams(theta=0.3))
    b = spectrum.spectral_determinant(30.0, ModelParams(theta=0.3 + 2 * math.pi))
    assert abs(a) == pytest.approx(abs(b), rel=1e-14)


def test_average_level_first_value():
    assert spectrum.average_level(0, P) == pytest.approx(14.5213469530656, rel=1e-13)
    assert spectrum.first_level_integer(P) == -1
    with pytest.raises(NoSolutionError):
        spectrum.average_level(-1, P)


def test_average_levels_solve_phase_condition():
    for n in range(20):
        E = spectrum.average_level(n, P)
        assert spectrum.asymptotic_phase(E, P) == pytest.approx(spectrum.first_level_integer(P) + n + 0.5,
                                                                abs=1e-12)


def test_asymptotic_determinant_at_crests():
    # compare at crests of the cosine, where the relative error is meaningful
    worst = 0.0
    for m in range(8, 16):
        E = spectrum._solve_increasing(lambda e: spectrum.asymptotic_phase(e, P), m, P.h)
        ratio = spectrum.spectral_determinant(E, P) / spectrum.spectral_determinant_asymptotic(E, P)
        worst = max(worst, abs(ratio - 1))
    assert worst < 0.05


def test_roots_track_smooth_levels_at_high_energy():
    res = spectrum.solve_spectrum(P, 40.0, 60.0)
    levels = [spectrum.average_level(n, P) for n in range(16)]
    deltas = [abs(d) for _, d in spectrum.pair_with_levels(res.energies, levels)]
    assert max(deltas) < 0.5
    assert all(b < a for a, b in zip(deltas, deltas[1:]))


def test_missed_root_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        res = spectrum.solve_spectrum(P, 5.0, 60.0, scan_step=12.0)
    assert res.count_mismatch
    assert any(issubclass(w.category, MissedRootWarning) for w in caught)


def test_bad_range():
    with pytest.raises(DomainError):
        spectrum.solve_spectrum(P, 10.0, 10.0)


def test_eigenfunction_satisfies_operator_and_boundary():
    E = SPECTRUM_RIEMANN_POS[0]
    psi = spectrum.eigenfunction_grid(E, P)
    assert spectrum.operator_residual(psi, E, P) < 1e-8
    assert spectrum.relative_boundary_residual(psi, P) < 1e-7


def test_off_spectrum_energy_fails_boundary_condition():
    E = 0.5 * (SPECTRUM_RIEMANN_POS[0] + SPECTRUM_RIEMANN_POS[1])
    psi = spectrum.eigenfunction_grid(E, P)
    # the differential-integral equation holds for every E
    assert spectrum.operator_residual(psi, E, P) < 1e-8
    assert spectrum.relative_boundary_residual(psi, P) > 0.1


def test_boundary_residual_is_proportional_to_determinant():
    E = 27.0
    psi = spectrum.eigenfunction_grid(E, P)
    resid = spectrum.boundary_residual(psi, P)
    nu = complex(0.5, 0.5 * E / P.hbar)
    expected = P.hbar * P.lx**nu * np.exp(0.5j * P.theta) * spectrum.spectral_determinant(E, P)
    assert abs(resid - expected) < 1e-9 * abs(expected)


def test_zero_mode():
    params = ModelParams(theta=math.pi)
    assert abs(spectrum.spectral_determinant(0.0, params)) < 1e-15
    nodes = spectrum.build_grid(0.0, params)
    psi = spectrum.sample_grid_function(lambda x: spectrum.zero_mode(x, params), nodes, params)
    assert spectrum.operator_residual(psi, 0.0, params) < 1e-8
    assert spectrum.relative_boundary_residual(psi, params) < 1e-10


def test_coarse_grid_is_rejected():
    E = 50.0
    nodes = spectrum.build_grid(E, P, points_per_wavelength=3, points_per_decay=2)
    psi = spectrum.sample_grid_function(lambda x: spectrum.eigenfunction(E, x, P), nodes, P)
    with pytest.raises(GridResolutionError):
        spectrum.apply_hamiltonian(psi, P)


def test_grid_function_is_read_only():
    psi = spectrum.eigenfunction_grid(20.0, P)
    with pytest.raises(ValueError):
        psi.values[0] = 0.0
    with pytest.raises(DomainError):
        spectrum.eigenfunction(20.0, 0.5, P)
