r"""Modified Bessel function of the second kind for complex order and real argument.

The starting point is the integral representation

.. math::
    K_\nu(x) = \frac12 \int_{-\infty}^{\infty} e^{-x\cosh t + \nu t}\, dt ,

evaluated with the trapezoidal rule, which converges geometrically for this
entire, doubly exponentially decaying integrand.  On the real axis the result
for :math:`\nu = a + ib` has size :math:`\sim e^{-\pi |b|/2}` while the
integrand is of order one, so the sum cancels catastrophically once
:math:`|b|` grows.  Beyond ``REAL_AXIS_MAX_IMAG`` the line of integration is
moved to :math:`\mathrm{Im}\, t = \alpha`, through (or near) the saddle
:math:`\sinh t_s = \nu/x`.  The factor :math:`e^{i\nu\alpha}` is pulled out of
the sum, which removes the cancellation up to a bounded factor
:math:`e^{\mathrm{CONTOUR\_MARGIN}}`.

Symmetries are imposed structurally: the order is reduced to
:math:`\mathrm{Re}\,\nu \ge 0,\ \mathrm{Im}\,\nu \ge 0` using
:math:`K_{-\nu} = K_\nu` and :math:`K_{\bar\nu}(x) = \overline{K_\nu(x)}`.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.optimize import brentq

from xpzeros.errors import AccuracyError, ConvergenceError, DomainError
from xpzeros.numerics.types import QuadratureResult

#: Largest |Im nu| evaluated on the real axis.  Calibrated against the
#: extended-precision oracle: the cancellation factor there is at most
#: exp(pi/2) and the saddle line buys nothing.
REAL_AXIS_MAX_IMAG = 1.0
#: Allowed cancellation exponent on the rotated line, exp(3) ~ 20.
CONTOUR_MARGIN = 3.0
#: Integrand is dropped once it is exp(-UNDERFLOW_LOG) below its peak.
UNDERFLOW_LOG = 745.0
MAX_ORDER_REAL = 3.0
MIN_RTOL = 1e-13
MAX_REFINEMENTS = 14

_EPS = np.finfo(float).eps


def contour_angle(nu: complex, x: float, method: str = "auto") -> float:
    """Height of the integration line for ``Re nu >= 0, Im nu >= 0``."""
    b = nu.imag
    if method == "real" or (method == "auto" and b <= REAL_AXIS_MAX_IMAG):
        return 0.0
    if b <= 0.0:
        return 0.0
    saddle = abs(cmath.asinh(nu / x).imag)
    return min(saddle, max(0.0, math.pi / 2 - CONTOUR_MARGIN / b))


def _truncation(x_eff: float, a: float, u_peak: float) -> tuple[float, float]:
    """Left/right offsets from the peak where the integrand drops by UNDERFLOW_LOG."""

    def drop(u):
        return x_eff * (math.cosh(u) - math.cosh(u_peak)) - a * (u - u_peak) - UNDERFLOW_LOG

    out = []
    for sign in (-1.0, 1.0):
        step = 1.0
        while drop(u_peak + sign * step) < 0.0:
            step *= 2.0
        root = brentq(lambda s: drop(u_peak + sign * s), 0.0, step, xtol=1e-6)
        out.append(root)
    return out[0], out[1]


def _bessel_k_reduced(nu: complex, x: float, rtol: float, method: str) -> QuadratureResult:
    a = nu.real
    alpha = contour_angle(nu, x, method)
    shift = 1j * alpha
    x_eff = x * math.cos(alpha)
    if x_eff <= 0.0:
        raise AccuracyError(f"degenerate contour for nu={nu!r}, x={x!r}")
    u_peak = math.asinh(a / x_eff) if a > 0.0 else 0.0
    left, right = _truncation(x_eff, a, u_peak)

    def exponent(u):
        t = u + shift
        return -x * np.cosh(t) + nu * t

    step = 0.5 if alpha == 0.0 else min(0.5, (math.pi / 2 - alpha) / 2)
    k = np.arange(-math.ceil(left / step), math.ceil(right / step) + 1)
    u = u_peak + step * k
    expo = exponent(u)
    ref = float(expo.real.max())
    terms = np.exp(expo - ref)

    total = complex(math.fsum(terms.real), math.fsum(terms.imag))
    noise = float(np.sum((np.abs(terms) * (1.0 + np.abs(expo))) ** 2))
    count = u.size
    estimate = step * total
    diff = math.inf
    for level in range(MAX_REFINEMENTS):
        k = np.arange(-math.ceil(left / step), math.ceil(right / step))
        u = u_peak + step * (k + 0.5)
        expo = exponent(u)
        terms = np.exp(expo - ref)
        total += complex(math.fsum(terms.real), math.fsum(terms.imag))
        noise += float(np.sum((np.abs(terms) * (1.0 + np.abs(expo))) ** 2))
        count += u.size
        step /= 2.0
        refined = step * total
        diff = abs(refined - estimate)
        estimate = refined
        roundoff = _EPS * (step * math.sqrt(noise) + abs(ref) * abs(estimate))
        # geometric convergence: the refined sum is far better than diff
        if level >= 1 and (diff <= 0.1 * rtol * abs(estimate) or diff <= 4.0 * roundoff):
            break
    else:
        raise ConvergenceError(f"trapezoid did not settle for nu={nu!r}, x={x!r}")

    if estimate == 0.0:
        raise AccuracyError(f"K_nu(x) underflows for nu={nu!r}, x={x!r}")
    rel_err = (diff + roundoff) / abs(estimate)
    if rel_err > rtol:
        raise AccuracyError(
            f"rtol={rtol:.1e} unreachable for nu={nu!r}, x={x!r} (estimated {rel_err:.1e})"
        )
    value = 0.5 * estimate * cmath.exp(ref)
    return QuadratureResult(value, float(rel_err * abs(value)), count)


def bessel_k(nu, x, rtol=1e-12, method="auto", full_output=False):
    """Modified Bessel function :math:`K_\\nu(x)` for complex order, real ``x > 0``.

    Parameters
    ----------
    nu : complex
        Order, with ``|Re nu| <= 3``.
    x : float
        Positive argument.
    rtol : float
        Target relative accuracy, at least ``1e-13``.
    method : {"auto", "real", "rotated"}
        Integration line.  ``"real"`` forces the real axis, which is only
        usable for small ``|Im nu|``; it exists for calibration.
    full_output : bool
        Return a :class:`QuadratureResult` (absolute error estimate and number
        of integrand evaluations) instead of the bare value.

    Raises
    ------
    DomainError
        ``x <= 0``, non-finite input or order outside the supported strip.
    AccuracyError
        ``rtol`` cannot be reached in double precision at this ``(nu, x)``.
    """
    nu = complex(nu)
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"bessel_k needs x > 0, got {x!r}")
    if not (math.isfinite(nu.real) and math.isfinite(nu.imag)):
        raise DomainError(f"non-finite order {nu!r}")
    if abs(nu.real) > MAX_ORDER_REAL:
        raise DomainError(f"|Re nu| must be <= {MAX_ORDER_REAL}, got {nu!r}")
    if rtol < MIN_RTOL:
        raise DomainError(f"rtol must be >= {MIN_RTOL}, got {rtol!r}")
    if method not in ("auto", "real", "rotated"):
        raise ValueError(f"unknown method {method!r}")

    if nu.real < 0.0 or (nu.real == 0.0 and nu.imag < 0.0):
        nu = -nu
    flip = nu.imag < 0.0
    if flip:
        nu = nu.conjugate()
    res = _bessel_k_reduced(nu, x, rtol, method)
    if flip:
        res = QuadratureResult(res.value.conjugate(), res.error_estimate, res.evaluations)
    return res if full_output else res.value


def bessel_k_array(nu, xs, rtol=1e-12):
    """Evaluate :func:`bessel_k` at fixed order over an array of arguments."""
    xs = np.asarray(xs, dtype=float)
    out = np.empty(xs.shape, dtype=complex)
    for idx, x in np.ndenumerate(xs):
        out[idx] = bessel_k(nu, x, rtol)
    return out
