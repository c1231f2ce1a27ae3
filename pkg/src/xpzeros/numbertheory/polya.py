"""Polya's fake zeta function, a two-term Bessel truncation of Riemann's Xi."""

from __future__ import annotations

import math

from xpzeros.numerics.bessel import bessel_k
from xpzeros.numerics.roots import find_real_roots

TWO_PI = 2.0 * math.pi


def polya_fake_zeta(t: float, rtol: float = 1e-12) -> float:
    """4 pi^2 (K_{9/4 + it/2}(2pi) + K_{9/4 - it/2}(2pi)) = 8 pi^2 Re K_{9/4 - it/2}(2pi)."""
    return 8.0 * math.pi**2 * bessel_k(complex(2.25, -0.5 * float(t)), TWO_PI, rtol).real


def polya_phase(t: float) -> float:
    return 0.5 * t * math.log(t / (TWO_PI * math.e)) + 7.0 * math.pi / 8.0


def polya_asymptotic(t: float) -> float:
    """pi^{1/4} 2^{-5/4} t^{7/4} e^{-pi t/4} cos((t/2) log(t/2 pi e) + 7 pi/8), for t >> 1."""
    t = float(t)
    return math.pi**0.25 * 2.0**-1.25 * t**1.75 * math.exp(-math.pi * t / 4.0) * math.cos(polya_phase(t))


def polya_zeros(t_max: float = 60.0, scan_step: float = 0.1, rtol: float = 1e-12):
    """Real zeros of the fake zeta function on (0, t_max]."""
    return find_real_roots(polya_fake_zeta, 0.01, t_max, scan_step, rtol)


def predicted_zero_count(t_max: float) -> int:
    """Zeros of the asymptotic cosine on (0, t_max]: half-integer crossings of the smooth count."""
    def count(t):
        return polya_phase(t) / math.pi

    # the phase has its minimum at t = 2 pi
    lo = count(TWO_PI)
    hi = count(max(t_max, TWO_PI))
    return math.floor(hi - 0.5) - math.floor(lo - 0.5)
