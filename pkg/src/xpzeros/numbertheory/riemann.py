"""Smooth Riemann zero counting, the Xi function on the critical line, and the zero fixture."""

from __future__ import annotations

import cmath
import math
import os
from importlib import resources
from pathlib import Path

from scipy.optimize import brentq

from xpzeros.numerics.roots import find_real_roots
from xpzeros.numerics.special import log_gamma, zeta_critical_line

TWO_PI = 2.0 * math.pi
FIXTURE_ENV = "XP_FIXTURES"
FIXTURE_HEADER = "# riemann_zeros v1 count={count}"


def riemann_counting_smooth(E: float) -> float:
    """Smooth part (E/2pi)(log(E/2pi) - 1) + 7/8 of the zero counting function.

    Valid as an asymptotic statement for E > 2 pi; smaller E is extrapolation.
    """
    return E / TWO_PI * (math.log(E / TWO_PI) - 1.0) + 0.875


def riemann_average_zero(n: int) -> float:
    """Height t with riemann_counting_smooth(t) = n + 1/2, on the increasing branch t > 2 pi."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    target = n + 0.5
    hi = 4.0 * TWO_PI
    while riemann_counting_smooth(hi) < target:
        hi *= 2.0
    return brentq(lambda t: riemann_counting_smooth(t) - target, TWO_PI, hi, xtol=1e-15, rtol=1e-15)


def riemann_xi_complex(t: float) -> complex:
    """(1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s) at s = 1/2 + it, before taking the real part."""
    s = complex(0.5, float(t))
    log_prefactor = log_gamma(0.5 * s) - 0.5 * s * math.log(math.pi)
    return 0.5 * s * (s - 1.0) * cmath.exp(log_prefactor) * zeta_critical_line(t)


def riemann_xi(t: float) -> float:
    """Riemann Xi(t), real and even for real t (|t| <= 120)."""
    return riemann_xi_complex(t).real


def riemann_zeros(t_max: float = 120.0, scan_step: float = 0.05, rtol: float = 1e-13):
    """Ordinates of the zeros of Xi in (0, t_max] by sign scanning."""
    return find_real_roots(riemann_xi, 0.01, t_max, scan_step, rtol)


def _fixture_path(path=None) -> Path:
    if path is not None:
        return Path(path)
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("xpzeros").joinpath("data/riemann_zeros.txt")))


def write_zero_fixture(path, zeros) -> None:
    lines = [FIXTURE_HEADER.format(count=len(zeros))]
    lines += [f"{z:.12g}" for z in zeros]
    Path(path).write_text("\n".join(lines) + "\n")


def load_zero_fixture(path=None) -> list[float]:
    """Read the zero fixture; ``XP_FIXTURES`` overrides the packaged file."""
    text = _fixture_path(path).read_text().splitlines()
    if not text or not text[0].startswith("# riemann_zeros v1 count="):
        raise ValueError("not a riemann_zeros v1 fixture")
    count = int(text[0].rsplit("=", 1)[1])
    zeros = [float(line) for line in text[1:] if line.strip()]
    if len(zeros) != count:
        raise ValueError(f"fixture header promises {count} zeros, found {len(zeros)}")
    return zeros


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "riemann_zeros.txt"
    write_zero_fixture(target, riemann_zeros())
