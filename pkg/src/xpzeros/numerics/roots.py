"""Real roots of a scalar function by sign scanning plus bracketed refinement."""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from xpzeros.errors import DomainError
from xpzeros.numerics.types import RootList


def scan_grid(lo: float, hi: float, scan_step: float) -> np.ndarray:
    n = max(1, math.ceil((hi - lo) / scan_step - 1e-12))
    return np.linspace(lo, hi, n + 1)


def find_real_roots(f, lo, hi, scan_step, rtol=1e-12, values=None):
    """Locate every sign change of ``f`` on a uniform grid over ``[lo, hi]``.

    Each bracket is refined with Brent's method to ``rtol * max(1, |x|)``.
    Zeros of even multiplicity produce no sign change and are not reported;
    neither are pairs of simple roots that fall between two grid points.
    ``values`` may carry precomputed samples of ``f`` on the scan grid.
    """
    lo, hi, scan_step = float(lo), float(hi), float(scan_step)
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if not scan_step > 0.0:
        raise DomainError(f"scan_step must be positive, got {scan_step}")
    grid = scan_grid(lo, hi, scan_step)
    if values is None:
        values = np.array([float(f(x)) for x in grid])
    evaluations = len(grid)

    counter = [0]

    def g(x):
        counter[0] += 1
        return f(x)

    roots = []
    for i, x in enumerate(grid):
        fx = values[i]
        if fx == 0.0:
            roots.append(float(x))
            continue
        if i + 1 < len(grid):
            fy = values[i + 1]
            if fy != 0.0 and (fx < 0.0) != (fy < 0.0):
                xtol = rtol * max(1.0, abs(x))
                roots.append(brentq(g, x, grid[i + 1], xtol=xtol, rtol=4 * np.finfo(float).eps))

    tolerance = rtol * max(1.0, abs(lo), abs(hi))
    merged = []
    for r in roots:
        if merged and r - merged[-1] <= tolerance:
            continue
        merged.append(r)
    width = float(grid[1] - grid[0])
    close = any(b - a < 2 * width for a, b in zip(merged, merged[1:]))
    return RootList(tuple(merged), width, tolerance, close, evaluations + counter[0])
