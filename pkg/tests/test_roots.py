import math

import numpy as np
import pytest

from xpzeros.errors import DomainError
from xpzeros.numerics.roots import find_real_roots, scan_grid


def test_sine_roots():
    roots = find_real_roots(math.sin, 0.5, 20.0, 0.1)
    np.testing.assert_allclose(roots.roots, np.pi * np.arange(1, 7), rtol=1e-12)
    assert not roots.close_pair


def test_grid_point_root_reported_once():
    roots = find_real_roots(lambda x: x - 1.0, 0.0, 2.0, 0.5)
    assert roots.roots == (1.0,)


def test_double_root_is_invisible():
    assert len(find_real_roots(lambda x: (x - 1.33) ** 2, 0.0, 2.0, 0.1)) == 0


def test_close_pair_flag():
    roots = find_real_roots(lambda x: (x - 1.0) * (x - 1.15), 0.0, 2.0, 0.1)
    assert len(roots) == 2
    assert roots.close_pair


def test_precomputed_values_are_used():
    grid = scan_grid(0.5, 4.0, 0.5)
    calls = []

    def f(x):
        calls.append(x)
        return math.cos(x)

    roots = find_real_roots(f, 0.5, 4.0, 0.5, values=np.cos(grid))
    assert roots.roots[0] == pytest.approx(math.pi / 2, abs=1e-12)
    assert len(calls) < 30


@pytest.mark.parametrize("lo, hi, step", [(1.0, 1.0, 0.1), (2.0, 1.0, 0.1), (0.0, 1.0, 0.0)])
def test_bad_scan(lo, hi, step):
    with pytest.raises(DomainError):
        find_real_roots(math.sin, lo, hi, step)
