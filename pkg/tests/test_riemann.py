import numpy as np
import pytest

from xpzeros.numbertheory import riemann

from _oracle_values import RIEMANN_AVERAGE_ZEROS, RIEMANN_XI, RIEMANN_ZEROS


@pytest.mark.parametrize("t, ref", RIEMANN_XI)
def test_xi_values(t, ref):
    assert riemann.riemann_xi(t) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("t", [0.0, 5.0, 14.2, 42.0, 101.0])
def test_xi_is_real_and_even(t):
    z = riemann.riemann_xi_complex(t)
    assert abs(z.imag) <= 1e-12 * abs(z.real)
    assert riemann.riemann_xi(-t) == pytest.approx(riemann.riemann_xi(t), rel=1e-13)


def test_zeros_by_sign_change():
    zeros = riemann.riemann_zeros(t_max=50.0)
    np.testing.assert_allclose(zeros.roots, RIEMANN_ZEROS, atol=1e-9)


def test_fixture_matches_oracle():
    fixture = riemann.load_zero_fixture()
    assert len(fixture) == 38
    np.testing.assert_allclose(fixture[:10], RIEMANN_ZEROS, atol=1e-10)


def test_fixture_env_override(tmp_path, monkeypatch):
    path = tmp_path / "z.txt"
    riemann.write_zero_fixture(path, [1.5, 2.25])
    monkeypatch.setenv(riemann.FIXTURE_ENV, str(path))
    assert riemann.load_zero_fixture() == [1.5, 2.25]
    path.write_text("# riemann_zeros v1 count=3\n1.0\n")
    with pytest.raises(ValueError):
        riemann.load_zero_fixture()


def test_average_zeros():
    got = [riemann.riemann_average_zero(n) for n in range(3)]
    np.testing.assert_allclose(got, RIEMANN_AVERAGE_ZEROS, rtol=1e-13)
    for n in range(40):
        t = riemann.riemann_average_zero(n)
        assert riemann.riemann_counting_smooth(t) == pytest.approx(n + 0.5, abs=1e-12)


def test_average_zero_bad_index():
    with pytest.raises(ValueError):
        riemann.riemann_average_zero(-1)
