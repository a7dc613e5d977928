import numpy as np
import pytest
from scipy.integrate import quad

from schwarzeig.quadrature import (CircleQuadrature, DiskQuadrature, gauss_legendre,
                                   integrate_circle, integrate_disk)
from schwarzeig.special import bessel_j, first_zero_j0


def test_gauss_legendre_small_cases():
    x, w = gauss_legendre(1)
    assert x[0] == 0 and w[0] == 2
    x, w = gauss_legendre(2)
    np.testing.assert_allclose(np.sort(x), [-1 / np.sqrt(3), 1 / np.sqrt(3)], atol=1e-15)
    np.testing.assert_allclose(w, [1, 1], atol=1e-15)
    x, w = gauss_legendre(3)
    assert abs(w @ x ** 4 - 0.4) < 1e-15


@pytest.mark.parametrize("n", [5, 64, 512])
def test_gauss_legendre_weights(n):
    _, w = gauss_legendre(n)
    assert np.all(w > 0)
    assert abs(w.sum() - 2) < 1e-14


@pytest.mark.parametrize("n", [0, 513, 2.5])
def test_gauss_legendre_range(n):
    with pytest.raises(ValueError):
        gauss_legendre(n)


@pytest.mark.parametrize("r", [0.1, 0.5, 1.0])
def test_disk_weights(r):
    g = DiskQuadrature(r)
    assert np.all(g.weights > 0)
    assert g.weights.sum() == pytest.approx(np.pi * r * r, rel=1e-13)


def test_disk_constant_and_moment():
    assert abs(integrate_disk(DiskQuadrature(1.0), np.ones((64, 128))) - np.pi) < 1e-13
    g = DiskQuadrature(0.5)
    assert abs(integrate_disk(g, np.abs(g.points) ** 2) - np.pi * 0.5 ** 4 / 2) < 1e-13


def test_disk_bessel_square():
    j0 = first_zero_j0()
    oracle, _ = quad(lambda s: bessel_j(0, j0 * s) ** 2 * s, 0, 1, epsabs=1e-14, epsrel=1e-13)
    j1 = bessel_j(1, j0)
    assert oracle == pytest.approx(j1 ** 2 / 2, abs=1e-14)
    g = DiskQuadrature(1.0)
    val = integrate_disk(g, bessel_j(0, j0 * np.abs(g.points)) ** 2)
    assert abs(val - np.pi * j1 ** 2) < 1e-10


def test_disk_convergence_plateau():
    j0 = first_zero_j0()

    def val(n):
        g = DiskQuadrature(1.0, n_rad=n, n_ang=16)
        return integrate_disk(g, bessel_j(0, j0 * np.abs(g.points)) ** 2)
    assert abs(val(32) - val(64)) < 1e-12
    assert abs(val(64) - val(128)) < 1e-12


def test_disk_size_mismatch():
    with pytest.raises(ValueError):
        integrate_disk(DiskQuadrature(1.0), np.ones(10))


def test_circle_basics():
    c = CircleQuadrature(0.7)
    assert c.weights.sum() == pytest.approx(2 * np.pi * 0.7, rel=1e-14)
    assert abs(integrate_circle(c, np.ones(128)) - 2 * np.pi * 0.7) < 1e-14
    c1 = CircleQuadrature(1.0)
    assert abs(integrate_circle(c1, np.cos(c1.theta) ** 2) - np.pi) < 1e-13
    with pytest.raises(ValueError):
        integrate_circle(c1, np.ones(5))


def test_trapezoid_exact_for_trig_polynomials():
    n = 64
    c = CircleQuadrature(1.0, n)
    for k in range(1, n):
        assert abs(np.sum(np.exp(1j * k * c.theta)) * 2 * np.pi / n) < 1e-13


def test_circle_integral_of_disk_eigenfunction_gradient():
    # ψ = J0(j0 s)/(√π J1(j0)), so |∇ψ| = j0 J1(j0 s)/(√π J1(j0))
    j0 = first_zero_j0()
    j1 = bessel_j(1, j0)
    c = CircleQuadrature(1.0)
    grad = j0 * bessel_j(1, j0 * np.abs(c.points)) / (np.sqrt(np.pi) * j1)
    assert abs(integrate_circle(c, grad) - 2 * np.sqrt(np.pi) * j0) < 1e-9


def test_grids_are_immutable():
    g = DiskQuadrature(1.0)
    with pytest.raises(ValueError):
        g.s[0] = 1.0
    with pytest.raises(Exception):
        g.radius = 2.0
