import math

import numpy as np
import pytest
from scipy import special as sp
from scipy.integrate import quad
from scipy.optimize import brentq

from schwarzeig import bessel_disk as bd
from schwarzeig.special import bessel_j, first_zero_j0

J0 = first_zero_j0()
J1J0 = bessel_j(1, J0)


def _fd_density(s, h):
    """-Δ log ρ by finite differences of log J1(j0 s), using scipy's J1."""
    g = lambda t: np.log(sp.j1(J0 * t))
    d1 = (g(s + h) - g(s - h)) / (2 * h)
    d2 = (g(s + h) - 2 * g(s) + g(s - h)) / h ** 2
    return -(d2 + d1 / s)


def fd_density(s, h=1e-3):
    # Richardson-extrapolated to remove the O(h²) term
    return (4 * _fd_density(s, h / 2) - _fd_density(s, h)) / 3


def test_curvature_positive():
    s = np.arange(1, 100) / 100
    assert np.all(bd.curvature(s) > 0)
    assert bd.curvature(0.5) > 0
    k1 = bd.curvature(1.0)
    assert np.isfinite(k1) and k1 > 0


def test_curvature_against_finite_differences():
    s = np.linspace(0.1, 0.95, 12)
    np.testing.assert_allclose(bd.gauss_bonnet_density(s), fd_density(s), rtol=1e-7)


def test_small_s_law():
    s = 1e-3
    val = bd.curvature(s) * bessel_j(1, J0 * s) ** 2
    assert val == pytest.approx(J0 ** 2 / 2, rel=1e-3)
    # K grows like 2/s², not logarithmically
    assert bd.curvature(1e-4) * 1e-8 == pytest.approx(2.0, rel=1e-3)


def test_curvature_rejects_origin():
    with pytest.raises(ValueError):
        bd.curvature(0.0)


def test_length_area():
    L, A = bd.length_area()
    assert L == pytest.approx(2 * math.pi * 0.5191474972894669, rel=1e-15)
    assert L == pytest.approx(3.262, abs=1e-3)
    oracle, _ = quad(lambda s: sp.j1(J0 * s) ** 2 * s, 0, 1, epsabs=1e-15)
    assert A == pytest.approx(2 * math.pi * oracle, rel=1e-12)
    assert abs(A - math.pi * J1J0 ** 2) < 1e-10
    assert abs(L * L / (4 * math.pi * A) - 1) < 1e-10


def test_scale_invariance():
    L, A = bd.length_area()
    Ls, As = bd.length_area(scale=J0)
    assert Ls * Ls / (4 * math.pi * As) == pytest.approx(L * L / (4 * math.pi * A), rel=1e-14)
    s = np.linspace(0.05, 1, 20)
    np.testing.assert_allclose(bd.curvature(s, J0) * J0 ** 2, bd.curvature(s), rtol=1e-14)


def test_total_curvature():
    tc = bd.total_curvature(1e-6)
    assert abs(tc.extrapolated - 4 * math.pi) < 1e-8
    assert abs(tc.boundary_term - 2 * math.pi) < 1e-10
    assert abs(tc.origin_term - 2 * math.pi) < 1e-8
    assert abs(2 * math.pi * bd.log_factor_slope(1e-6) - 2 * math.pi) < 1e-8


def test_annulus_against_quadrature():
    eps = 1e-2
    oracle, _ = quad(lambda s: bd.gauss_bonnet_density(s) * s, eps, 1, epsabs=1e-13, epsrel=1e-13)
    assert bd.total_curvature(eps).annulus == pytest.approx(2 * math.pi * oracle, rel=1e-11)


def test_gauss_bonnet_exact_derivative():
    vals = [bd.total_curvature(e).annulus - 2 * math.pi * bd.log_factor_slope(e)
            for e in (1e-2, 1e-4, 1e-6)]
    assert max(vals) - min(vals) < 1e-10


def test_total_curvature_argument_range():
    with pytest.raises(ValueError):
        bd.total_curvature(0.5)


def test_figure_profiles():
    prof = bd.figure_profiles(200)
    assert prof.s[0] > 0 and prof.s[-1] == 1.0
    assert prof.rho[-1] == pytest.approx(J1J0, rel=1e-15)
    np.testing.assert_allclose(prof.rho_scaled, J0 * prof.rho, rtol=1e-15)
    assert np.all(np.isfinite(prof.density))
    assert bd.gauss_bonnet_density(1e-5) == pytest.approx(J0 ** 2 / 2, rel=1e-8)
    # single interior maximum of J1(j0 s) where j0 s hits the first zero of J1'
    j1p = brentq(lambda x: sp.jvp(1, x), 1.0, 2.5)
    assert j1p == pytest.approx(1.8412, abs=1e-4)
    peak = np.argmax(prof.rho)
    assert abs(prof.s[peak] - j1p / J0) <= 1 / 200
    assert np.all(np.diff(prof.rho[:peak + 1]) > 0)
    assert np.all(np.diff(prof.rho[peak:]) < 0)
    with pytest.raises(ValueError):
        bd.figure_profiles(8)


def test_curvature_is_not_monotone():
    s = np.linspace(0.01, 1, 400)
    k = bd.curvature(s)
    d = np.diff(k)
    assert np.any(d < 0) and np.any(d > 0)
