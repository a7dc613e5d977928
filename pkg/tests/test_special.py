import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special as sp

from schwarzeig.special import bessel_constants, bessel_j, bessel_j_prime, first_zero_j0

J0_ZERO = 2.404825557695773


def test_values_at_origin():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(1, 0.0) == 0.0
    assert bessel_j_prime(1, 0.0) == 0.5


def test_bisection_oracle_matches_frozen_value(j0):
    assert j0 == pytest.approx(J0_ZERO, abs=1e-15)
    assert sp.jn_zeros(0, 1)[0] == pytest.approx(J0_ZERO, abs=1e-15)


def test_first_zero():
    z = first_zero_j0()
    assert abs(z - J0_ZERO) < 1e-13
    assert abs(bessel_j(0, z)) < 1e-13
    assert z * z == pytest.approx(5.783185962946785, rel=1e-15)
    assert 2 < z < 3


def test_zero_from_frozen_value():
    assert abs(bessel_j(0, 2.404825557695773)) < 1e-13


@pytest.mark.parametrize("order, ref", [(0, sp.j0), (1, sp.j1)])
def test_against_scipy_on_0_30(order, ref):
    x = np.linspace(0.0, 30.0, 1201)
    assert np.max(np.abs(bessel_j(order, x) - ref(x))) <= 1e-14


def test_against_independent_series():
    from conftest import series_j
    for x in (0.1, 1.0, 2.0, 2.4, 4.9):
        assert bessel_j(0, x) == pytest.approx(series_j(0, x), abs=1e-15)
        assert bessel_j(1, x) == pytest.approx(series_j(1, x), abs=1e-15)


def test_derivatives():
    x = np.linspace(0.0, 12.0, 301)
    np.testing.assert_array_equal(bessel_j_prime(0, x), -bessel_j(1, x))
    np.testing.assert_allclose(bessel_j_prime(1, x), sp.jvp(1, x), atol=1e-14)
    xs = x[1:]
    np.testing.assert_allclose(bessel_j_prime(1, xs), bessel_j(0, xs) - bessel_j(1, xs) / xs,
                               atol=1e-13)


def test_bessel_identity_at_j0():
    z = first_zero_j0()
    assert abs(z * bessel_j_prime(1, z) + bessel_j(1, z)) < 1e-12


@pytest.mark.parametrize("order", [0, 1])
def test_finite_difference_consistency(order):
    h = 1e-5
    x = np.linspace(0.1, 10.0, 200)
    fd = (bessel_j(order, x + h) - bessel_j(order, x - h)) / (2 * h)
    assert np.max(np.abs(fd - bessel_j_prime(order, x))) < 1e-8


def test_bounds_on_0_10():
    x = np.arange(0.0, 10.0 + 1e-12, 1e-3)
    assert np.all(np.abs(bessel_j(0, x)) <= 1.0)
    assert np.all(np.abs(bessel_j(1, x)) <= 0.6)


def test_constants():
    c = bessel_constants()
    assert c.J1_at_j0 > 0
    assert c.J1_at_j0 == pytest.approx(0.5191474972894669, abs=1e-15)
    assert c.j0_squared == c.j0 ** 2


@pytest.mark.parametrize("args", [(2, 1.0), (-1, 1.0), (0, -0.5), (1, math.inf), (0, math.nan)])
def test_rejects_bad_input(args):
    with pytest.raises(ValueError):
        bessel_j(*args)
    with pytest.raises(ValueError):
        bessel_j_prime(*args)


def test_array_shape_preserved():
    x = np.linspace(0, 8, 12).reshape(3, 4)
    assert bessel_j(0, x).shape == (3, 4)
    assert isinstance(bessel_j(0, 1.5), float)


@given(st.floats(min_value=0.0, max_value=25.0))
def test_matches_scipy_pointwise(x):
    assert abs(bessel_j(0, x) - sp.j0(x)) < 1e-14
    assert abs(bessel_j(1, x) - sp.j1(x)) < 1e-14
