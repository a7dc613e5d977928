"""Bessel functions J0, J1 and the first positive zero of J0.

Values come from the ascending power series

    J_n(x) = sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!)

summed in double precision for small arguments. Above ``_DOUBLE_LIMIT`` the
alternating terms cancel badly, so the same series is summed in extended
precision with mpmath and rounded back.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import mpmath
import numpy as np

__all__ = [
    "BesselConstants",
    "bessel_j",
    "bessel_j_prime",
    "first_zero_j0",
    "bessel_constants",
]

# largest term of the J0 series at x=5 is ~10, so cancellation costs one digit
_DOUBLE_LIMIT = 5.0
_MAX_TERMS = 200


def _check(order, x):
    if order not in (0, 1):
        raise ValueError(f"unsupported Bessel order {order!r}; only 0 and 1")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("Bessel argument must be finite")
    if np.any(x < 0):
        raise ValueError("Bessel argument must be nonnegative")
    return x


def _series_double(n, x):
    # terms t_k = t_{k-1} * (-(x/2)^2) / (k (k+n)), summed until they stop mattering
    q = -(x * x) / 4.0
    term = (x / 2.0) ** n / math.factorial(n)
    total = term.copy()
    for k in range(1, _MAX_TERMS):
        term = term * q / (k * (k + n))
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.maximum(np.abs(total), 1e-300)):
            break
    return total


def _series_mp(n, xi):
    # enough guard digits to absorb a largest term of size ~exp(x)
    dps = 20 + int(0.45 * xi) + 1
    with mpmath.workdps(dps):
        x = mpmath.mpf(xi)
        q = -(x * x) / 4
        term = (x / 2) ** n / mpmath.factorial(n)
        total = term
        tiny = mpmath.mpf(10) ** (-dps)
        k = 1
        while True:
            term = term * q / (k * (k + n))
            total += term
            if abs(term) < tiny and k > xi:
                break
            k += 1
        return float(total)


def _bessel_series(n, x):
    """J_n(x) for any integer order n >= 0 and x >= 0 (array in, array out)."""
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    out = np.empty_like(flat)
    small = flat <= _DOUBLE_LIMIT
    if np.any(small):
        out[small] = _series_double(n, flat[small])
    for i in np.flatnonzero(~small):
        out[i] = _series_mp(n, float(flat[i]))
    return out.reshape(x.shape)


def _scalar_or_array(value, like):
    return float(value) if np.ndim(like) == 0 else value


def bessel_j(order, x):
    """Bessel function of the first kind of order 0 or 1.

    Accepts a scalar or an array of nonnegative reals.
    """
    xa = _check(order, x)
    return _scalar_or_array(_bessel_series(order, xa), x)


def bessel_j_prime(order, x):
    """Derivative of J_order.

    J0' = -J1 and J1' = J0 - J1/x, with J1'(0) = 1/2.
    """
    xa = _check(order, x)
    if order == 0:
        val = -_bessel_series(1, xa)
    else:
        # J1' = (J0 - J2)/2 avoids the J1/x quotient at the origin
        val = 0.5 * (_bessel_series(0, xa) - _bessel_series(2, xa))
    return _scalar_or_array(val, x)


@lru_cache(maxsize=None)
def first_zero_j0():
    """First positive zero of J0, by bisection on [2, 3] plus two Newton steps."""
    lo, hi = 2.0, 3.0
    f_lo = bessel_j(0, lo)
    while True:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = bessel_j(0, mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(2):
        x = x + bessel_j(0, x) / bessel_j(1, x)
    return x


@dataclass(frozen=True)
class BesselConstants:
    j0: float
    j0_squared: float
    J1_at_j0: float


@lru_cache(maxsize=None)
def bessel_constants():
    j0 = first_zero_j0()
    return BesselConstants(j0=j0, j0_squared=j0 * j0, J1_at_j0=bessel_j(1, j0))
