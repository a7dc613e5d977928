"""Polynomial maps of the unit disk, f(z) = sum a_k z^k."""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConformalMap",
    "RiemannSurfaceSpec",
    "parse_coefficients",
    "critical_radii",
    "univalence_bound",
    "MAX_DEGREE",
]

MAX_DEGREE = 32


def parse_coefficients(text):
    """Parse ``"0,1,0.3"`` or ``"0,1:0.5"`` (``re:im`` pairs), index 0 first."""
    coeffs = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise ValueError(f"empty coefficient in {text!r}")
        if ":" in item:
            re_part, _, im_part = item.partition(":")
            coeffs.append(complex(float(re_part), float(im_part)))
        else:
            coeffs.append(complex(float(item)))
    return coeffs


@dataclass(frozen=True, init=False)
class ConformalMap:
    """Polynomial with complex coefficients ``a[0] .. a[N]``, N <= 32."""

    coeffs: tuple

    def __init__(self, coeffs):
        if isinstance(coeffs, str):
            coeffs = parse_coefficients(coeffs)
        c = [complex(a) for a in coeffs]
        while len(c) > 2 and c[-1] == 0:
            c.pop()
        if len(c) < 2:
            c = c + [0j] * (2 - len(c))
        if len(c) - 1 > MAX_DEGREE:
            raise ValueError(f"degree {len(c) - 1} exceeds {MAX_DEGREE}")
        if not all(np.isfinite(a) for a in c):
            raise ValueError("coefficients must be finite")
        if all(a == 0 for a in c[1:]):
            raise ValueError("map is constant")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def identity(cls):
        return cls([0, 1])

    @classmethod
    def linear(cls, a):
        return cls([0, a])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_linear(self):
        """True for f(z) = a0 + a1 z, whose images of disks are disks."""
        return all(a == 0 for a in self.coeffs[2:])

    def derivative_coeffs(self):
        return np.array([k * a for k, a in enumerate(self.coeffs)][1:], dtype=complex)

    def eval(self, z):
        return _horner(np.asarray(self.coeffs, dtype=complex), z)

    def eval_deriv(self, z):
        return _horner(self.derivative_coeffs(), z)

    def weight(self, z):
        """|f'(z)|^2, the conformal factor of the pulled-back metric."""
        d = self.eval_deriv(z)
        return d.real ** 2 + d.imag ** 2

    def scaled(self, c):
        return ConformalMap([c * a for a in self.coeffs])

    def __call__(self, z):
        return self.eval(z)

    def __str__(self):
        return ",".join(_fmt(a) for a in self.coeffs)


def _fmt(a):
    if a.imag == 0:
        return repr(a.real)
    return f"{a.real!r}:{a.imag!r}"


def _horner(c, z):
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, c[-1], dtype=complex)
    for a in c[-2::-1]:
        out = out * z + a
    return out[()] if out.ndim == 0 else out


def _derivative_roots(fmap):
    d = fmap.derivative_coeffs()
    # a negligible leading coefficient only adds roots near infinity but
    # wrecks the companion matrix scaling
    while len(d) > 1 and abs(d[-1]) <= 1e-14 * np.max(np.abs(d)):
        d = d[:-1]
    if len(d) <= 1:
        return np.empty(0, dtype=complex)
    roots = np.roots(d[::-1])
    full = fmap.derivative_coeffs()
    dd = np.array([k * a for k, a in enumerate(full)][1:], dtype=complex)
    for _ in range(2):
        slope = _horner(dd, roots)
        ok = slope != 0
        roots = np.where(ok, roots - _horner(full, roots) / np.where(ok, slope, 1), roots)
    return roots


def critical_radii(fmap, r_max=1.0):
    """Sorted distinct moduli |z*| < r_max of the zeros of f'."""
    roots = _derivative_roots(fmap)
    radii = sorted(abs(z) for z in roots if abs(z) < r_max)
    out = []
    for rad in radii:
        if not out or rad - out[-1] > 1e-12:
            out.append(float(rad))
    return out


def univalence_bound(fmap, r):
    """Sufficient test for injectivity on |z| < r.

    Returns True when sum_{k>=2} k |a_k| r^(k-1) < |a_1|. False only means
    the map is not certified.
    """
    a = fmap.coeffs
    tail = sum(k * abs(a[k]) * r ** (k - 1) for k in range(2, len(a)))
    return bool(tail < abs(a[1]))


@dataclass(frozen=True)
class RiemannSurfaceSpec:
    """The surface f(rD) counted with multiplicity."""

    map: ConformalMap
    radius: float

    def __post_init__(self):
        if not 0 < self.radius < 1:
            raise ValueError("radius must lie in (0, 1)")

    @property
    def critical_radii(self):
        return critical_radii(self.map, 1.0)

    def near_critical(self, window=1e-9):
        return any(abs(self.radius - c) <= window for c in self.critical_radii)
