"""Tensor quadrature on disks and circles centred at the origin.

Disk rules combine Gauss-Legendre in the radius with the periodic trapezoid
rule in the angle. The radial Jacobian ``s`` is folded into the weights, so
callers integrate plain samples of the integrand.
"""

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss

__all__ = [
    "gauss_legendre",
    "DiskQuadrature",
    "CircleQuadrature",
    "integrate_disk",
    "integrate_circle",
    "DEFAULT_N_RAD",
    "DEFAULT_N_ANG",
]

DEFAULT_N_RAD = 64
DEFAULT_N_ANG = 128


def gauss_legendre(n):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    if int(n) != n or not 1 <= n <= 512:
        raise ValueError(f"Gauss-Legendre order must be an integer in [1, 512], got {n!r}")
    return leggauss(int(n))


def _angles(n_ang):
    if int(n_ang) != n_ang or n_ang < 1:
        raise ValueError(f"angular node count must be a positive integer, got {n_ang!r}")
    return 2.0 * np.pi * np.arange(int(n_ang)) / int(n_ang)


@dataclass(frozen=True)
class DiskQuadrature:
    """Polar product rule on the disk of the given radius.

    Samples are laid out as arrays of shape ``(n_rad, n_ang)``; ``points``
    gives the matching complex nodes.
    """

    radius: float
    n_rad: int = DEFAULT_N_RAD
    n_ang: int = DEFAULT_N_ANG
    s: np.ndarray = field(init=False, repr=False)
    radial_weights: np.ndarray = field(init=False, repr=False)
    theta: np.ndarray = field(init=False, repr=False)
    angular_weight: float = field(init=False, repr=False)

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")
        x, w = gauss_legendre(self.n_rad)
        s = 0.5 * self.radius * (x + 1.0)
        # area element s ds dtheta
        rw = 0.5 * self.radius * w * s
        theta = _angles(self.n_ang)
        for name, value in (("s", s), ("radial_weights", rw), ("theta", theta),
                            ("angular_weight", 2.0 * np.pi / self.n_ang)):
            object.__setattr__(self, name, value)
        s.flags.writeable = rw.flags.writeable = theta.flags.writeable = False

    @property
    def shape(self):
        return (self.n_rad, self.n_ang)

    @property
    def points(self):
        return self.s[:, None] * np.exp(1j * self.theta)[None, :]

    @property
    def weights(self):
        return np.outer(self.radial_weights, np.full(self.n_ang, self.angular_weight))

    def with_radius(self, radius):
        return DiskQuadrature(radius, self.n_rad, self.n_ang)


@dataclass(frozen=True)
class CircleQuadrature:
    """Trapezoid rule for arc-length integrals over the circle |z| = radius."""

    radius: float
    n_ang: int = DEFAULT_N_ANG
    theta: np.ndarray = field(init=False, repr=False)
    weight: float = field(init=False, repr=False)

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("circle radius must be positive")
        theta = _angles(self.n_ang)
        theta.flags.writeable = False
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "weight", self.radius * 2.0 * np.pi / self.n_ang)

    @property
    def points(self):
        return self.radius * np.exp(1j * self.theta)

    @property
    def weights(self):
        return np.full(self.n_ang, self.weight)


def integrate_disk(grid, samples):
    """Approximate the area integral of ``samples`` over the disk."""
    samples = np.asarray(samples)
    if samples.size != grid.n_rad * grid.n_ang:
        raise ValueError(
            f"expected {grid.n_rad * grid.n_ang} samples, got {samples.size}")
    samples = samples.reshape(grid.shape)
    return float(grid.angular_weight * (grid.radial_weights @ samples.sum(axis=1)))


def integrate_circle(grid, samples):
    """Approximate the arc-length integral of ``samples`` over the circle."""
    samples = np.asarray(samples)
    if samples.size != grid.n_ang:
        raise ValueError(f"expected {grid.n_ang} samples, got {samples.size}")
    return float(grid.weight * samples.ravel().sum())
