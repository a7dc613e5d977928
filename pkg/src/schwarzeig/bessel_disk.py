"""Geometry of the unit disk with the conformal metric ds = J1(j0|z|)|dz|.

The metric is |∇u|/j0 for the disk eigenfunction u = J0(j0|z|), so it is the
equality case of the eigenfunction isoperimetric inequality. It degenerates
at the origin, where ρ vanishes to first order.
"""

from dataclasses import dataclass

import numpy as np

from .quadrature import DiskQuadrature, integrate_disk
from .special import _bessel_series, bessel_j, bessel_j_prime, first_zero_j0

__all__ = [
    "BesselDiskProfile",
    "conformal_factor",
    "log_factor_slope",
    "gauss_bonnet_density",
    "curvature",
    "length_area",
    "TotalCurvature",
    "total_curvature",
    "figure_profiles",
]


def conformal_factor(s, scale=1.0):
    """ρ(s) = scale · J1(j0 s). ``scale = j0`` gives |∇J0(j0|z|)|."""
    return scale * bessel_j(1, first_zero_j0() * np.asarray(s, dtype=float))


def log_factor_slope(s):
    """s · (log ρ)'(s) = j0 s J1'(j0 s) / J1(j0 s); tends to 1 as s → 0."""
    j0 = first_zero_j0()
    x = j0 * np.asarray(s, dtype=float)
    # x J1'(x) / J1(x) = x J0(x)/J1(x) - 1, with the series giving 1 at x = 0
    j1 = bessel_j(1, x)
    out = np.where(x == 0, 1.0, x * bessel_j_prime(1, x) / np.where(x == 0, 1.0, j1))
    return float(out) if np.ndim(s) == 0 else out


def gauss_bonnet_density(s):
    """-Δ log ρ, independent of the constant in front of ρ.

    Written as j0² (1 - J0 J2 / J1²) so the 1/s² parts cancel analytically.
    """
    j0 = first_zero_j0()
    x = j0 * np.asarray(s, dtype=float)
    if np.any(x <= 0):
        raise ValueError("the density is evaluated for s > 0 only")
    j0v, j1v, j2v = (_bessel_series(n, x) for n in (0, 1, 2))
    out = j0 * j0 * (1.0 - j0v * j2v / (j1v * j1v))
    return float(out) if np.ndim(s) == 0 else out


def curvature(s, scale=1.0):
    """Gauss curvature K = -Δ log ρ / ρ² of ρ = scale · J1(j0 s), s in (0, 1]."""
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr <= 0):
        raise ValueError("curvature is singular at the origin; need s > 0")
    out = gauss_bonnet_density(s_arr) / conformal_factor(s_arr, scale) ** 2
    return float(out) if np.ndim(s) == 0 else out


def length_area(grid=None, scale=1.0):
    """Boundary length and area of the Bessel disk.

    L is the exact circle integral 2π ρ(1); A is by quadrature.
    """
    grid = grid or DiskQuadrature(1.0)
    L = 2 * np.pi * conformal_factor(1.0, scale)
    A = integrate_disk(grid, conformal_factor(np.abs(grid.points), scale) ** 2)
    return float(L), A


@dataclass(frozen=True)
class TotalCurvature:
    epsilon: float
    annulus: float          # ∫ K dA over ε < |z| < 1
    boundary_term: float    # -2π (s ρ'/ρ)(1)
    origin_term: float      # 2π lim_{s→0} s ρ'/ρ

    @property
    def extrapolated(self):
        return self.boundary_term + self.origin_term


def total_curvature(epsilon=1e-6):
    """Total curvature via the exact-derivative form of the Gauss-Bonnet integrand.

    -Δ log ρ dA integrates over ε < |z| < 1 to 2π[(s ρ'/ρ)(ε) - (s ρ'/ρ)(1)].
    """
    if not 0 < epsilon < 0.1:
        raise ValueError("epsilon must lie in (0, 0.1)")
    inner = log_factor_slope(epsilon)
    outer = log_factor_slope(1.0)
    return TotalCurvature(
        epsilon=epsilon,
        annulus=2 * np.pi * (inner - outer),
        boundary_term=-2 * np.pi * outer,
        origin_term=2 * np.pi * float(log_factor_slope(0.0)),
    )


@dataclass(frozen=True)
class BesselDiskProfile:
    s: np.ndarray
    rho: np.ndarray             # J1(j0 s)
    rho_scaled: np.ndarray      # j0 J1(j0 s)
    curvature: np.ndarray       # K for rho
    curvature_scaled: np.ndarray
    density: np.ndarray         # -Δ log ρ, shared by both


def figure_profiles(n_samples=200):
    """Equispaced samples on (0, 1] of the conformal factor, curvature and density."""
    if n_samples < 16:
        raise ValueError("need at least 16 samples")
    j0 = first_zero_j0()
    s = np.arange(1, n_samples + 1) / n_samples
    return BesselDiskProfile(
        s=s,
        rho=conformal_factor(s),
        rho_scaled=conformal_factor(s, j0),
        curvature=curvature(s),
        curvature_scaled=curvature(s, j0),
        density=gauss_bonnet_density(s),
    )
