"""Monotonicity of Φ(r) = r² λ(f(rD)) / j0² and the radial shape derivative of λ."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import enum

import numpy as np

from .conformal import ConformalMap, critical_radii, univalence_bound
from .eigensolver import BasisSpec, solve
from .payne_rayner import isoperimetric_report
from .quadrature import CircleQuadrature, DiskQuadrature, integrate_circle
from .special import first_zero_j0

__all__ = [
    "FlowSpec",
    "SweepPoint",
    "SweepResult",
    "Verdict",
    "CriticalRadiusError",
    "lambda_of_r",
    "phi_of_r",
    "hadamard_derivative",
    "fd_derivative",
    "fd_derivative_richardson",
    "proof_chain",
    "sweep",
    "phi_limit_zero",
    "TOL_CONST",
    "TOL_STRICT",
]

TOL_CONST = 1e-7
TOL_STRICT = 1e-9
CRITICAL_WINDOW = 1e-9
SWEEP_SKIP_WINDOW = 1e-6


class CriticalRadiusError(ValueError):
    pass


class Verdict(str, enum.Enum):
    CONSTANT = "CONSTANT"
    CONSTANT_WITHIN_TOLERANCE = "CONSTANT-WITHIN-TOLERANCE"
    DECREASING = "DECREASING"
    VIOLATION = "VIOLATION"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FlowSpec:
    """Radial dilation of D_r = f(rD) into D_{r+t}.

    Points of the image domain are addressed through their preimage z, so
    f⁻¹ never has to be built: p = f(z), ζ(t, p) = f((1 + t/r) z).
    """

    map: ConformalMap
    r: float

    def flow(self, t, z):
        return self.map.eval((1 + t / self.r) * np.asarray(z))

    def variation_field(self, t, z):
        """χ at the point ζ(t, f(z)), i.e. f'(w) w / (r + t) with w = (1 + t/r) z."""
        w = (1 + t / self.r) * np.asarray(z)
        return w * self.map.eval_deriv(w) / (self.r + t)

    def normal(self, z):
        """Outward unit normal of ∂D_r at f(z), |z| = r."""
        d = self.map.eval_deriv(z)
        return np.asarray(z) / self.r * d / np.abs(d)

    def normal_speed(self, z):
        """<χ, η> on ∂D_r, which reduces to |f'(z)|."""
        chi = self.variation_field(0.0, z)
        eta = self.normal(z)
        return (chi * np.conj(eta)).real


@dataclass(frozen=True)
class SweepPoint:
    r: float
    lam: float
    phi: float
    dlambda_hadamard: float
    dlambda_fd: float
    univalent_certified: bool
    pr_margin: float
    pr_alt_margin: float
    fd_richardson: float = float("nan")
    chain_slack_pr: float = float("nan")
    chain_slack_cs: float = float("nan")

    @property
    def decrease_margin(self):
        """2λ/r + dλ/dr; Φ decreases where this is <= 0."""
        return 2 * self.lam / self.r + self.dlambda_hadamard

    @property
    def dphi(self):
        return (2 * self.r * self.lam + self.r ** 2 * self.dlambda_hadamard) / first_zero_j0() ** 2


@dataclass
class SweepResult:
    map: ConformalMap
    points: list
    verdict: Verdict
    skipped: list = field(default_factory=list)

    @property
    def phis(self):
        return np.array([p.phi for p in self.points])

    @property
    def radii(self):
        return np.array([p.r for p in self.points])


def _near_critical(fmap, r, window):
    return [c for c in critical_radii(fmap, 1.0) if abs(c - r) <= window]


def lambda_of_r(fmap, r, basis=None, grid=None):
    if not 0 < r < 1:
        raise ValueError("radius must lie in (0, 1)")
    if _near_critical(fmap, r, CRITICAL_WINDOW):
        raise CriticalRadiusError(f"r = {r} is a critical radius of the map")
    return solve(fmap, r, basis, grid)


def phi_of_r(lam, r):
    return r * r * lam / first_zero_j0() ** 2


def hadamard_derivative(sol, n_ang=None):
    """dλ/dr = -r ∫ |∇ψ(re^{iθ})|² dθ."""
    circle = CircleQuadrature(sol.radius, n_ang or 128)
    g = sol.grad_norm(circle.points)
    return -integrate_circle(circle, g * g)


def fd_derivative(fmap, r, h=1e-3, basis=None, grid=None):
    """Central difference (λ(r+h) - λ(r-h)) / 2h."""
    if not (0 < r - h and r + h < 1):
        raise ValueError(f"step [{r - h}, {r + h}] leaves (0, 1)")
    if any(r - h <= c <= r + h for c in critical_radii(fmap, 1.0)):
        raise CriticalRadiusError(f"step [{r - h}, {r + h}] straddles a critical radius")
    lo = solve(fmap, r - h, basis, grid).lam
    hi = solve(fmap, r + h, basis, grid).lam
    return (hi - lo) / (2 * h)


def fd_derivative_richardson(fmap, r, h=1e-3, basis=None, grid=None):
    """Central differences at h and h/2 combined to cancel the O(h²) term."""
    coarse = fd_derivative(fmap, r, h, basis, grid)
    fine = fd_derivative(fmap, r, 0.5 * h, basis, grid)
    return (4 * fine - coarse) / 3


def proof_chain(sol, grid=None):
    """Slacks of (2/r)A <= L²/(2πr) <= r ∫|∇ψ|² dθ, both >= 0 in theory."""
    rep = isoperimetric_report(sol, grid)
    r = sol.radius
    energy_bound = 2 * rep.A / r
    length_term = rep.L ** 2 / (2 * np.pi * r)
    boundary_term = -hadamard_derivative(sol, None if grid is None else grid.n_ang)
    return length_term - energy_bound, boundary_term - length_term


def _fd_step(fmap, r, h):
    h = min(h, 0.5 * r, 0.5 * (1 - r))
    for c in critical_radii(fmap, 1.0):
        if abs(c - r) <= h:
            h = 0.5 * abs(c - r)
    return h


def _sweep_point(fmap, r, h, basis, grid, richardson):
    grid = grid.with_radius(r) if grid is not None else None
    sol = lambda_of_r(fmap, r, basis, grid)
    had = hadamard_derivative(sol, None if grid is None else grid.n_ang)
    step = _fd_step(fmap, r, h)
    fd = fd_derivative(fmap, r, step, basis, grid)
    rich = float("nan")
    if richardson:
        fd_half = fd_derivative(fmap, r, 0.5 * step, basis, grid)
        rich = (4 * fd_half - fd) / 3
    rep = isoperimetric_report(sol, grid)
    slack_pr = rep.L ** 2 / (2 * np.pi * r) - 2 * rep.A / r
    slack_cs = -had - rep.L ** 2 / (2 * np.pi * r)
    return SweepPoint(
        r=r, lam=sol.lam, phi=phi_of_r(sol.lam, r),
        dlambda_hadamard=had, dlambda_fd=fd,
        univalent_certified=univalence_bound(fmap, r),
        pr_margin=rep.margin, pr_alt_margin=rep.alt_margin,
        fd_richardson=rich, chain_slack_pr=slack_pr, chain_slack_cs=slack_cs)


def classify(fmap, phis, tol_const=TOL_CONST, tol_strict=TOL_STRICT):
    phis = np.asarray(phis)
    if len(phis) < 2:
        return Verdict.CONSTANT if fmap.is_linear else Verdict.CONSTANT_WITHIN_TOLERANCE
    d = np.diff(phis)
    if np.all(np.abs(d) <= tol_const * np.abs(phis[:-1])):
        return Verdict.CONSTANT if fmap.is_linear else Verdict.CONSTANT_WITHIN_TOLERANCE
    if np.all(d < -tol_strict) and not fmap.is_linear:
        return Verdict.DECREASING
    return Verdict.VIOLATION


def sweep(fmap, r_start, r_end, steps, basis=None, grid=None, h=1e-3,
          richardson=True, workers=1):
    """Φ and its derivative data on an equispaced radius grid.

    Radii within 1e-6 of a critical radius of the map are skipped. Points are
    independent and may be computed on ``workers`` threads; results keep grid order.
    """
    if not 0 < r_start < r_end < 1:
        raise ValueError("need 0 < r_start < r_end < 1")
    if steps < 2:
        raise ValueError("need at least two sweep points")
    basis = basis or BasisSpec()
    radii = np.linspace(r_start, r_end, steps)
    keep, skipped = [], []
    for r in radii:
        (skipped if _near_critical(fmap, r, SWEEP_SKIP_WINDOW) else keep).append(float(r))

    def work(r):
        return _sweep_point(fmap, r, h, basis, grid, richardson)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(work, keep))
    else:
        points = [work(r) for r in keep]
    verdict = classify(fmap, [p.phi for p in points])
    return SweepResult(fmap, points, verdict, skipped)


def phi_limit_zero(fmap, basis=None, grid=None, r=0.05):
    """Φ at a small radius, approximating the r → 0 limit 1/|f'(0)|²."""
    if fmap.coeffs[1] == 0:
        raise ValueError("f'(0) = 0: Φ is unbounded as r → 0")
    sol = lambda_of_r(fmap, r, basis, grid)
    return phi_of_r(sol.lam, r)
