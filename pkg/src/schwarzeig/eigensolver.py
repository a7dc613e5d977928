"""Spectral Galerkin solver for  Δψ + λ|f'|²ψ = 0  on the disk |z| < r, ψ = 0 on |z| = r.

The trial space is spanned by

    b_{m,k}(s, θ) = c_{m,k} (1 - ρ²) ρ^|m| P_k^{(2,|m|)}(2ρ² - 1) trig(mθ),   ρ = s/r,

with trig = cos for m >= 0 and sin for m < 0. Each function vanishes on the
boundary, and c_{m,k} makes the family orthonormal in L²(unit disk). The
stiffness matrix does not depend on r or on the map; the weighted mass matrix
carries all of the geometry.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg as la
from scipy.special import eval_jacobi, gammaln

from .conformal import ConformalMap
from .quadrature import DiskQuadrature

__all__ = [
    "BasisSpec",
    "EigenSolution",
    "SolverError",
    "FactorizationError",
    "ConvergenceError",
    "assemble",
    "smallest_eigenpair",
    "solve",
    "eval_psi",
    "eval_grad_psi",
    "default_grid",
]

_ALPHA = 2


class SolverError(RuntimeError):
    pass


class FactorizationError(SolverError):
    """The mass matrix could not be factored (not positive definite)."""


class ConvergenceError(SolverError):
    """Inverse iteration failed to reduce the eigen-residual."""


@dataclass(frozen=True)
class BasisSpec:
    m_max: int = 8
    k_max: int = 16

    def __post_init__(self):
        if self.m_max < 0 or self.k_max < 1:
            raise ValueError("need m_max >= 0 and k_max >= 1")
        if self.dimension > 8192:
            raise ValueError(f"basis dimension {self.dimension} exceeds 8192")

    @property
    def dimension(self):
        return (2 * self.m_max + 1) * self.k_max

    @property
    def frequencies(self):
        return np.arange(-self.m_max, self.m_max + 1)

    def index(self, m, k):
        """Position of b_{m,k} in the coefficient vector."""
        return (m + self.m_max) * self.k_max + k


def default_grid(r, basis=None):
    return DiskQuadrature(r)


@lru_cache(maxsize=None)
def _norm_const(mu, k):
    # ∫_{unit disk} ((1-ρ²) ρ^mu P_k(2ρ²-1))² dA, with P_k = P_k^{(2,mu)}
    a, b = _ALPHA, mu
    log_h = ((a + b + 1) * np.log(2.0) - np.log(2 * k + a + b + 1)
             + gammaln(k + a + 1) + gammaln(k + b + 1)
             - gammaln(k + a + b + 1) - gammaln(k + 1))
    angular = 2 * np.pi if mu == 0 else np.pi
    radial = np.exp(log_h) / 2.0 ** (mu + 4)
    return 1.0 / np.sqrt(angular * radial)


def _jacobi(n, a, b, x):
    if n < 0:
        return np.zeros_like(x)
    return eval_jacobi(n, a, b, x)


def _pow(rho, p):
    if p < 0:
        return np.zeros_like(rho)
    return rho ** p


def radial_profile(mu, k, rho):
    """g, g', g'' and g/ρ for the radial factor of b_{±mu,k} on the unit disk.

    Derivatives are with respect to ρ. ``g/ρ`` is returned as zero for mu = 0,
    where it only ever multiplies an angular derivative that vanishes.
    """
    rho = np.asarray(rho, dtype=float)
    a, b = _ALPHA, mu
    x = 2.0 * rho * rho - 1.0
    p = _jacobi(k, a, b, x)
    dp = 0.5 * (k + a + b + 1) * _jacobi(k - 1, a + 1, b + 1, x)
    d2p = 0.25 * (k + a + b + 1) * (k + a + b + 2) * _jacobi(k - 2, a + 2, b + 2, x)
    one_m = 1.0 - rho * rho
    q = one_m * p
    dq = -2.0 * rho * p + 4.0 * rho * one_m * dp
    d2q = (-2.0 * p - 16.0 * rho * rho * dp + 4.0 * one_m * dp
           + 16.0 * rho * rho * one_m * d2p)
    c = _norm_const(mu, k)
    g = c * _pow(rho, mu) * q
    dg = c * (mu * _pow(rho, mu - 1) * q + _pow(rho, mu) * dq)
    d2g = c * (mu * (mu - 1) * _pow(rho, mu - 2) * q
               + 2 * mu * _pow(rho, mu - 1) * dq + _pow(rho, mu) * d2q)
    g_over = c * _pow(rho, mu - 1) * q if mu > 0 else np.zeros_like(rho)
    return g, dg, d2g, g_over


def _radial_tables(basis, rho):
    """Arrays of shape (m_max+1, k_max, len(rho)) for g, g', g'', g/ρ."""
    shape = (basis.m_max + 1, basis.k_max) + np.shape(rho)
    tabs = [np.empty(shape) for _ in range(4)]
    for mu in range(basis.m_max + 1):
        for k in range(basis.k_max):
            for tab, val in zip(tabs, radial_profile(mu, k, rho)):
                tab[mu, k] = val
    return tabs


def _angular_tables(basis, theta):
    m = basis.frequencies[:, None]
    th = np.asarray(theta)[None, :]
    am = np.abs(m)
    t = np.where(m >= 0, np.cos(am * th), np.sin(am * th))
    dt = np.where(m >= 0, -am * np.sin(am * th), am * np.cos(am * th))
    return t, dt


def _check_grid(basis, grid, r):
    need = 2 * (basis.m_max + basis.k_max)
    if grid.n_ang < need or grid.n_rad < need:
        raise ValueError(
            f"grid {grid.n_rad}x{grid.n_ang} too coarse for basis "
            f"(m_max={basis.m_max}, k_max={basis.k_max}); need >= {need} each way")
    if not np.isclose(grid.radius, r, rtol=0, atol=1e-15 * max(r, 1.0)):
        raise ValueError(f"grid radius {grid.radius} does not match r = {r}")


def assemble(fmap, r, basis, grid):
    """Stiffness matrix K and |f'|²-weighted mass matrix M on the disk of radius r."""
    if not 0 < r <= 1:
        raise ValueError("radius must lie in (0, 1]")
    _check_grid(basis, grid, r)
    rho = grid.s / r
    g, dg, _, g_over = _radial_tables(basis, rho)
    mus = np.abs(basis.frequencies)
    n_m, n_k = len(mus), basis.k_max

    # K is block diagonal in m and scale invariant: the r² from the area element
    # cancels the 1/r² from the gradient
    rw_ref = grid.radial_weights / (r * r)
    K = np.zeros((n_m, n_k, n_m, n_k))
    for i, mu in enumerate(mus):
        ang = 2 * np.pi if mu == 0 else np.pi
        blk = (dg[mu] * rw_ref) @ dg[mu].T + mu * mu * (g_over[mu] * rw_ref) @ g_over[mu].T
        K[i, :, i, :] = ang * blk

    w = fmap.weight(grid.points)
    t, _ = _angular_tables(basis, grid.theta)
    # W[m, n, i] = ∫ trig_m trig_n w(s_i, θ) dθ
    W = grid.angular_weight * np.einsum("mj,nj,ij->mni", t, t, w, optimize=True)
    G = g[mus]
    M = np.einsum("mki,nli,mni,i->mknl", G, G, W, grid.radial_weights, optimize=True)

    dim = basis.dimension
    K = K.reshape(dim, dim)
    M = M.reshape(dim, dim)
    K = 0.5 * (K + K.T)
    M = 0.5 * (M + M.T)
    return K, M


def smallest_eigenpair(K, M, polish=2):
    """Smallest generalized eigenpair of the symmetric-definite pencil (K, M).

    The eigenvector is M-normalised. Its sign is left as LAPACK returns it.
    """
    K = np.asarray(K, dtype=float)
    M = np.asarray(M, dtype=float)
    try:
        la.cholesky(M, lower=True)
    except la.LinAlgError as exc:
        raise FactorizationError(f"mass matrix is not positive definite: {exc}") from exc
    try:
        vals, vecs = la.eigh(K, M, subset_by_index=[0, 0])
    except la.LinAlgError as exc:
        raise ConvergenceError(f"generalized eigensolve failed: {exc}") from exc
    lam = float(vals[0])
    x = vecs[:, 0]

    def residual(lam, x):
        return np.linalg.norm(K @ x - lam * (M @ x)) / max(np.linalg.norm(K @ x), 1e-300)

    # inverse iteration at the computed eigenvalue; the near singularity is the point
    for _ in range(polish):
        if residual(lam, x) <= 1e-14:
            break
        try:
            y = la.lu_solve(la.lu_factor(K - lam * M, check_finite=False), M @ x)
        except (la.LinAlgError, ValueError):
            break
        if not np.all(np.isfinite(y)):
            break
        x = y / np.sqrt(y @ M @ y)
        lam = float((x @ K @ x) / (x @ M @ x))

    x = x / np.sqrt(x @ M @ x)
    res = residual(lam, x)
    if not np.isfinite(res) or res > 1e-8:
        raise ConvergenceError(f"eigen-residual {res:.3e} after polishing")
    return lam, x


@dataclass(frozen=True, eq=False)
class EigenSolution:
    """First eigenpair of the pulled-back problem on the disk of radius r.

    ``coeffs`` are normalised so that ∫ψ²|f'|² dA = 1, i.e. the eigenfunction
    on the image domain has unit L² norm. ψ is positive inside.
    """

    lam: float
    coeffs: np.ndarray
    radius: float
    map: ConformalMap
    basis: BasisSpec
    K: np.ndarray = field(repr=False, default=None)
    M: np.ndarray = field(repr=False, default=None)

    @property
    def rayleigh_quotient(self):
        c = self.coeffs
        return float((c @ self.K @ c) / (c @ self.M @ c))

    def _coeff_grid(self):
        return self.coeffs.reshape(2 * self.basis.m_max + 1, self.basis.k_max)

    def polar_derivatives(self, s, theta):
        """ψ, ψ_s, ψ_θ/s, ψ_ss, ψ_sθ at polar points (s, θ), s <= r.

        ψ_θ/s is evaluated from the analytic quotient g/ρ, so it stays finite
        at the origin.
        """
        s = np.asarray(s, dtype=float)
        theta = np.asarray(theta, dtype=float)
        s, theta = np.broadcast_arrays(s, theta)
        shape = s.shape
        s = s.ravel()
        theta = theta.ravel()
        r = self.radius
        rho = s / r
        g, dg, d2g, g_over = _radial_tables(self.basis, rho)
        t, dt = _angular_tables(self.basis, theta)
        mus = np.abs(self.basis.frequencies)
        C = self._coeff_grid()

        def comb(rad, ang):
            return np.einsum("mk,mkp,mp->p", C, rad[mus], ang, optimize=True)

        psi = comb(g, t)
        psi_s = comb(dg, t) / r
        psi_t_over_s = comb(g_over, dt) / r
        psi_ss = comb(d2g, t) / (r * r)
        psi_st = comb(dg, dt) / r
        return tuple(a.reshape(shape) for a in (psi, psi_s, psi_t_over_s, psi_ss, psi_st))

    def polar_derivatives_tensor(self, s, theta):
        """As ``polar_derivatives`` on the product grid s x θ, shape (len(s), len(θ))."""
        s = np.asarray(s, dtype=float)
        theta = np.asarray(theta, dtype=float)
        r = self.radius
        g, dg, d2g, g_over = _radial_tables(self.basis, s / r)
        t, dt = _angular_tables(self.basis, theta)
        mus = np.abs(self.basis.frequencies)
        C = self._coeff_grid()

        def comb(rad, ang):
            return np.einsum("mk,mki,mj->ij", C, rad[mus], ang, optimize=True)

        return (comb(g, t), comb(dg, t) / r, comb(g_over, dt) / r,
                comb(d2g, t) / (r * r), comb(dg, dt) / r)

    def _polar(self, z):
        z = np.asarray(z, dtype=complex)
        s = np.abs(z)
        if np.any(s > self.radius * (1 + 1e-12)):
            raise ValueError("evaluation point outside the disk |z| <= r")
        return np.minimum(s, self.radius), np.angle(z)

    def psi(self, z):
        s, th = self._polar(z)
        val = self.polar_derivatives(s, th)[0]
        return float(val) if val.ndim == 0 else val

    def grad(self, z):
        """Cartesian gradient (ψ_x, ψ_y), stacked on the last axis."""
        s, th = self._polar(z)
        _, ps, pt, _, _ = self.polar_derivatives(s, th)
        c, sn = np.cos(th), np.sin(th)
        return np.stack([c * ps - sn * pt, sn * ps + c * pt], axis=-1)

    def grad_norm(self, z):
        s, th = self._polar(z)
        _, ps, pt, _, _ = self.polar_derivatives(s, th)
        val = np.hypot(ps, pt)
        return float(val) if val.ndim == 0 else val


def solve(fmap, r, basis=None, grid=None):
    """Assemble and solve; the returned ψ is positive and normalised."""
    basis = basis or BasisSpec()
    grid = grid if grid is not None else default_grid(r)
    if grid.radius != r:
        grid = grid.with_radius(r)
    K, M = assemble(fmap, r, basis, grid)
    lam, x = smallest_eigenpair(K, M)
    sol = EigenSolution(lam, x, r, fmap, basis, K, M)
    centre = sol.psi(0.0)
    if centre == 0.0:
        centre = float(sol.psi(0.5 * r * np.exp(1j * np.linspace(0, 2 * np.pi, 8))).sum())
    if centre < 0:
        sol = EigenSolution(lam, -x, r, fmap, basis, K, M)
    return sol


def eval_psi(sol, z):
    return sol.psi(z)


def eval_grad_psi(sol, z):
    """Gradient magnitude and Cartesian gradient of ψ at z."""
    return sol.grad_norm(z), sol.grad(z)
