"""Total curvature of the eigenfunction metric |∇ψ|²|dz|² on the disk |z| < r.

This is an experiment, not a theorem: the total is conjectured to be 4π
when the image domain is convex. Away from critical points of ψ the
curvature density is -Δ log|∇ψ|, so by the divergence theorem

    total = -∮_{|z|=r} ∂_s log|∇ψ| ds + 2π · #{nondegenerate critical points},

each excised critical point giving a flux of +2π.
"""

from dataclasses import dataclass, field

import numpy as np

from .quadrature import CircleQuadrature

__all__ = [
    "CurvatureSurvey",
    "CriticalPointSearch",
    "locate_critical_points",
    "hessian",
    "boundary_curvature_term",
    "total_curvature_eigenmetric",
]


def hessian(sol, z, h=None):
    """Hessian of ψ at z by central differences of the analytic gradient."""
    h = h if h is not None else 1e-5 * sol.radius
    gx = sol.grad(np.array([z + h, z - h]))
    gy = sol.grad(np.array([z + 1j * h, z - 1j * h]))
    H = np.column_stack([(gx[0] - gx[1]) / (2 * h), (gy[0] - gy[1]) / (2 * h)])
    return 0.5 * (H + H.T)


@dataclass
class CriticalPointSearch:
    points: list
    failed_seeds: list = field(default_factory=list)
    grad_scale: float = 1.0


def _newton(sol, z, grad_scale, max_iter=50):
    r = sol.radius
    for _ in range(max_iter):
        if abs(z) > r:
            return None
        g = sol.grad(z)
        if np.hypot(*g) < 1e-13 * grad_scale:
            return z
        try:
            step = np.linalg.solve(hessian(sol, z), g)
        except np.linalg.LinAlgError:
            return None
        z = z - complex(step[0], step[1])
        if abs(step[0]) + abs(step[1]) < 1e-15 * r:
            break
    if abs(z) > r:
        return None
    g = sol.grad(z)
    return z if np.hypot(*g) < 1e-8 * grad_scale else None


def locate_critical_points(sol, n_seed=41, dedup=1e-6):
    """Zeros of ∇ψ inside the disk.

    Seeds are local minima of |∇ψ| on an ``n_seed`` x ``n_seed`` Cartesian grid;
    each is refined by Newton's method. Seeds that fail to converge are reported,
    not raised.
    """
    r = sol.radius
    xs = np.linspace(-r, r, n_seed)
    Z = xs[None, :] + 1j * xs[:, None]
    inside = np.abs(Z) < 0.98 * r
    G = np.full(Z.shape, np.inf)
    G[inside] = sol.grad_norm(Z[inside])
    circle = CircleQuadrature(r, 256).points
    grad_scale = max(float(np.max(G[inside])), float(np.max(sol.grad_norm(circle))))

    padded = np.pad(G, 1, constant_values=np.inf)
    neigh = np.stack([padded[1 + di:1 + di + n_seed, 1 + dj:1 + dj + n_seed]
                      for di in (-1, 0, 1) for dj in (-1, 0, 1) if (di, dj) != (0, 0)])
    seeds = Z[inside & np.all(G <= neigh, axis=0) & np.all(np.isfinite(neigh), axis=0)]

    found, failed = [], []
    for z0 in seeds:
        z = _newton(sol, complex(z0), grad_scale)
        if z is None:
            failed.append(complex(z0))
            continue
        if not any(abs(z - p) < dedup * max(r, 1.0) for p in found):
            found.append(z)
    found.sort(key=lambda p: (abs(p), np.angle(p)))
    return CriticalPointSearch(found, failed, grad_scale)


def boundary_curvature_term(sol, n_ang=128):
    """-∮ ∂_s log|∇ψ| ds over |z| = r, from analytic derivatives of the expansion."""
    circle = CircleQuadrature(sol.radius, n_ang)
    r = sol.radius
    _, ps, p, pss, pst = sol.polar_derivatives(np.full(n_ang, r), circle.theta)
    g2 = ps * ps + p * p
    dlog = (ps * pss + p * (pst - p) / r) / g2
    return -circle.weight * float(np.sum(dlog))


@dataclass
class CurvatureSurvey:
    r: float
    critical_points: list
    hessian_dets: list
    boundary_term: float
    failed_seeds: list
    experimental: bool = True

    @property
    def interior_term(self):
        return 2 * np.pi * len(self.critical_points)

    @property
    def total(self):
        return self.boundary_term + self.interior_term

    @property
    def deviation(self):
        return self.total - 4 * np.pi


def total_curvature_eigenmetric(sol, grid=None, n_seed=41):
    """Survey of critical points and total curvature of |∇ψ|²|dz|²."""
    n_ang = grid.n_ang if grid is not None else 128
    search = locate_critical_points(sol, n_seed)
    r = sol.radius
    for z in search.points:
        if r - abs(z) < 1e-3 * r:
            raise ValueError(f"critical point {z} within 1e-3 of the boundary")
    dets = [float(np.linalg.det(hessian(sol, z))) for z in search.points]
    for z, d in zip(search.points, dets):
        if abs(d) <= 1e-6:
            raise ValueError(f"degenerate critical point at {z} (Hessian det {d:.2e})")
    return CurvatureSurvey(
        r=r,
        critical_points=search.points,
        hessian_dets=dets,
        boundary_term=boundary_curvature_term(sol, n_ang),
        failed_seeds=search.failed_seeds,
    )
