"""Disk eigenvalues from the spectral Galerkin solver.

For the identity map the pulled-back problem is the Dirichlet Laplacian on
the disk of radius r, whose first eigenvalue is j0²/r². We compare the solver
against that closed form and watch the error as the basis grows.
"""

import numpy as np

from schwarzeig import BasisSpec, ConformalMap, first_zero_j0, solve

j0 = first_zero_j0()
print(f"first zero of J0: {j0!r}")

identity = ConformalMap.identity()
print("\n  r      lambda               j0^2/r^2             rel err")
for r in (0.25, 0.5, 0.75, 1.0):
    lam = solve(identity, r).lam
    exact = j0 ** 2 / r ** 2
    print(f"  {r:4.2f}   {lam:.15g}   {exact:.15g}   {abs(lam / exact - 1):.1e}")

# a non-trivial map: convergence of the first eigenvalue under basis enlargement
fmap = ConformalMap([0, 1, 0.3])
print(f"\nf(z) = {fmap}, r = 0.8")
prev = None
for m, k in ((2, 4), (4, 8), (6, 12), (8, 16), (10, 20)):
    lam = solve(fmap, 0.8, BasisSpec(m, k)).lam
    step = "" if prev is None else f"  change {prev - lam:.2e}"
    print(f"  basis m_max={m:2d} k_max={k:2d} dim={BasisSpec(m, k).dimension:4d}  "
          f"lambda={lam:.15g}{step}")
    prev = lam

# the eigenvalue is a minimum of the Rayleigh quotient, so it can only drop
sol = solve(fmap, 0.8)
psi0 = float(sol.psi(0.0))
print(f"\nψ(0) = {psi0:.6f} (sign fixed positive), Rayleigh quotient = {sol.rayleigh_quotient:.15g}")
print(f"max |ψ| on |z|=r: {np.max(np.abs(sol.psi(0.8 * np.exp(1j * np.linspace(0, 6.28, 50))))):.1e}")
