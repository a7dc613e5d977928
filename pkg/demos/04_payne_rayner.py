"""Isoperimetric deficit of the eigenfunction metric.

With L = ∮|∇ψ| and A = ∫|∇ψ|², L² ≥ 4πA with equality exactly for disks.
The deficit grows as the image domain departs from a disk.
"""

import numpy as np

from schwarzeig import ConformalMap, identity_chain_check, isoperimetric_report, solve

print("  a2     r     L^2-4piA        relative      alt form")
for a2 in (0.0, 0.1, 0.2, 0.3):
    fmap = ConformalMap([0, 1, a2])
    for r in (0.5, 0.9):
        rep = isoperimetric_report(solve(fmap, r))
        print(f"  {a2:3.1f}  {r:3.1f}  {rep.margin:14.6e}  {rep.relative_margin:11.4e}  "
              f"{rep.alt_margin:12.4e}")

sol = solve(ConformalMap([0, 1, 0.3]), 0.9)
res1, res2 = identity_chain_check(sol)
print(f"\nidentity chain residuals: {res1:.1e}, {res2:.1e}")
rep = isoperimetric_report(solve(ConformalMap.identity(), 1.0))
print(f"unit disk: L = {rep.L:.12f} (2 sqrt(pi) j0 = {2 * np.sqrt(np.pi) * np.sqrt(rep.lam):.12f})")
