"""Total curvature of |∇ψ|²|dz|², an experiment.

For convex images the first eigenfunction has a single maximum; the total
curvature is a boundary flux plus 2π for that critical point. We look at how
close to 4π it lands for a few maps.
"""

import math

from schwarzeig import ConformalMap, solve
from schwarzeig.eigenmetric import total_curvature_eigenmetric

cases = [([0, 1], 1.0), ([0, 0.7], 1.0), ([0, 1, 0.2], 0.8), ([0, 1, 0.3], 0.8),
         ([0, 1, 0, 0.1], 0.9)]
for coeffs, r in cases:
    fmap = ConformalMap(coeffs)
    sv = total_curvature_eigenmetric(solve(fmap, r))
    pts = ", ".join(f"{z.real:+.4f}{z.imag:+.4f}i" for z in sv.critical_points)
    print(f"f(z) = {str(fmap):24s} r = {r:3.1f}  critical points [{pts}]  "
          f"total - 4pi = {sv.total - 4 * math.pi:+.2e}")
