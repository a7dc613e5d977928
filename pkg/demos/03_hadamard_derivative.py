"""dλ/dr from the boundary flux of |∇ψ|² against finite differences.

The Hadamard formula needs one solve; the finite difference needs two (or
four with a Richardson step). A plain central difference at h = 1e-3 carries
an O(h²/r²) truncation error that is visible at small r.
"""

from schwarzeig import ConformalMap, solve
from schwarzeig.schwarz import fd_derivative, fd_derivative_richardson, hadamard_derivative

for coeffs in ([0, 1], [0, 1, 0.3], [0, 0, 1]):
    fmap = ConformalMap(coeffs)
    print(f"\nf(z) = {fmap}")
    print("   r     hadamard              central fd  (rel)       richardson  (rel)")
    for r in (0.2, 0.5, 0.8):
        had = hadamard_derivative(solve(fmap, r))
        fd = fd_derivative(fmap, r, 1e-3)
        rich = fd_derivative_richardson(fmap, r, 1e-3)
        print(f"  {r:3.1f}  {had:20.12f}  {abs(had / fd - 1):9.2e}  "
              f"{abs(had / rich - 1):18.2e}")
