"""Monotonicity of Φ(r) = r²λ(rD)/j0².

Linear maps give a constant Φ; anything with a nonlinear term makes Φ drop
strictly as r grows. Φ(r) tends to 1/|f'(0)|² as r → 0.
"""

from schwarzeig import ConformalMap
from schwarzeig.schwarz import phi_limit_zero, sweep

for coeffs in ([0, 1], [0, 0.7], [0, 1, 0.3], [0, 1, 0.2, 0.1]):
    fmap = ConformalMap(coeffs)
    res = sweep(fmap, 0.05, 0.95, 10, richardson=False, workers=4)
    print(f"\nf(z) = {fmap}: verdict {res.verdict}")
    print("   r      phi                 dphi")
    for p in res.points:
        print(f"  {p.r:4.2f}   {p.phi:.15f}   {p.dphi:+.3e}")
    if abs(fmap.coeffs[1]) > 0:
        print(f"  phi(0.05) = {phi_limit_zero(fmap):.6f}, 1/|f'(0)|^2 = "
              f"{1 / abs(fmap.coeffs[1]) ** 2:.6f}")

# z² is two-sheeted: λ(rD) = j0²/r⁴ exactly, so Φ = 1/r² decreases
fmap = ConformalMap([0, 0, 1])
res = sweep(fmap, 0.2, 0.9, 8, richardson=False)
print(f"\nf(z) = z^2: verdict {res.verdict}")
for p in res.points:
    print(f"  r={p.r:4.2f}  phi*r^2 = {p.phi * p.r ** 2:.15f}")
