"""The Bessel disk: the unit disk with metric J1(j0|z|)|dz|.

Writes three PNG figures (conformal factor, curvature, Gauss-Bonnet
integrand) to the current directory and prints the closed-form checks.
Needs matplotlib (``pip install .[demos]``).
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from schwarzeig.bessel_disk import figure_profiles, length_area, total_curvature

L, A = length_area()
tc = total_curvature(1e-6)
print(f"L = {L:.15f}, A = {A:.15f}, L^2/(4 pi A) = {L * L / (4 * math.pi * A):.15f}")
print(f"total curvature = {tc.extrapolated:.15f} (4 pi = {4 * math.pi:.15f})")
print(f"  boundary term {tc.boundary_term:.15f}, origin term {tc.origin_term:.15f}")

prof = figure_profiles(400)
far = prof.s >= 0.1

fig, ax = plt.subplots()
ax.plot(prof.s, prof.rho_scaled, label=r"$j_0 J_1(j_0 s)$")
ax.plot(prof.s, prof.rho, label=r"$J_1(j_0 s)$")
ax.set_xlabel("s = |z|")
ax.set_ylabel(r"$\rho$")
ax.legend()
fig.savefig("bessel_conformal_factor.png", dpi=120)

fig, ax = plt.subplots()
ax.plot(prof.s[far], prof.curvature[far], label=r"$\rho = J_1(j_0 s)$")
ax.plot(prof.s[far], prof.curvature_scaled[far], label=r"$\rho = j_0 J_1(j_0 s)$")
ax.set_xlabel("s = |z|")
ax.set_ylabel("Gauss curvature")
ax.set_yscale("log")
ax.legend()
fig.savefig("bessel_curvature.png", dpi=120)

fig, ax = plt.subplots()
ax.plot(prof.s, prof.density)
ax.set_xlabel("s = |z|")
ax.set_ylabel(r"$-\Delta \log\rho$")
fig.savefig("bessel_gauss_bonnet_density.png", dpi=120)
print("wrote bessel_conformal_factor.png, bessel_curvature.png, bessel_gauss_bonnet_density.png")
