"""First Dirichlet eigenvalues of conformal images of disks.

The eigenproblem on f(rD) is pulled back to the disk |z| < r, where it reads
Δψ + λ|f'|²ψ = 0, and solved with a spectral Galerkin method.
"""

from .conformal import ConformalMap, critical_radii, parse_coefficients, univalence_bound
from .eigensolver import BasisSpec, EigenSolution, solve
from .payne_rayner import IsoperimetricReport, identity_chain_check, isoperimetric_report
from .quadrature import CircleQuadrature, DiskQuadrature, integrate_circle, integrate_disk
from .schwarz import (FlowSpec, SweepPoint, SweepResult, Verdict, fd_derivative,
                      hadamard_derivative, lambda_of_r, phi_limit_zero, sweep)
from .special import bessel_j, bessel_j_prime, first_zero_j0

__version__ = "0.1.0"
