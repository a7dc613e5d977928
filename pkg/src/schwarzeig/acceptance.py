"""Acceptance checks, one function per criterion.

Each check returns a ``CriterionResult``. The eigenmetric check is a soft
gate: its failure is reported but does not fail the run.
"""

from dataclasses import dataclass
from functools import lru_cache
import io
import math
import sys

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .bessel_disk import length_area, total_curvature
from .conformal import ConformalMap
from .eigenmetric import total_curvature_eigenmetric
from .eigensolver import BasisSpec, solve
from .payne_rayner import identity_chain_check, isoperimetric_report
from .schwarz import (Verdict, fd_derivative, fd_derivative_richardson,
                      hadamard_derivative, phi_of_r, sweep)
from .special import bessel_j, bessel_j_prime, first_zero_j0

__all__ = ["CriterionResult", "CHECKS", "run_all", "shooting_eigenvalue"]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    status: str      # PASS, FAIL, or SOFT-FAIL
    detail: str

    @property
    def passed(self):
        return self.status == "PASS"


def _result(number, name, ok, detail, soft=False):
    status = "PASS" if ok else ("SOFT-FAIL" if soft else "FAIL")
    return CriterionResult(number, name, status, detail)


def _j0sq():
    return first_zero_j0() ** 2


@lru_cache(maxsize=None)
def _sweep(coeffs):
    return sweep(ConformalMap(coeffs), 0.05, 0.95, 19, richardson=False)


def shooting_eigenvalue(weight, r, bracket):
    """First eigenvalue of ψ'' + ψ'/s + λ w(s) ψ = 0, ψ'(0) = 0, ψ(r) = 0.

    Radial shooting from the regular series start ψ ≈ 1 near s = 0; the root
    in ``bracket`` is found with Brent's method.
    """
    s0 = 1e-8 * r

    def endpoint(lam):
        def rhs(s, y):
            return [y[1], -y[1] / s - lam * weight(s) * y[0]]
        sol = solve_ivp(rhs, (s0, r), [1.0, 0.0], method="DOP853", rtol=1e-13, atol=1e-15)
        return sol.y[0, -1]

    return brentq(endpoint, *bracket, xtol=1e-14, rtol=1e-15)


def check_01():
    errs = [abs(solve(ConformalMap.identity(), r).lam - _j0sq() / r ** 2) / (_j0sq() / r ** 2)
            for r in (0.25, 0.5, 1.0)]
    return _result(1, "disk eigenvalue j0^2/r^2", max(errs) < 1e-8,
                   f"max rel err {max(errs):.2e} (tol 1e-8)")


def check_02():
    worst, verdicts = 0.0, []
    for a in (0.7, 1.0, 2.0):
        res = _sweep((0, a))
        verdicts.append(str(res.verdict))
        worst = max(worst, float(np.max(np.abs(res.phis * a * a - 1))))
    ok = all(v == "CONSTANT" for v in verdicts) and worst < 1e-7
    return _result(2, "linear maps give constant phi", ok,
                   f"verdicts {verdicts}, max rel dev {worst:.2e} (tol 1e-7)")


def check_03():
    res = _sweep((0, 1, 0.3))
    d = np.diff(res.phis)
    ok = res.verdict is Verdict.DECREASING and bool(np.all(d < -1e-9))
    return _result(3, "phi strictly decreasing for z+0.3z^2", ok,
                   f"verdict {res.verdict}, max dphi {d.max():.2e} (need < -1e-9)")


def check_04():
    fmap = ConformalMap([0, 0, 1])
    lam_err = phi_err = shoot_err = 0.0
    for r in (0.3, 0.6, 0.9):
        exact = _j0sq() / r ** 4
        lam = solve(fmap, r).lam
        shot = shooting_eigenvalue(lambda s: 4 * s * s, r, (0.5 * exact, 1.5 * exact))
        lam_err = max(lam_err, abs(lam - exact) / exact)
        shoot_err = max(shoot_err, abs(lam - shot) / shot)
        phi_err = max(phi_err, abs(phi_of_r(lam, r) * r * r - 1))
    ok = lam_err < 1e-6 and shoot_err < 1e-6 and phi_err < 1e-5
    return _result(4, "Riemann surface z^2: lambda = j0^2/r^4", ok,
                   f"rel err vs closed form {lam_err:.2e}, vs shooting {shoot_err:.2e}, "
                   f"phi*r^2-1 {phi_err:.2e}")


def check_05():
    worst_rich = worst_raw = 0.0
    for coeffs in ((0, 1), (0, 1, 0.3), (0, 0, 1)):
        fmap = ConformalMap(coeffs)
        for r in (0.2, 0.5, 0.8):
            had = hadamard_derivative(solve(fmap, r))
            raw = fd_derivative(fmap, r, 1e-3)
            rich = fd_derivative_richardson(fmap, r, 1e-3)
            worst_raw = max(worst_raw, abs(had - raw) / abs(raw))
            worst_rich = max(worst_rich, abs(had - rich) / abs(rich))
    return _result(5, "Hadamard derivative vs central differences", worst_rich < 1e-4,
                   f"max rel diff {worst_rich:.2e} vs Richardson central FD at h=1e-3 "
                   f"(tol 1e-4); single-step FD {worst_raw:.2e}")


def check_06():
    worst = 0.0
    for a in (0.7, 1.0, 2.0):
        for r in (0.5, 0.9):
            rep = isoperimetric_report(solve(ConformalMap.linear(a), r))
            worst = max(worst, abs(rep.relative_margin))
    return _result(6, "Payne-Rayner equality for disks", worst < 1e-9,
                   f"max |L^2-4piA|/L^2 {worst:.2e} (tol 1e-9)")


def check_07():
    rep = isoperimetric_report(solve(ConformalMap([0, 1, 0.3]), 0.8))
    return _result(7, "Payne-Rayner strict off disks", rep.relative_margin > 1e-4,
                   f"margin/L^2 {rep.relative_margin:.4e} (need > 1e-4)")


def check_08():
    res = _sweep((0, 1, 0.3))
    s1 = min(p.chain_slack_pr for p in res.points)
    s2 = min(p.chain_slack_cs for p in res.points)
    return _result(8, "proof-chain inequalities", s1 >= -1e-10 and s2 >= -1e-10,
                   f"min slacks {s1:.3e}, {s2:.3e} (need >= -1e-10)")


def check_09():
    worst = 0.0
    for coeffs in ((0, 1), (0, 0.7), (0, 2), (0, 1, 0.3), (0, 0, 1)):
        for r in (0.2, 0.5, 0.8):
            worst = max(worst, *identity_chain_check(solve(ConformalMap(coeffs), r)))
    return _result(9, "Green/Rayleigh identity chain", worst < 1e-6,
                   f"max residual {worst:.2e} (tol 1e-6)")


def check_10():
    L, A = length_area()
    dev = abs(L * L / (4 * math.pi * A) - 1)
    return _result(10, "Bessel disk L^2 = 4 pi A", dev < 1e-10,
                   f"|L^2/(4piA) - 1| {dev:.2e} (tol 1e-10)")


def check_11():
    tc = total_curvature(1e-6)
    j0 = first_zero_j0()
    ident = abs(j0 * bessel_j_prime(1, j0) + bessel_j(1, j0))
    d_tot = abs(tc.extrapolated - 4 * math.pi)
    d_b = abs(tc.boundary_term - 2 * math.pi)
    d_o = abs(tc.origin_term - 2 * math.pi)
    ok = d_tot < 1e-8 and d_b < 1e-8 and d_o < 1e-8 and ident < 1e-12
    return _result(11, "Bessel disk total curvature 4 pi", ok,
                   f"|total-4pi| {d_tot:.1e}, |boundary-2pi| {d_b:.1e}, "
                   f"|origin-2pi| {d_o:.1e}, |j0 J1'(j0)+J1(j0)| {ident:.1e}")


def check_12():
    from .schwarz import phi_limit_zero
    devs = []
    for coeffs in ((0, 1, 0.3), (0, 2, 0.3)):
        fmap = ConformalMap(coeffs)
        devs.append(abs(phi_limit_zero(fmap) - 1 / abs(fmap.coeffs[1]) ** 2))
    return _result(12, "small-r limit of phi", max(devs) < 2e-2,
                   f"|phi(0.05) - 1/|f'(0)|^2| = {', '.join(f'{d:.2e}' for d in devs)} (tol 2e-2)")


def check_13():
    try:
        sv = total_curvature_eigenmetric(solve(ConformalMap([0, 1, 0.2]), 0.8))
    except ValueError as exc:
        return _result(13, "eigenmetric total curvature (experimental)", False, str(exc), soft=True)
    ok = len(sv.critical_points) == 1 and abs(sv.deviation) < 1e-2
    return _result(13, "eigenmetric total curvature (experimental)", ok,
                   f"{len(sv.critical_points)} critical point(s), total-4pi {sv.deviation:.2e} "
                   f"(tol 1e-2)", soft=True)


def check_14():
    from .cli import run
    fmap = ConformalMap([0, 1, 0.3])
    lams = [solve(fmap, 0.8, BasisSpec(m, k)).lam for m, k in ((2, 4), (4, 8), (6, 12), (8, 16))]
    mono = all(b <= a * (1 + 1e-12) for a, b in zip(lams, lams[1:]))
    base = solve(fmap, 0.8).lam
    scale_err = max(abs(solve(fmap.scaled(c), 0.8).lam * abs(c) ** 2 / base - 1)
                    for c in (0.7, 2.0, 1j))
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        old, sys.stdout = sys.stdout, buf
        try:
            code = run(["sweep", "--coeffs", "0,1,0.3", "--steps", "4"])
        finally:
            sys.stdout = old
        outs.append((code, buf.getvalue().encode()))
    same = outs[0] == outs[1] and outs[0][0] == 0
    ok = mono and scale_err < 1e-13 and same
    return _result(14, "property suites", ok,
                   f"basis monotone {mono}, scaling rel err {scale_err:.1e} (tol 1e-13), "
                   f"CLI byte-identical {same}")


CHECKS = [check_01, check_02, check_03, check_04, check_05, check_06, check_07,
          check_08, check_09, check_10, check_11, check_12, check_13, check_14]


def run_all(verbose=False, stream=None):
    stream = stream or sys.stdout
    results = []
    for check in CHECKS:
        res = check()
        results.append(res)
        if verbose:
            print(f"[{res.status}] {res.number:02d} {res.name}: {res.detail}", file=stream, flush=True)
    return results
