"""Command-line front end.

    python -m schwarzeig sweep --coeffs 0,1,0.3 --r-start 0.05 --r-end 0.95 --steps 19
    python -m schwarzeig bessel-disk --plot --plot-dir figs

Exit status: 0 success, 1 monotonicity violation, 2 usage error, 3 numerical failure.
"""

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from .bessel_disk import figure_profiles, length_area, total_curvature
from .conformal import ConformalMap, parse_coefficients
from .eigenmetric import total_curvature_eigenmetric
from .eigensolver import BasisSpec, SolverError, solve
from .payne_rayner import isoperimetric_report
from .quadrature import DiskQuadrature
from .schwarz import (CriticalRadiusError, Verdict, fd_derivative,
                      fd_derivative_richardson, hadamard_derivative, sweep)
from .special import first_zero_j0
from .svg import line_plot

SCHEMA = 1

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3

SWEEP_COLUMNS = ["r", "lambda", "phi", "dlambda_hadamard", "dlambda_fd",
                 "pr_margin", "pr_alt_margin", "univalent_certified"]


class UsageError(Exception):
    pass


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    if isinstance(v, (int, np.integer)):
        return int(v)
    return v


def render(command, columns, rows, meta, fmt):
    """Serialise a table deterministically as CSV (with # comment lines) or JSON."""
    meta = {"schema": SCHEMA, "command": command, **meta}
    if fmt == "json":
        doc = dict((k, _json_value(v)) for k, v in meta.items())
        doc["columns"] = columns
        doc["rows"] = [{c: _json_value(v) for c, v in zip(columns, row)} for row in rows]
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    for k, v in meta.items():
        buf.write(f"# {k}={_fmt(v)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _parse_radii(text):
    try:
        radii = [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"malformed radius list {text!r}") from exc
    if not radii or not all(0 < r < 1 for r in radii):
        raise UsageError("radii must lie in (0, 1)")
    return radii


def _map(args):
    try:
        return ConformalMap(parse_coefficients(args.coeffs))
    except ValueError as exc:
        raise UsageError(f"bad --coeffs {args.coeffs!r}: {exc}") from exc


def _numerics(args):
    try:
        basis = BasisSpec(args.m_max, args.k_max)
        grid = DiskQuadrature(0.5, args.n_rad, args.n_ang)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    need = 2 * (basis.m_max + basis.k_max)
    if grid.n_rad < need or grid.n_ang < need:
        raise UsageError(f"grid must have at least {need} nodes each way for this basis")
    return basis, grid


def cmd_sweep(args):
    fmap = _map(args)
    basis, grid = _numerics(args)
    if not 0 < args.r_start < args.r_end < 1 or args.steps < 2:
        raise UsageError("need 0 < r-start < r-end < 1 and steps >= 2")
    res = sweep(fmap, args.r_start, args.r_end, args.steps, basis, grid, h=args.h,
                richardson=False, workers=args.workers)
    rows = [[p.r, p.lam, p.phi, p.dlambda_hadamard, p.dlambda_fd, p.pr_margin,
             p.pr_alt_margin, p.univalent_certified] for p in res.points]
    meta = {"map": str(fmap), "verdict": str(res.verdict),
            "skipped": ";".join(_fmt(r) for r in res.skipped)}
    print(f"verdict: {res.verdict}", file=sys.stderr)
    if not all(p.univalent_certified for p in res.points):
        print("warning: univalence not certified at some radii", file=sys.stderr)
    code = EXIT_VIOLATION if res.verdict is Verdict.VIOLATION else EXIT_OK
    return render("sweep", SWEEP_COLUMNS, rows, meta, args.format), code


def cmd_derivative_check(args):
    fmap = _map(args)
    basis, grid = _numerics(args)
    cols = ["r", "h", "dlambda_hadamard", "dlambda_fd", "dlambda_richardson",
            "rel_diff_fd", "rel_diff_richardson"]
    rows = []
    for r in _parse_radii(args.radii):
        sol = solve(fmap, r, basis, grid.with_radius(r))
        had = hadamard_derivative(sol, grid.n_ang)
        fd = fd_derivative(fmap, r, args.h, basis, grid)
        rich = fd_derivative_richardson(fmap, r, args.h, basis, grid)
        rows.append([r, args.h, had, fd, rich, abs(had - fd) / abs(fd),
                     abs(had - rich) / abs(rich)])
    return render("derivative-check", cols, rows, {"map": str(fmap)}, args.format), EXIT_OK


def cmd_payne_rayner(args):
    fmap = _map(args)
    basis, grid = _numerics(args)
    cols = ["r", "lambda", "L", "A", "margin", "alt_margin", "residual1", "residual2"]
    rows = []
    for r in _parse_radii(args.radii):
        g = grid.with_radius(r)
        rep = isoperimetric_report(solve(fmap, r, basis, g), g)
        rows.append([r, rep.lam, rep.L, rep.A, rep.margin, rep.alt_margin,
                     rep.residual1, rep.residual2])
    return render("payne-rayner", cols, rows, {"map": str(fmap)}, args.format), EXIT_OK


def cmd_eigenmetric(args):
    fmap = _map(args)
    basis, grid = _numerics(args)
    cols = ["r", "n_critical", "critical_points", "boundary_term", "interior_term",
            "total", "deviation_from_4pi", "experimental"]
    rows = []
    for r in _parse_radii(args.radii):
        g = grid.with_radius(r)
        sv = total_curvature_eigenmetric(solve(fmap, r, basis, g), g)
        pts = ";".join(f"{_fmt(z.real)}:{_fmt(z.imag)}" for z in sv.critical_points)
        rows.append([r, len(sv.critical_points), pts, sv.boundary_term, sv.interior_term,
                     sv.total, sv.deviation, sv.experimental])
    return render("eigenmetric", cols, rows, {"map": str(fmap)}, args.format), EXIT_OK


def _bessel_plots(prof, directory):
    os.makedirs(directory, exist_ok=True)
    far = prof.s >= 0.1
    figures = {
        "bessel_conformal_factor.svg": line_plot(
            [("j0 J1(j0 s)", prof.s, prof.rho_scaled), ("J1(j0 s)", prof.s, prof.rho)],
            "Bessel disk: conformal factor", "s = |z|", "rho"),
        "bessel_curvature.svg": line_plot(
            [("rho = j0 J1(j0 s)", prof.s[far], prof.curvature_scaled[far]),
             ("rho = J1(j0 s)", prof.s[far], prof.curvature[far])],
            "Bessel disk: Gauss curvature (s >= 0.1)", "s = |z|", "K"),
        "bessel_gauss_bonnet_density.svg": line_plot(
            [("-Laplacian log rho", prof.s, prof.density)],
            "Bessel disk: Gauss-Bonnet integrand", "s = |z|", "K dA / |dz|^2"),
    }
    paths = []
    for name, doc in figures.items():
        path = os.path.join(directory, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(doc)
        paths.append(path)
    return paths


def cmd_bessel_disk(args):
    if args.samples < 16:
        raise UsageError("--samples must be at least 16")
    prof = figure_profiles(args.samples)
    L, A = length_area()
    tc = total_curvature(1e-6)
    meta = {
        "j0": first_zero_j0(), "L": L, "A": A, "isoperimetric_ratio": L * L / (4 * math.pi * A),
        "total_curvature": tc.extrapolated, "boundary_term": tc.boundary_term,
        "origin_term": tc.origin_term, "annulus_curvature_eps_1e-6": tc.annulus,
    }
    if args.plot:
        for path in _bessel_plots(prof, args.plot_dir):
            print(f"wrote {path}", file=sys.stderr)
    cols = ["s", "rho", "rho_scaled", "curvature", "curvature_scaled", "gauss_bonnet_density"]
    rows = list(zip(prof.s, prof.rho, prof.rho_scaled, prof.curvature,
                    prof.curvature_scaled, prof.density))
    return render("bessel-disk", cols, rows, meta, args.format), EXIT_OK


def cmd_selftest(args):
    from .acceptance import run_all
    results = run_all(verbose=True, stream=sys.stderr)
    cols = ["criterion", "name", "status", "detail"]
    rows = [[r.number, r.name, r.status, r.detail] for r in results]
    failed = any(r.status == "FAIL" for r in results)
    return render("selftest", cols, rows, {}, args.format), (EXIT_VIOLATION if failed else EXIT_OK)


def _add_common(p, coeffs=True, numerics=True):
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    p.add_argument("--config", help="key = value file; flags override it")
    if coeffs:
        p.add_argument("--coeffs", default="0,1",
                       help="coefficients a0,a1,... as reals or re:im pairs")
    if numerics:
        p.add_argument("--m-max", type=int, default=8)
        p.add_argument("--k-max", type=int, default=16)
        p.add_argument("--n-rad", type=int, default=64)
        p.add_argument("--n-ang", type=int, default=128)
        p.add_argument("--h", type=float, default=1e-3, help="finite-difference step")


def build_parser():
    parser = argparse.ArgumentParser(prog="schwarzeig", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="Φ(r) monotonicity sweep")
    _add_common(p)
    p.add_argument("--r-start", type=float, default=0.05)
    p.add_argument("--r-end", type=float, default=0.95)
    p.add_argument("--steps", type=int, default=19)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("derivative-check", help="Hadamard formula vs finite differences")
    _add_common(p)
    p.add_argument("--radii", default="0.2,0.5,0.8")
    p.set_defaults(func=cmd_derivative_check)

    p = sub.add_parser("payne-rayner", help="eigenfunction isoperimetric deficit")
    _add_common(p)
    p.add_argument("--radii", default="0.2,0.5,0.8")
    p.set_defaults(func=cmd_payne_rayner)

    p = sub.add_parser("bessel-disk", help="Bessel disk geometry and figure data")
    _add_common(p, coeffs=False, numerics=False)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--plot", action="store_true", help="write three SVG figures")
    p.add_argument("--plot-dir", default=".")
    p.set_defaults(func=cmd_bessel_disk)

    p = sub.add_parser("eigenmetric", help="total curvature of |∇ψ|²|dz|² (experimental)")
    _add_common(p)
    p.add_argument("--radii", default="0.8")
    p.set_defaults(func=cmd_eigenmetric)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    _add_common(p, coeffs=False, numerics=False)
    p.set_defaults(func=cmd_selftest)
    return parser


def read_config(path):
    """Parse ``key = value`` lines; '#' starts a comment. Keys use flag spelling."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            out[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return out


def parse_args(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            cfg = read_config(args.config)
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from exc
        sub = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest: a for a in sub._actions}
        defaults = {}
        for key, value in cfg.items():
            if key not in known or key in ("config", "help"):
                raise UsageError(f"unknown config key {key!r}")
            action = known[key]
            if action.choices and value not in action.choices:
                raise UsageError(f"config {key} must be one of {sorted(action.choices)}")
            if action.const is True and action.nargs == 0:
                defaults[key] = value.lower() in ("1", "true", "yes", "on")
            else:
                defaults[key] = action.type(value) if action.type else value
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


def run(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_args(argv)
        text, code = args.func(args)
        if args.output == "-":
            sys.stdout.write(text)
        else:
            try:
                with open(args.output, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                raise UsageError(f"cannot write {args.output}: {exc}") from exc
        return code
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SolverError, CriticalRadiusError, ValueError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def main():
    sys.exit(run())
