import json
from pathlib import Path

import numpy as np
import pytest

from schwarzeig.conformal import ConformalMap
from schwarzeig.eigensolver import solve
from schwarzeig.payne_rayner import identity_chain_check, isoperimetric_report
from schwarzeig.quadrature import DiskQuadrature
from schwarzeig.special import first_zero_j0

J0 = first_zero_j0()
FIXTURE = json.loads((Path(__file__).parent / "fixtures" / "payne_rayner_strictness.json").read_text())


def test_unit_disk_closed_forms(identity):
    rep = isoperimetric_report(solve(identity, 1.0))
    assert rep.L == pytest.approx(2 * np.sqrt(np.pi) * J0, rel=1e-10)
    assert rep.L == pytest.approx(8.524885, abs=1e-6)
    assert rep.A == pytest.approx(J0 ** 2, rel=1e-12)
    assert rep.int_phi_sq == pytest.approx(1.0, abs=1e-12)
    assert abs(rep.relative_margin) < 1e-9


@pytest.mark.parametrize("a", [0.7, 1.0, 2.0, 1 + 1j])
@pytest.mark.parametrize("r", [0.3, 0.9])
def test_equality_for_linear_maps(a, r):
    rep = isoperimetric_report(solve(ConformalMap([0.2, a]), r))
    assert abs(rep.relative_margin) < 1e-9


def test_refinement_fixture_is_converged():
    runs = FIXTURE["runs"]
    finest = FIXTURE["oracle_relative_margin"]
    assert all(abs(run["relative_margin"] - finest) < 1e-9 for run in runs[1:])
    assert finest > 10 * FIXTURE["threshold"]


def test_strict_off_disks(quadratic):
    rep = isoperimetric_report(solve(quadratic, FIXTURE["r"]))
    assert rep.margin > 0
    assert rep.relative_margin > FIXTURE["threshold"]
    assert rep.relative_margin == pytest.approx(FIXTURE["oracle_relative_margin"], abs=1e-9)
    assert rep.alt_margin > 0


@pytest.mark.parametrize("coeffs, r, tol", [([0, 1], 1.0, 1e-8), ([0, 1, 0.3], 0.5, 1e-6),
                                            ([0, 0, 1], 0.7, 1e-6), ([0, 1, 0.1j, 0.05], 0.9, 1e-6)])
def test_identity_chain(coeffs, r, tol):
    res1, res2 = identity_chain_check(solve(ConformalMap(coeffs), r))
    assert res1 < tol and res2 < tol


def test_identity_chain_improves_with_resolution(quadratic):
    from schwarzeig.eigensolver import BasisSpec
    res = []
    for m, k in ((2, 3), (3, 5), (4, 8)):
        grid = DiskQuadrature(0.8, 64, 128)
        res.append(identity_chain_check(solve(quadratic, 0.8, BasisSpec(m, k), grid), grid)[0])
    assert res[0] / res[1] >= 10 and res[1] / res[2] >= 10


def test_length_and_area_do_not_depend_on_grid(quadratic):
    sol = solve(quadratic, 0.8)
    coarse = isoperimetric_report(sol, DiskQuadrature(0.8, 64, 128))
    fine = isoperimetric_report(sol, DiskQuadrature(0.8, 128, 256))
    assert fine.L == pytest.approx(coarse.L, rel=1e-10)
    assert fine.A == pytest.approx(coarse.A, rel=1e-10)


@pytest.mark.parametrize("coeffs, r", [([0, 1, 0.3], 0.8), ([0, 0, 1], 0.5), ([0, 1, 0.45], 0.95)])
def test_two_forms_are_proportional(coeffs, r):
    rep = isoperimetric_report(solve(ConformalMap(coeffs), r))
    slack = (rep.residual1 + rep.residual2) * rep.L ** 2 * 4
    assert abs(rep.margin - rep.lam ** 2 * rep.alt_margin) <= slack + 1e-12 * rep.L ** 2


def test_nonunivalent_surface_is_strict(square):
    rep = isoperimetric_report(solve(square, 0.7))
    assert rep.relative_margin > 1e-3
