"""One test per acceptance criterion, each at its stated tolerance."""

import time

import numpy as np
import pytest

from canonquant import canonical_group as cg
from canonquant import classical as cl
from canonquant import monopole_bundle as mb
from canonquant import monopole_operators as mo
from canonquant import rp2
from canonquant.su2 import SpherePoint, Su2AlgebraElement
from canonquant.suites import run_suite


def test_criterion_01_chern_number(acceptance):
    checks = {}
    for n in range(-3, 4):
        t0 = time.perf_counter()
        flux = mb.chern_flux_integral(n, 100, 200)
        w = mb.equator_winding(n, 100)
        dt = time.perf_counter() - t0
        checks[f"n={n:+d} winding={w.winding} residual={w.residual:.1e}"] = w.winding == n and w.residual < 1e-6
        checks[f"n={n:+d} flux={flux:.12f}"] = round(flux) == n and abs(flux - n) < 1e-6
        checks[f"n={n:+d} runtime {dt:.3f}s < 1s"] = dt < 1.0
    assert acceptance(1, "Chern number from winding and flux", checks)


def test_criterion_02_charge_quantization(acceptance):
    checks = {}
    for nu in (1, 2, 3, 0, -2):
        d = mb.closure_defect(nu)
        checks[f"closure_defect({nu}) = {d:.1e} < 1e-12"] = d < 1e-12
    for nu in (0.3, 0.5, 1.37):
        d = mb.closure_defect(nu)
        checks[f"closure_defect({nu}) = {d:.4f} > 0.1"] = d > 0.1
    for n in (0, 1, 2, 3):
        d = mo.gauge_consistency_defect(n)
        checks[f"gauge consistency n={n}: {d:.1e} < 1e-8"] = d < 1e-8
    for nu in (0.3, 0.5, 1.37):
        d = mo.gauge_consistency_defect(nu)
        checks[f"gauge consistency fails at nu={nu}: {d:.2f} > 0.1"] = d > 0.1
    assert acceptance(2, "charge quantization", checks)


def test_criterion_03_operator_algebra(acceptance):
    checks = {}
    t0 = time.perf_counter()
    for n in (0, 1, 2, 3):
        d = mo.commutator_defect(n, 6)
        checks[f"spectral n={n}, j_max=6: {d:.1e} < 1e-12"] = d < 1e-12
    d = mo.commutator_defect(2, 4, "grid", mo.Grid(128, 256))
    checks[f"grid 128x256, n=2, j<=4: {d:.2e} < 1e-4"] = d < 1e-4
    dt = time.perf_counter() - t0
    checks[f"runtime {dt:.2f}s < 10s"] = dt < 10
    assert acceptance(3, "operator algebra", checks)


def test_criterion_04_local_form(acceptance):
    checks = {}
    grid = mo.Grid(128, 256)
    err = mo.local_form_error(2, 4, grid, axes="zy")
    checks[f"J_z, J_y on grid vs spectral, n=2, j<=4: {err:.2e} < 1e-4"] = err < 1e-4
    x = SpherePoint.from_angles(np.pi / 2, np.pi / 2).vector
    pts = np.random.default_rng(0).normal(size=(20, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    for n in (1, 2, 3):
        wz = mo.omega_tilde("z", pts, n)
        checks[f"omega_tilde_z = n/2 for n={n}"] = bool(np.max(np.abs(wz - n / 2)) < 1e-10)
    wy = float(mo.omega_tilde("y", x, 2))
    checks[f"omega_tilde_y(pi/2, pi/2; n=2) = {wy:+.12f} equals 1 within 1e-10"] = abs(wy - 1.0) < 1e-10
    assert acceptance(4, "local-form agreement", checks)


def test_criterion_05_spectrum(acceptance):
    checks = {}
    got = mo.j2_spectrum(2, 4)
    want = [(2, 3), (6, 5), (12, 7), (20, 9)]
    ok = [k for _, k in got] == [k for _, k in want] and all(abs(a - b) < 1e-10 for (a, _), (b, _) in zip(got, want))
    checks[f"j2_spectrum(2, 4) = {[(round(v, 12), k) for v, k in got]}"] = ok
    for n in (1, 2, 3, 4):
        j0 = n / 2
        low = mo.j2_spectrum(n, 6)[0][0]
        checks[f"lowest j for n={n} is {j0}"] = abs(low - j0 * (j0 + 1)) < 1e-10 and mo.SpectralBasis(n, 6).j_list[0] == j0
    assert acceptance(5, "monopole spectrum", checks)


def test_criterion_06_rp2_parity(acceptance):
    checks = {}
    for sector, values, mults in (("odd", [2, 12, 30], [3, 7, 11]), ("even", [0, 6, 20], [1, 5, 9])):
        ev = np.linalg.eigvalsh(rp2.parity_generators(sector, 5).J2.entries)
        got = [int(np.sum(np.abs(ev - v) < 1e-10)) for v in values]
        checks[f"{sector} sector eigenvalues {values} with multiplicities {got}"] = got == mults and len(ev) == sum(mults)
    leak = rp2.parity_leakage(5)
    checks[f"cross-parity matrix elements {leak:.1e} < 1e-12"] = leak < 1e-12
    assert acceptance(6, "RP2 parity sectors", checks)


def test_criterion_07_holonomy(acceptance):
    checks = {}
    x0 = np.array([1.0, 0, 0])
    h = rp2.holonomy_transport(rp2.great_circle_path(x0, [0, 0, 1], np.pi, 10000))
    checks[f"noncontractible loop {h.real:+.6f}"] = abs(h + 1) < 1e-4
    h = rp2.holonomy_transport(rp2.small_circle_path(0.1, 1000))
    checks[f"contractible loop {h.real:+.8f}"] = abs(h - 1) < 1e-6
    h = rp2.holonomy_transport(rp2.great_circle_path(x0, [0, 0, 1], 2 * np.pi, 20000))
    checks[f"double loop {h.real:+.6f}"] = abs(h - 1) < 1e-4
    pts = np.random.default_rng(42).normal(size=(100, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    worst = 0.0
    for x in pts:
        p = rp2.projector_p(x)
        worst = max(
            worst,
            np.max(np.abs(p @ p - p)),
            np.max(np.abs(p - p.conj().T)),
            abs(np.trace(p) - 1),
            np.max(np.abs(rp2.projector_p(-x) - p)),
        )
    checks[f"projector axioms at 100 points {worst:.1e} < 1e-12"] = worst < 1e-12
    assert acceptance(7, "Z2 holonomy and projector", checks)


def test_criterion_08_classical(acceptance):
    checks = {}
    s0 = cl.PhaseState([1, 0, 0], [0, 1, 0], 1.0, 0.5)
    rep = cl.conservation_report(cl.integrate_motion(s0, 1e-3, 100000))
    checks[f"J drift over 1e5 steps {rep['J_drift']:.1e} < 1e-8"] = rep["J_drift"] < 1e-8 and not rep["aborted"]
    slope, _ = cl.convergence_order(cl.PhaseState([0.1, 0, 0], [0, 3, 0.5], 1.0, 0.3))
    checks[f"convergence slope {slope:.3f} within 4 +- 0.3"] = abs(slope - 4) < 0.3
    checks[f"J.rhat + mu {rep['J_dot_rhat_defect']:.1e}"] = rep["J_dot_rhat_defect"] < 1e-12
    d = cl.classical_bracket_check(cl.random_states(np.random.default_rng(42), 100, mu=0.5))
    checks[f"bracket defect {d:.1e} < 1e-8"] = d < 1e-8
    assert acceptance(8, "classical conservation", checks)


def test_criterion_09_group_obstructions(acceptance):
    rng = np.random.default_rng(42)
    pts = cg.random_cotangent_points(rng, 100)
    checks = {}
    worst = 0.0
    for _ in range(10):
        A1 = cg.AlgebraElementTilde(rng.normal(size=3), Su2AlgebraElement(rng.normal(size=3)))
        A2 = cg.AlgebraElementTilde(rng.normal(size=3), Su2AlgebraElement(rng.normal(size=3)))
        worst = max(worst, cg.cocycle_defect(A1, A2, pts).max_abs)
    checks[f"su(2) family cocycle {worst:.1e} < 1e-8"] = worst < 1e-8
    a1, b1, a2, b2 = (rng.normal(size=3) for _ in range(4))
    r = cg.cocycle_defect(cg.AlgebraElementTilde(a1, cg.Shift(b1)), cg.AlgebraElementTilde(a2, cg.Shift(b2)), pts)
    c = a1 @ b2 - a2 @ b1
    checks[f"abelian cocycle mean {r.mean:+.10f} equals a1.b2 - a2.b1 = {c:+.10f}"] = abs(r.mean - c) < 1e-8
    checks[f"abelian cocycle spread {r.spread:.1e} < 1e-10"] = r.spread < 1e-10
    assert acceptance(9, "canonical-group obstructions", checks)


def test_criterion_10_determinism(acceptance):
    t0 = time.perf_counter()
    first = run_suite("all", {"seed": 42})
    dt = time.perf_counter() - t0
    second = run_suite("all", {"seed": 42})
    checks = {
        "two runs byte-identical": first.to_json() == second.to_json(),
        f"full suite {dt:.1f}s < 120s": dt < 120,
        f"aggregate pass over {len(first.checks)} checks": first.passed,
    }
    assert acceptance(10, "determinism", checks)
