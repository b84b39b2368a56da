"""
Named verification suites and their machine-readable reports.

A report is a list of named checks, each with a measured value, a tolerance
and the comparison that decides the pass flag.  Reports serialize
deterministically: checks are sorted by name, floats are written with
``repr`` precision and wall-clock timings are left out unless requested.

JSON layout::

    {
      "suite": "monopole",
      "version": "0.1.0",
      "passed": true,
      "config": {"seed": 42, ...},
      "checks": [
        {"name": "...", "value": 1.2e-15, "tolerance": 1e-12,
         "relation": "<", "passed": true},
        ...
      ]
    }

CSV layout: header ``suite,name,value,tolerance,relation,passed`` followed by
one row per check.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from . import canonical_group as cg
from . import classical as cl
from . import monopole_bundle as mb
from . import monopole_operators as mo
from . import rp2
from .su2 import SpherePoint, Su2AlgebraElement, random_su2

SUITES = ("monopole", "rp2", "classical", "group")

DEFAULTS = {
    "seed": 42,
    "n": 2,
    "jmax": 6,
    "grid": (128, 256),
    "lmax": 5,
    "steps": 100000,
    "dt": 1e-3,
}

# fast orbit used for the convergence-order fit (dt = 1e-4 stays above roundoff)
CONVERGENCE_STATE = dict(q=(0.1, 0.0, 0.0), qdot=(0.0, 3.0, 0.5), m=1.0, mu=0.3)


class ConfigError(ValueError):
    pass


@dataclass
class CheckRecord:
    name: str
    value: float
    tolerance: float
    relation: str = "<"
    passed: bool = False
    runtime: float = 0.0

    def __post_init__(self):
        self.value = float(self.value)
        self.tolerance = float(self.tolerance)
        if self.relation == "<":
            self.passed = bool(self.value < self.tolerance)
        elif self.relation == ">":
            self.passed = bool(self.value > self.tolerance)
        else:
            raise ValueError(f"unknown relation {self.relation!r}")


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckRecord]
    config: dict
    version: str = __version__
    passed: bool = field(init=False)

    def __post_init__(self):
        self.checks = sorted(self.checks, key=lambda c: c.name)
        self.passed = all(c.passed for c in self.checks)

    def to_dict(self, include_timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not include_timings:
                d.pop("runtime")
            d["value"] = _json_float(d["value"])
            checks.append(d)
        return {
            "suite": self.suite,
            "version": self.version,
            "passed": self.passed,
            "config": _json_config(self.config),
            "checks": checks,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteReport":
        checks = []
        for c in d["checks"]:
            rec = CheckRecord(c["name"], _parse_float(c["value"]), c["tolerance"], c["relation"], runtime=c.get("runtime", 0.0))
            if rec.passed != c["passed"]:
                raise ValueError(f"check {c['name']} has an inconsistent pass flag")
            checks.append(rec)
        cfg = dict(d["config"])
        if "grid" in cfg:
            cfg["grid"] = tuple(cfg["grid"])
        rep = cls(d["suite"], checks, cfg, d["version"])
        if rep.passed != d["passed"]:
            raise ValueError("aggregate pass flag does not match the checks")
        return rep

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "name", "value", "tolerance", "relation", "passed"])
        for c in self.checks:
            w.writerow([self.suite, c.name, repr(c.value), repr(c.tolerance), c.relation, c.passed])
        return buf.getvalue()


def _json_float(v: float):
    return v if math.isfinite(v) else repr(v)


def _parse_float(v) -> float:
    return float(v)


def _json_config(cfg: dict) -> dict:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(cfg.items())}


def validate_config(config: dict | None) -> dict:
    cfg = dict(DEFAULTS)
    for key, val in (config or {}).items():
        if key not in DEFAULTS:
            raise ConfigError(f"unknown configuration key {key!r}")
        cfg[key] = val
    try:
        cfg["seed"] = int(cfg["seed"])
        cfg["n"] = int(cfg["n"])
        cfg["jmax"] = float(cfg["jmax"])
        cfg["lmax"] = int(cfg["lmax"])
        cfg["steps"] = int(cfg["steps"])
        cfg["dt"] = float(cfg["dt"])
        grid = cfg["grid"]
        if isinstance(grid, str):
            grid = tuple(int(v) for v in grid.lower().split("x"))
        cfg["grid"] = tuple(int(v) for v in grid)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad configuration value: {exc}") from None
    if len(cfg["grid"]) != 2 or min(cfg["grid"]) < 16:
        raise ConfigError("grid must be two sizes, each at least 16 (e.g. 128x256)")
    if cfg["jmax"] < abs(cfg["n"]) / 2:
        raise ConfigError("jmax is below the lowest allowed j = |n|/2")
    if cfg["lmax"] < 1 or cfg["steps"] < 1 or cfg["dt"] <= 0:
        raise ConfigError("lmax, steps and dt must be positive")
    return cfg


# ---------------------------------------------------------------------------
# check builders; each returns a list of (name, thunk) where the thunk yields
# (value, tolerance, relation)

Check = tuple[str, Callable[[], tuple]]


def _spectrum_deviation(got, want) -> float:
    if [k for _, k in got] != [k for _, k in want]:
        return math.inf
    return max(abs(a - b) for (a, _), (b, _) in zip(got, want))


def monopole_checks(cfg: dict) -> list[Check]:
    rng = np.random.default_rng(cfg["seed"])
    n = cfg["n"]
    grid = mo.Grid(*cfg["grid"])
    checks: list[Check] = []
    for k in range(-3, 4):
        checks.append((f"chern.winding[n={k}]", lambda k=k: (_winding_dev(k), 1e-6, "<")))
        checks.append((f"chern.flux[n={k}]", lambda k=k: (abs(mb.chern_flux_integral(k, 100, 200) - k), 1e-6, "<")))
    for nu in (1, 2, 3):
        checks.append((f"closure.integer[nu={nu}]", lambda nu=nu: (mb.closure_defect(nu), 1e-12, "<")))
    for nu in (0.3, 0.5, 1.37):
        checks.append((f"closure.fractional[nu={nu}]", lambda nu=nu: (mb.closure_defect(nu), 0.1, ">")))
    for nu in (0, 1, 2, 3):
        checks.append((f"gauge_consistency.integer[n={nu}]", lambda nu=nu: (mo.gauge_consistency_defect(nu), 1e-8, "<")))
    for nu in (0.5, 1.37):
        checks.append(
            (f"gauge_consistency.fractional[nu={nu}]", lambda nu=nu: (mo.gauge_consistency_defect(nu), 0.1, ">"))
        )
    for k in (0, 1, 2, 3):
        checks.append(
            (f"commutator.spectral[n={k}]", lambda k=k: (mo.commutator_defect(k, cfg["jmax"]), 1e-12, "<"))
        )
    checks.append(
        (f"commutator.grid[n={n}]", lambda: (mo.commutator_defect(n, min(4, cfg["jmax"]), "grid", grid), 1e-4, "<"))
    )
    checks.append((f"local_form[n={n}]", lambda: (mo.local_form_error(n, min(4, cfg["jmax"]), grid), 1e-4, "<")))

    pts = rng.normal(size=(20, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    checks.append(
        (f"omega_tilde.z[n={n}]", lambda: (float(np.max(np.abs(mo.omega_tilde("z", pts, n) - n / 2))), 1e-10, "<"))
    )

    def omega_y():
        x = SpherePoint.from_angles(np.pi / 2, np.pi / 2).vector
        term = -(2 / 2) * x[1] / (1 - x[2])
        return abs(mo.omega_tilde("y", x, 2) - term), 1e-10, "<"

    checks.append(("omega_tilde.y_matches_generator[n=2]", omega_y))
    want = [(2.0, 3), (6.0, 5), (12.0, 7), (20.0, 9)]
    checks.append(("spectrum.j2[n=2,jmax=4]", lambda: (_spectrum_deviation(mo.j2_spectrum(2, 4), want), 1e-10, "<")))
    for k in (1, 2, 3, 4):
        j0 = k / 2
        checks.append(
            (f"spectrum.floor[n={k}]", lambda k=k, j0=j0: (abs(mo.j2_spectrum(k, 6)[0][0] - j0 * (j0 + 1)), 1e-10, "<"))
        )

    def norms():
        return max(abs(mo.l2_norm_quadrature(n, j, m) - 1) for j, m in mo.SpectralBasis(n, 4).labels), 1e-6, "<"

    checks.append((f"harmonics.l2_norm[n={n}]", norms))
    return checks


def _winding_dev(k: int) -> float:
    res = mb.equator_winding(k, 100)
    return abs(res.winding - k) + res.residual


def rp2_checks(cfg: dict) -> list[Check]:
    rng = np.random.default_rng(cfg["seed"] + 1)
    lmax = cfg["lmax"]
    checks: list[Check] = []
    for sector in ("odd", "even"):
        ls = rp2.sector_l_values(sector, lmax)
        want = [(float(l * (l + 1)), 2 * l + 1) for l in ls]

        def spec(sector=sector, want=want):
            g = rp2.parity_generators(sector, lmax)
            ev = np.linalg.eigvalsh(g.J2.entries)
            got = []
            for v in ev:
                if got and abs(v - got[-1][0]) < 1e-8:
                    got[-1][1] += 1
                else:
                    got.append([float(v), 1])
            return _spectrum_deviation([tuple(x) for x in got], want), 1e-10, "<"

        def comm(sector=sector):
            g = rp2.parity_generators(sector, lmax)
            return mo._commutator_defect_matrices([g.Jx.entries, g.Jy.entries, g.Jz.entries]), 1e-12, "<"

        checks.append((f"parity.{sector}.spectrum[lmax={lmax}]", spec))
        checks.append((f"parity.{sector}.commutator[lmax={lmax}]", comm))
    checks.append((f"parity.leakage[lmax={lmax}]", lambda: (rp2.parity_leakage(lmax), 1e-12, "<")))

    steps = 10000
    x0 = np.array([1.0, 0.0, 0.0])
    checks.append(
        (
            "holonomy.noncontractible",
            lambda: (abs(rp2.holonomy_transport(rp2.great_circle_path(x0, [0, 0, 1], np.pi, steps)) + 1), 1e-4, "<"),
        )
    )
    checks.append(
        ("holonomy.contractible", lambda: (abs(rp2.holonomy_transport(rp2.small_circle_path(0.1, 1000)) - 1), 1e-6, "<"))
    )
    checks.append(
        (
            "holonomy.double_loop",
            lambda: (abs(rp2.holonomy_transport(rp2.great_circle_path(x0, [0, 0, 1], 2 * np.pi, 2 * steps)) - 1), 1e-4, "<"),
        )
    )
    pts = rng.normal(size=(100, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)

    def projector():
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
        return float(worst), 1e-12, "<"

    checks.append(("projector.axioms", projector))
    gs = random_su2(rng, 50)
    vs = rng.normal(size=50) + 1j * rng.normal(size=50)
    lams = np.exp(1j * rng.uniform(0, 2 * np.pi, size=50))

    def iso():
        worst = 0.0
        for g, v, lam in zip(gs, vs, lams):
            base, vec = rp2.bundle_iso_phi(g, v)
            for h in (rp2.HElement.diagonal(1), rp2.HElement.diagonal(lam), rp2.HElement.antidiagonal(1), rp2.HElement.antidiagonal(lam)):
                b2, v2 = rp2.bundle_iso_phi(rp2.right_multiply(g, h), rp2.kappa_classify(h) * v)
                worst = max(worst, np.max(np.abs(base.vector - b2.vector)), np.max(np.abs(vec - v2)))
        return float(worst), 1e-10, "<"

    checks.append(("bundle_iso.well_defined", iso))

    def cocycle():
        bad = 0
        for x in pts:
            p = rp2.rp2_canonical_rep(x)
            if min(abs(x)) > 1e-9:
                prod = rp2.rp2_transition(1, 2, p) * rp2.rp2_transition(2, 3, p) * rp2.rp2_transition(3, 1, p)
                bad += prod != 1
        return float(bad), 0.5, "<"

    checks.append(("transition.cocycle", cocycle))
    axioms = rp2.DEFAULT_PHI.check_axioms(np.random.default_rng(cfg["seed"] + 2))
    checks.append(("phi.odd", lambda: (axioms["odd_defect"], 1e-12, "<")))
    checks.append(("phi.nonvanishing", lambda: (axioms["min_norm"], 0.1, ">")))
    return checks


def classical_checks(cfg: dict) -> list[Check]:
    rng = np.random.default_rng(cfg["seed"] + 3)
    s0 = cl.PhaseState([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 1.0, 0.5)
    cache: dict = {}

    def report():
        if "rep" not in cache:
            cache["rep"] = cl.conservation_report(cl.integrate_motion(s0, cfg["dt"], cfg["steps"]))
        return cache["rep"]

    checks: list[Check] = [
        ("conservation.J_drift", lambda: (report()["J_drift"], 1e-8, "<")),
        ("conservation.speed_drift", lambda: (report()["speed_drift"], 1e-9, "<")),
        ("conservation.J_dot_rhat", lambda: (report()["J_dot_rhat_defect"], 1e-12, "<")),
        ("conservation.cone_angle", lambda: (report()["cone_angle_drift"], 1e-8, "<")),
        (
            "conservation.coarse_dt_detected",
            lambda: (cl.conservation_report(cl.integrate_motion(s0, 0.1, 1000))["J_drift"], 1e-8, ">"),
        ),
    ]

    def order():
        slope, _ = cl.convergence_order(cl.PhaseState(**CONVERGENCE_STATE))
        return abs(slope - 4.0), 0.3, "<"

    checks.append(("conservation.rk4_order", order))
    samples = cl.random_states(rng, 100, mu=0.5)
    checks.append(("bracket.negative_sign[gauge=N]", lambda: (cl.classical_bracket_check(samples, "N"), 1e-8, "<")))
    checks.append(("bracket.negative_sign[gauge=S]", lambda: (cl.classical_bracket_check(samples, "S"), 1e-8, "<")))
    checks.append(
        (
            "bracket.gauge_invariance",
            lambda: (abs(cl.classical_bracket_check(samples, "N") - cl.classical_bracket_check(samples, "S")), 1e-8, "<"),
        )
    )
    return checks


def group_checks(cfg: dict) -> list[Check]:
    rng = np.random.default_rng(cfg["seed"] + 4)
    pts = cg.random_cotangent_points(rng, 100)
    pairs = [
        (
            cg.AlgebraElementTilde(rng.normal(size=3), Su2AlgebraElement(rng.normal(size=3))),
            cg.AlgebraElementTilde(rng.normal(size=3), Su2AlgebraElement(rng.normal(size=3))),
        )
        for _ in range(10)
    ]

    def su2_cocycle():
        return max(cg.cocycle_defect(a, b, pts).max_abs for a, b in pairs), 1e-8, "<"

    dim = 3
    ab = [(rng.normal(size=dim), rng.normal(size=dim), rng.normal(size=dim), rng.normal(size=dim)) for _ in range(5)]

    def heis():
        worst = 0.0
        for a1, b1, a2, b2 in ab:
            r = cg.cocycle_defect(cg.AlgebraElementTilde(a1, cg.Shift(b1)), cg.AlgebraElementTilde(a2, cg.Shift(b2)), pts)
            worst = max(worst, float(np.max(np.abs(r.values - (a1 @ b2 - a2 @ b1)))))
        return worst, 1e-8, "<"

    def heis_spread():
        return max(
            cg.cocycle_defect(cg.AlgebraElementTilde(a1, cg.Shift(b1)), cg.AlgebraElementTilde(a2, cg.Shift(b2)), pts).spread
            for a1, b1, a2, b2 in ab
        ), 1e-10, "<"

    elems = [cg.SemidirectElement(rng.normal(size=3), random_su2(rng)) for _ in range(30)]

    def assoc():
        worst = 0.0
        for a, b, c in zip(elems[::3], elems[1::3], elems[2::3]):
            l = cg.semidirect_multiply(cg.semidirect_multiply(a, b), c)
            r = cg.semidirect_multiply(a, cg.semidirect_multiply(b, c))
            worst = max(worst, np.max(np.abs(l.phi_vector - r.phi_vector)), abs(l.g.z0 - r.g.z0), abs(l.g.z1 - r.g.z1))
        return float(worst), 1e-12, "<"

    def action():
        worst = 0.0
        for a, b, pt in zip(elems[::2], elems[1::2], pts):
            l = cg.cotangent_action(cg.semidirect_multiply(a, b), pt)
            r = cg.cotangent_action(a, cg.cotangent_action(b, pt))
            worst = max(worst, np.max(np.abs(l.u - r.u)), np.max(np.abs(l.psi - r.psi)))
        return float(worst), 1e-12, "<"

    return [
        ("cocycle.su2_vanishes", su2_cocycle),
        ("cocycle.heisenberg_value", heis),
        ("cocycle.heisenberg_spread", heis_spread),
        ("semidirect.associativity", assoc),
        ("cotangent.left_action", action),
    ]


BUILDERS = {
    "monopole": monopole_checks,
    "rp2": rp2_checks,
    "classical": classical_checks,
    "group": group_checks,
}


def _run_check(name: str, thunk) -> CheckRecord:
    t0 = time.perf_counter()
    try:
        value, tol, rel = thunk()
    except Exception as exc:  # a crashing check is a failed check, not a crashed suite
        value, tol, rel = math.inf, 0.0, "<"
        name = f"{name}!{type(exc).__name__}"
    return CheckRecord(name, value, tol, rel, runtime=time.perf_counter() - t0)


def run_suite(name: str, config: dict | None = None, parallel: bool = False) -> SuiteReport:
    """Run a named suite (``monopole``, ``rp2``, ``classical``, ``group`` or ``all``)."""
    if name not in SUITES and name != "all":
        raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    cfg = validate_config(config)
    names = SUITES if name == "all" else (name,)
    checks: list[Check] = []
    for s in names:
        checks.extend((f"{s}.{cname}" if name == "all" else cname, thunk) for cname, thunk in BUILDERS[s](cfg))
    if parallel:
        with ThreadPoolExecutor() as pool:
            records = list(pool.map(lambda c: _run_check(*c), checks))
    else:
        records = [_run_check(*c) for c in checks]
    return SuiteReport(name, records, cfg)


def export_report(r: SuiteReport, fmt: str, path, include_timings: bool = False) -> Path:
    path = Path(path)
    if fmt == "json":
        text = r.to_json(include_timings)
    elif fmt == "csv":
        text = r.to_csv()
    else:
        raise ValueError(f"unknown format {fmt!r}")
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
    return path


def load_report(path) -> SuiteReport:
    return SuiteReport.from_dict(json.loads(Path(path).read_text()))
