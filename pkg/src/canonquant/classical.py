"""
A charged particle in the field of a fixed magnetic monopole.

Units: c = 1; the only coupling is ``mu = e g``.  The equation of motion is
``m q'' = mu q' x q / |q|^3`` and the conserved Poincare vector is
``J = m q x q' - mu q / |q|``.

Bracket convention
------------------
The default ``convention="pq"`` is ``{f, h} = df/dp . dh/dq - df/dq . dh/dp``
(so ``{q_i, p_j} = -delta_ij``), under which the angular momentum components
satisfy ``{J_i, J_j} = -eps_ijk J_k``.  ``convention="qp"`` is
``{f, h} = df/dq . dh/dp - df/dp . dh/dq`` and flips the sign.  The quantum generators in
:mod:`canonquant.monopole_operators` obey ``[J_i, J_j] = +i eps_ijk J_k``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .su2 import LEVI_CIVITA

R_MIN = 1e-3


@dataclass(frozen=True)
class PhaseState:
    q: np.ndarray
    qdot: np.ndarray
    m: float = 1.0
    mu: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "q", np.asarray(self.q, dtype=float))
        object.__setattr__(self, "qdot", np.asarray(self.qdot, dtype=float))
        if self.m <= 0:
            raise ValueError("mass must be positive")
        if np.linalg.norm(self.q) < 1e-12:
            raise ValueError("q = 0 is the monopole site")


@dataclass
class TrajectoryRecord:
    times: np.ndarray
    q: np.ndarray
    qdot: np.ndarray
    m: float
    mu: float
    aborted: bool = False
    conserved: dict = field(default_factory=dict)

    def __post_init__(self):
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")

    def __len__(self):
        return len(self.times)

    def state(self, k: int) -> PhaseState:
        return PhaseState(self.q[k], self.qdot[k], self.m, self.mu)

    def poincare(self) -> np.ndarray:
        r = np.linalg.norm(self.q, axis=1, keepdims=True)
        return self.m * np.cross(self.q, self.qdot) - self.mu * self.q / r


def poincare_vector(s: PhaseState) -> np.ndarray:
    r = np.linalg.norm(s.q)
    if r < 1e-12:
        raise ZeroDivisionError("Poincare vector is singular at q = 0")
    return s.m * np.cross(s.q, s.qdot) - s.mu * s.q / r


def _accel(x, y, z, vx, vy, vz, k):
    r = math.sqrt(x * x + y * y + z * z)
    c = k / (r * r * r)
    # (v x q) * mu / (m r^3)
    return c * (vy * z - vz * y), c * (vz * x - vx * z), c * (vx * y - vy * x)


def integrate_motion(s0: PhaseState, dt: float, steps: int, r_min: float = R_MIN) -> TrajectoryRecord:
    """Fixed-step classical Runge-Kutta integration; stops early if ``|q| < r_min``."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    k = s0.mu / s0.m
    out = np.empty((steps + 1, 6))
    x, y, z = map(float, s0.q)
    vx, vy, vz = map(float, s0.qdot)
    out[0] = (x, y, z, vx, vy, vz)
    h, h2, h6 = dt, dt / 2, dt / 6
    last = steps
    aborted = False
    for i in range(1, steps + 1):
        a1 = _accel(x, y, z, vx, vy, vz, k)
        x2, y2, z2 = x + h2 * vx, y + h2 * vy, z + h2 * vz
        u2, v2, w2 = vx + h2 * a1[0], vy + h2 * a1[1], vz + h2 * a1[2]
        a2 = _accel(x2, y2, z2, u2, v2, w2, k)
        x3, y3, z3 = x + h2 * u2, y + h2 * v2, z + h2 * w2
        u3, v3, w3 = vx + h2 * a2[0], vy + h2 * a2[1], vz + h2 * a2[2]
        a3 = _accel(x3, y3, z3, u3, v3, w3, k)
        x4, y4, z4 = x + h * u3, y + h * v3, z + h * w3
        u4, v4, w4 = vx + h * a3[0], vy + h * a3[1], vz + h * a3[2]
        a4 = _accel(x4, y4, z4, u4, v4, w4, k)
        x += h6 * (vx + 2 * u2 + 2 * u3 + u4)
        y += h6 * (vy + 2 * v2 + 2 * v3 + v4)
        z += h6 * (vz + 2 * w2 + 2 * w3 + w4)
        vx += h6 * (a1[0] + 2 * a2[0] + 2 * a3[0] + a4[0])
        vy += h6 * (a1[1] + 2 * a2[1] + 2 * a3[1] + a4[1])
        vz += h6 * (a1[2] + 2 * a2[2] + 2 * a3[2] + a4[2])
        out[i] = (x, y, z, vx, vy, vz)
        if math.sqrt(x * x + y * y + z * z) < r_min:
            last, aborted = i, True
            break
    out = out[: last + 1]
    times = dt * np.arange(last + 1)
    return TrajectoryRecord(times, out[:, :3].copy(), out[:, 3:].copy(), s0.m, s0.mu, aborted)


def conservation_report(tr: TrajectoryRecord) -> dict:
    """Maximum drifts over the record, relative to the initial values.

    Component drifts are measured against ``|J(0)|`` (components can vanish);
    ``J_dot_rhat`` is the absolute deviation from ``-mu``.
    """
    if len(tr) == 0:
        raise ValueError("empty trajectory")
    J = tr.poincare()
    J0 = J[0]
    normJ0 = np.linalg.norm(J0)
    scale = normJ0 if normJ0 > 0 else 1.0
    speed = np.linalg.norm(tr.qdot, axis=1)
    rhat = tr.q / np.linalg.norm(tr.q, axis=1, keepdims=True)
    jdotr = np.sum(J * rhat, axis=1)
    cos_cone = jdotr / np.linalg.norm(J, axis=1) if normJ0 > 0 else np.zeros(len(tr))
    rep = {
        "J_component_drift": [float(np.max(np.abs(J[:, i] - J0[i])) / scale) for i in range(3)],
        "J_drift": float(np.max(np.linalg.norm(J - J0, axis=1)) / scale),
        "J_norm_drift": float(np.max(np.abs(np.linalg.norm(J, axis=1) - normJ0)) / scale),
        "speed_drift": float(np.max(np.abs(speed - speed[0])) / speed[0]) if speed[0] > 0 else 0.0,
        "J_dot_rhat_defect": float(np.max(np.abs(jdotr + tr.mu))),
        "cone_angle_drift": float(np.max(np.abs(cos_cone - cos_cone[0]))),
        "steps": len(tr) - 1,
        "aborted": tr.aborted,
    }
    tr.conserved = rep
    return rep


def convergence_order(s0: PhaseState, dts=(1e-2, 1e-3, 1e-4), t_final: float = 1.0) -> tuple[float, list[float]]:
    """Log-log slope of the final-time ``J`` drift against the step size."""
    drifts = []
    for dt in dts:
        steps = int(round(t_final / dt))
        tr = integrate_motion(s0, dt, steps)
        J = tr.poincare()
        drifts.append(float(np.linalg.norm(J[-1] - J[0]) / np.linalg.norm(J[0])))
    slope = np.polyfit(np.log(dts), np.log(drifts), 1)[0]
    return float(slope), drifts


# ---------------------------------------------------------------------------
# brackets in canonical variables


def _unit_potential(q, gauge: str):
    """Potential per unit magnetic charge and its Jacobian ``da_l/dq_j``."""
    q1, q2, q3 = q
    r = math.sqrt(q1 * q1 + q2 * q2 + q3 * q3)
    sgn = 1.0 if gauge == "N" else -1.0
    # N: (-q2, q1, 0) / (r (r + q3));  S: (q2, -q1, 0) / (r (r - q3))
    v = sgn * np.array([-q2, q1, 0.0])
    dv = sgn * np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    s = r * (r + sgn * q3)
    ds = np.array([q1, q2, q3]) * (r + sgn * q3) / r + r * (np.array([q1, q2, q3]) / r + sgn * np.array([0, 0, 1.0]))
    a = v / s
    da = dv / s - np.outer(v, ds) / s**2
    return a, da


def canonical_momentum(s: PhaseState, gauge: str = "N") -> np.ndarray:
    a, _ = _unit_potential(s.q, gauge)
    return s.m * s.qdot + s.mu * a


def j_canonical(q, p, mu: float, gauge: str = "N"):
    """``J = q x (p - mu a(q)) - mu q/|q|`` with closed-form gradients.

    Returns ``(J, dJ/dq, dJ/dp)`` with ``dJ[i, j] = dJ_i / dx_j``.
    """
    q = np.asarray(q, float)
    p = np.asarray(p, float)
    a, da = _unit_potential(q, gauge)
    r = np.linalg.norm(q)
    pi = p - mu * a
    J = np.cross(q, pi) - mu * q / r
    eps = LEVI_CIVITA
    dJdp = np.einsum("ikj,k->ij", eps, q)
    dJdq = np.einsum("ijl,l->ij", eps, pi) - mu * np.einsum("ikl,k,lj->ij", eps, q, da)
    dJdq -= mu * (np.eye(3) / r - np.outer(q, q) / r**3)
    return J, dJdq, dJdp


def _on_singular_ray(q, gauge: str, eps: float = 1e-6) -> bool:
    r = np.linalg.norm(q)
    c = -q[2] / r if gauge == "N" else q[2] / r
    return np.arccos(np.clip(c, -1, 1)) < eps


def j_brackets(s: PhaseState, gauge: str = "N", convention: str = "pq") -> np.ndarray:
    """Matrix ``B[i, j] = {J_i, J_j}`` at a state."""
    p = canonical_momentum(s, gauge)
    _, dq, dp = j_canonical(s.q, p, s.mu, gauge)
    B = dq @ dp.T - dp @ dq.T
    if convention == "pq":
        return -B
    if convention == "qp":
        return B
    raise ValueError(convention)


def classical_bracket_check(
    samples, gauge: str = "N", convention: str = "pq", sign: int | None = None
) -> float:
    """``max |{J_i, J_j} - sign * eps_ijk J_k|`` over samples and index pairs.

    ``sign`` defaults to -1 for the ``"pq"`` convention and +1 for
    ``"qp"``; states on the gauge's singular ray are skipped with a warning.
    """
    if sign is None:
        sign = -1 if convention == "pq" else 1
    worst = 0.0
    skipped = 0
    for s in samples:
        if _on_singular_ray(s.q, gauge):
            skipped += 1
            continue
        B = j_brackets(s, gauge, convention)
        J = poincare_vector(s)
        target = sign * np.einsum("ijk,k->ij", LEVI_CIVITA, J)
        worst = max(worst, float(np.max(np.abs(B - target))))
    if skipped:
        warnings.warn(f"skipped {skipped} sample(s) on the {gauge}-gauge singular ray", stacklevel=2)
    return worst


def random_states(rng: np.random.Generator, size: int, mu: float = 0.5, m: float = 1.0) -> list[PhaseState]:
    out = []
    while len(out) < size:
        q = rng.normal(size=3)
        if np.linalg.norm(q) < 0.2:
            continue
        out.append(PhaseState(q, rng.normal(size=3), m, mu))
    return out
