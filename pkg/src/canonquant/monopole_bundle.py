"""
Line bundles over the sphere labelled by an integer ``n``.

Units are hbar = c = 1 and the electric charge is absorbed into the magnetic
one, so that the coupling ``eg`` equals ``n/2`` on the bundle labelled ``n``.

Patch domains of the gauge potentials as written::

    A_N(q) = g / (r (r + q3)) * (-q2, q1, 0)     singular on the ray q3 = -r
    A_S(q) = g / (r (r - q3)) * ( q2, -q1, 0)    singular on the ray q3 = +r

so ``A_N`` is regular on the northern hemisphere and ``A_S`` on the southern
one.  This is the reverse of the chart naming used for the stereographic
coordinates (the North chart excludes the north pole); both are kept as
printed and the difference is only in which set each label refers to.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import DomainError, ResolutionError
from .su2 import EPS_POLE, SpherePoint, angles_to_cartesian, north_coordinate

EPS_RAY = 1e-6
FD_STEP = 1e-5


@dataclass(frozen=True)
class MonopoleBundle:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise ValueError(
                f"bundle label must be an integer, got {self.n!r}; "
                "use closure_defect to quantify a fractional coupling"
            )
        object.__setattr__(self, "n", int(self.n))

    @property
    def eg_over_c(self) -> float:
        return self.n / 2


@dataclass(frozen=True)
class GaugePotentialSample:
    q: np.ndarray
    A: np.ndarray
    patch: str


class WindingResult(NamedTuple):
    winding: int
    residual: float


def transition_gSN(p: SpherePoint, n: int) -> complex:
    """``g_SN = (z/|z|)^n``, equal to ``exp(i n phi)``."""
    x = p.vector
    if abs(abs(x[2]) - 1.0) < EPS_POLE or np.hypot(x[0], x[1]) < EPS_POLE:
        raise DomainError(f"{p.x} is a pole; the transition function lives on the overlap")
    z = complex(north_coordinate(x))
    return (z / abs(z)) ** int(n)


def transition_array(x, n: int) -> np.ndarray:
    z = north_coordinate(x)
    return (z / np.abs(z)) ** int(n)


def equator_winding(n: int, steps: int = 100) -> WindingResult:
    """Winding number of ``g_SN`` around the equator, with its rounding residual."""
    if steps < 4 * abs(n) + 4:
        raise ResolutionError(f"{steps} steps cannot resolve winding {n}; need {4 * abs(n) + 4}")
    phi = 2 * np.pi * np.arange(steps + 1) / steps
    g = transition_array(angles_to_cartesian(np.pi / 2, phi), n)
    total = np.sum(np.angle(g[1:] / g[:-1])) / (2 * np.pi)
    w = int(np.rint(total))
    residual = float(abs(total - w))
    if residual > 0.25:
        raise ResolutionError(f"winding residual {residual:.3f} too large; refine the loop")
    return WindingResult(w, residual)


def _potential_array(q, g_charge: float, patch: str) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    r = np.linalg.norm(q, axis=-1)
    q1, q2, q3 = q[..., 0], q[..., 1], q[..., 2]
    if patch == "N":
        coef = g_charge / (r * (r + q3))
        return np.stack([-q2 * coef, q1 * coef, np.zeros_like(coef)], axis=-1)
    if patch == "S":
        coef = g_charge / (r * (r - q3))
        return np.stack([q2 * coef, -q1 * coef, np.zeros_like(coef)], axis=-1)
    raise ValueError(f"patch must be 'N' or 'S', got {patch!r}")


def _check_ray(q, patch: str, eps_ray: float = EPS_RAY):
    q = np.asarray(q, dtype=float)
    r = np.linalg.norm(q)
    if r == 0.0:
        raise DomainError("the monopole site q = 0 is excluded")
    # angle to the singular ray
    cos_to_ray = -q[2] / r if patch == "N" else q[2] / r
    if np.arccos(np.clip(cos_to_ray, -1.0, 1.0)) < eps_ray:
        raise DomainError(f"q = {q} is within {eps_ray} rad of the {patch}-patch singular ray")


def gauge_potential_eval(q, g_charge: float, patch: str) -> GaugePotentialSample:
    _check_ray(q, patch)
    q = np.asarray(q, dtype=float)
    return GaugePotentialSample(q.copy(), _potential_array(q, g_charge, patch), patch)


def curl_numerical(q, g_charge: float, patch: str, step: float = FD_STEP) -> np.ndarray:
    """Central-difference curl of the patch potential at ``q``."""
    _check_ray(q, patch)
    q = np.asarray(q, dtype=float)
    J = np.empty((3, 3))  # J[i, j] = dA_i / dq_j
    for j in range(3):
        e = np.zeros(3)
        e[j] = step
        J[:, j] = (_potential_array(q + e, g_charge, patch) - _potential_array(q - e, g_charge, patch)) / (
            2 * step
        )
    return np.array([J[2, 1] - J[1, 2], J[0, 2] - J[2, 0], J[1, 0] - J[0, 1]])


def monopole_field(q, g_charge: float) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    r = np.linalg.norm(q)
    return g_charge * q / r**3


def chern_flux_integral(n: int, grid_theta: int = 100, grid_phi: int = 200) -> float:
    """Curvature of the monopole connection (``eg = n/2``) integrated over the sphere, over 2 pi.

    Gauss-Legendre nodes in theta, uniform nodes in phi.  The curvature
    ``dA_phi/dtheta - dA_theta/dphi`` is taken by central differences of the
    pulled-back potential, using the patch regular on each hemisphere.
    """
    if grid_theta < 16 or grid_phi < 16:
        raise ValueError("chern_flux_integral needs at least a 16 x 16 grid")
    nodes, weights = leggauss(grid_theta)
    theta = 0.5 * np.pi * (nodes + 1.0)
    w_theta = 0.5 * np.pi * weights
    phi = 2 * np.pi * (np.arange(grid_phi) + 0.5) / grid_phi
    T, P = np.meshgrid(theta, phi, indexing="ij")
    coupling = n / 2

    def one_form(t, p, patch):
        x = angles_to_cartesian(t, p)
        A = _potential_array(x, coupling, patch)
        dx_dt = angles_to_cartesian(t + np.pi / 2, p)  # (cos t cos p, cos t sin p, -sin t)
        dx_dp = np.stack([-np.sin(t) * np.sin(p), np.sin(t) * np.cos(p), np.zeros_like(t)], axis=-1)
        return np.sum(A * dx_dt, axis=-1), np.sum(A * dx_dp, axis=-1)

    F = np.empty_like(T)
    h = FD_STEP
    for patch, mask in (("N", T < np.pi / 2), ("S", T >= np.pi / 2)):
        t, p = T[mask], P[mask]
        _, a_phi_plus = one_form(t + h, p, patch)
        _, a_phi_minus = one_form(t - h, p, patch)
        a_theta_plus, _ = one_form(t, p + h, patch)
        a_theta_minus, _ = one_form(t, p - h, patch)
        F[mask] = (a_phi_plus - a_phi_minus) / (2 * h) - (a_theta_plus - a_theta_minus) / (2 * h)
    # fixed reduction order: theta rows, then phi
    flux = np.sum(F.sum(axis=1) * w_theta) * (2 * np.pi / grid_phi)
    return float(flux / (2 * np.pi))


def closure_defect(nu: float) -> float:
    """``|exp(2 pi i nu) - 1|``: failure of ``exp(i nu phi)`` to close around the equator."""
    frac = float(nu) - np.rint(float(nu))
    return float(abs(np.exp(2j * np.pi * frac) - 1.0))
