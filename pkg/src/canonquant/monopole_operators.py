"""
Angular momentum on sections of the monopole bundles.

Two realizations are built and cross-checked:

* a spectral one, where ``J_x, J_y, J_z`` are ladder matrices on the span of
  monopole harmonics ``j = |n|/2, |n|/2 + 1, ..., j_max``;
* a local one, acting on chart samples by ``J = L - (n/2) K``, where ``L`` is
  the orbital operator and ``K`` the chart-dependent multiplication vector::

      North chart (north pole removed):  K = (x1, x2, x3 - 1) / (1 - x3)
      South chart (south pole removed):  K = (x1, x2, x3 + 1) / (1 + x3)

Quantum convention: ``J_k = i d/dt U(g_k(t))`` at ``t = 0`` where ``g_k(t)``
rotates the sphere by ``+t`` about axis ``k``; this gives
``[J_i, J_j] = +i eps_ijk J_k``.  The classical bracket used in
:mod:`canonquant.classical` carries the opposite sign.

Monopole harmonics in the North-chart gauge are::

    Y^N_{n j m}(theta, phi) = sqrt((2j+1)/(4 pi)) exp(i (m - n/2) phi) d^j_{m, -n/2}(theta)

with ``d^j`` the Wigner small-d function ``<j m'| exp(-i beta J_y) |j m>``.  The
South-chart value is ``exp(i n phi)`` times the North-chart value.  The phase
is fixed by requiring ``d^j`` to be real at ``phi = 0``; for ``n = 0`` these are
the Condon-Shortley spherical harmonics.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import comb, eval_jacobi

from .errors import DomainError
from .su2 import (
    EPS_POLE,
    LEVI_CIVITA,
    Chart,
    SpherePoint,
    SU2Element,
    Su2AlgebraElement,
    angles_to_cartesian,
    cp1_action_array,
    north_coordinate,
    rotation_element,
)

HERMITIAN_TOL = 1e-12
DEFAULT_J_MAX = 6
THETA_CUT_CELLS = 5

_AXES = {"x": 0, "y": 1, "z": 2, 0: 0, 1: 1, 2: 2}


def _axis(axis) -> int:
    try:
        return _AXES[axis]
    except KeyError:
        raise ValueError(f"axis must be one of x, y, z (or 0, 1, 2), got {axis!r}") from None


def _is_half_integer(v: float) -> bool:
    return abs(2 * v - round(2 * v)) < 1e-12


# ---------------------------------------------------------------------------
# Wigner small-d


def wigner_small_d(j: float, mp: float, m: float, beta) -> np.ndarray:
    """``d^j_{mp, m}(beta) = <j mp| exp(-i beta J_y) |j m>``.

    Jacobi-polynomial form; ``scipy.special.eval_jacobi`` evaluates the
    polynomial by its three-term recurrence.
    """
    beta = np.asarray(beta, dtype=float)
    if not (_is_half_integer(j) and _is_half_integer(mp) and _is_half_integer(m)):
        raise ValueError("j, m', m must be integers or half-integers")
    if abs(mp) > j + 1e-12 or abs(m) > j + 1e-12:
        return np.zeros_like(beta)
    jj, mmp, mm = round(2 * j), round(2 * mp), round(2 * m)
    if (jj - mm) % 2 or (jj - mmp) % 2:
        raise ValueError("j - m and j - m' must be integers")
    jp_m, jm_m = (jj + mm) // 2, (jj - mm) // 2
    jp_mp, jm_mp = (jj + mmp) // 2, (jj - mmp) // 2
    k = min(jp_m, jm_m, jp_mp, jm_mp)
    dm = (mmp - mm) // 2
    if k == jp_m:
        a, lam = dm, dm
    elif k == jm_m:
        a, lam = -dm, 0
    elif k == jp_mp:
        a, lam = -dm, 0
    else:
        a, lam = dm, dm
    b = jj - 2 * k - a
    coef = (-1) ** lam * np.sqrt(comb(jj - k, k + a, exact=True) / comb(k + b, b, exact=True))
    half = beta / 2
    return coef * np.sin(half) ** a * np.cos(half) ** b * eval_jacobi(k, a, b, np.cos(beta))


# ---------------------------------------------------------------------------
# spectral realization


@dataclass(frozen=True)
class SpectralBasis:
    """Monopole-harmonic labels ``(j, m)`` with ``|n|/2 <= j <= j_max``."""

    n: int
    j_max: float = DEFAULT_J_MAX

    def __post_init__(self):
        if int(self.n) != self.n:
            raise ValueError("bundle label n must be an integer")
        object.__setattr__(self, "n", int(self.n))
        if self.j_max < abs(self.n) / 2:
            raise ValueError(f"j_max = {self.j_max} is below the lowest allowed j = {abs(self.n) / 2}")

    @property
    def q(self) -> float:
        return self.n / 2

    @property
    def j_list(self) -> list[float]:
        j0 = abs(self.n) / 2
        return [j0 + k for k in range(int(np.floor(self.j_max - j0 + 1e-12)) + 1)]

    @property
    def labels(self) -> list[tuple[float, float]]:
        return [(j, -j + k) for j in self.j_list for k in range(round(2 * j) + 1)]

    @property
    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return sum(round(2 * j) + 1 for j in self.j_list)


@dataclass(frozen=True)
class OperatorMatrix:
    entries: np.ndarray
    hermitian: bool = False

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("OperatorMatrix needs a square matrix")
        if self.hermitian and np.max(np.abs(m - m.conj().T), initial=0.0) >= HERMITIAN_TOL:
            raise ValueError("matrix flagged hermitian is not hermitian within 1e-12")
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other):
        o = other.entries if isinstance(other, OperatorMatrix) else other
        return self.entries @ o


class Generators(NamedTuple):
    Jx: OperatorMatrix
    Jy: OperatorMatrix
    Jz: OperatorMatrix
    J2: OperatorMatrix


def ladder_blocks(j_list) -> tuple[np.ndarray, np.ndarray]:
    """``(J_+, J_z)`` on ``(j, m)`` ordered by j then ascending m."""
    dim = sum(round(2 * j) + 1 for j in j_list)
    jp = np.zeros((dim, dim))
    jz = np.zeros(dim)
    start = 0
    for j in j_list:
        ms = -j + np.arange(round(2 * j) + 1)
        jz[start : start + len(ms)] = ms
        for i, m in enumerate(ms[:-1]):
            jp[start + i + 1, start + i] = np.sqrt(j * (j + 1) - m * (m + 1))
        start += len(ms)
    return jp, jz


def build_spectral_generators(basis: SpectralBasis) -> Generators:
    jp, jz = ladder_blocks(basis.j_list)
    jm = jp.T
    Jx = (jp + jm) / 2
    Jy = (jp - jm) / 2j
    Jz = np.diag(jz).astype(complex)
    J2 = Jx @ Jx + Jy @ Jy + Jz @ Jz
    # clean the O(eps) antihermitian residue from the products
    J2 = (J2 + J2.conj().T) / 2
    return Generators(
        OperatorMatrix(Jx, True),
        OperatorMatrix(Jy, True),
        OperatorMatrix(Jz, True),
        OperatorMatrix(J2, True),
    )


def _commutator_defect_matrices(J) -> float:
    worst = 0.0
    for i in range(3):
        for j in range(3):
            c = J[i] @ J[j] - J[j] @ J[i]
            target = 1j * np.einsum("k,kab->ab", LEVI_CIVITA[i, j], np.asarray(J))
            worst = max(worst, float(np.max(np.abs(c - target))))
    return worst


def j2_spectrum(n: int, j_max: float = DEFAULT_J_MAX, tol: float = 1e-8) -> list[tuple[float, int]]:
    """Eigenvalues of ``J^2`` with multiplicities, by hermitian diagonalization."""
    J2 = build_spectral_generators(SpectralBasis(n, j_max)).J2.entries
    evals = np.linalg.eigvalsh(J2)
    out: list[list] = []
    for v in evals:
        if out and abs(v - out[-1][0]) < tol:
            out[-1][1] += 1
        else:
            out.append([float(v), 1])
    return [(v, k) for v, k in out]


# ---------------------------------------------------------------------------
# monopole harmonics


def monopole_harmonic(n: int, j: float, m: float, theta, phi, chart=Chart.NORTH) -> np.ndarray:
    """Chart-gauge values of the ``(n, j, m)`` monopole harmonic on arrays of angles."""
    q = n / 2
    if j < abs(q) - 1e-12 or not _is_half_integer(j - q) or round(2 * (j - q)) % 2:
        raise ValueError(f"j = {j} is not allowed for n = {n}")
    if abs(m) > j + 1e-12 or round(2 * (j - m)) % 2:
        raise ValueError(f"m = {m} is not allowed for j = {j}")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    norm = np.sqrt((2 * j + 1) / (4 * np.pi))
    k = m - q if Chart(chart) is Chart.NORTH else m + q
    return norm * np.exp(1j * k * phi) * wigner_small_d(j, m, -q, theta)


def monopole_harmonic_eval(n: int, j: float, m: float, p: SpherePoint, chart=Chart.NORTH) -> complex:
    chart = Chart(chart)
    pole = np.array([0.0, 0.0, 1.0 if chart is Chart.NORTH else -1.0])
    if np.linalg.norm(p.vector - pole) <= EPS_POLE:
        raise DomainError(f"{p.x} is the pole excluded from chart {chart.value}")
    return complex(monopole_harmonic(n, j, m, p.theta, p.phi, chart))


def harmonic_dtheta(n: int, j: float, m: float, theta, phi, chart=Chart.NORTH) -> np.ndarray:
    """Exact theta-derivative, from ``d/dbeta d^j = -i J_y d^j``."""
    q = n / 2
    c_up = np.sqrt(max(j * (j + 1) - m * (m + 1), 0.0))
    c_dn = np.sqrt(max(j * (j + 1) - m * (m - 1), 0.0))
    # (-i J_y)_{m, m+1} = +c_up / 2, (-i J_y)_{m, m-1} = -c_dn / 2
    dd = 0.0
    if m + 1 <= j + 1e-12:
        dd = dd + 0.5 * c_up * wigner_small_d(j, m + 1, -q, theta)
    if m - 1 >= -j - 1e-12:
        dd = dd - 0.5 * c_dn * wigner_small_d(j, m - 1, -q, theta)
    norm = np.sqrt((2 * j + 1) / (4 * np.pi))
    k = m - q if Chart(chart) is Chart.NORTH else m + q
    return norm * np.exp(1j * k * np.asarray(phi, float)) * dd


# ---------------------------------------------------------------------------
# multiplier


def multiplier_omega(p: SpherePoint, g: SU2Element, n: int) -> complex:
    """Phase picked up by a North-chart section under ``U(g)`` at the point ``x``.

    ``(U(g) s)(x) = omega(x, g) s(g^-1 x)`` with
    ``omega(x, g) = ((b z(y) + conj(a)) / |b z(y) + conj(a)|)^n`` where
    ``g = (a, b)`` and ``y = g^-1 x`` is the point the fibre is carried from.
    With this choice ``omega(x, g1 g2) = omega(x, g1) omega(g1^-1 x, g2)``.
    """
    return complex(omega_array(p.vector, g, n))


def omega_array(x, g: SU2Element, n: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(np.linalg.norm(x - np.array([0.0, 0.0, 1.0]), axis=-1) <= EPS_POLE):
        raise DomainError("omega is defined on the North chart (north pole removed)")
    y = cp1_action_array(g.inverse(), x)
    with np.errstate(divide="ignore", invalid="ignore"):
        w = g.z1 * north_coordinate(y) + np.conj(g.z0)
        # y at the north pole: z(y) = inf, the limit phase is that of b
        w = np.where(np.isfinite(w), w, g.z1)
    if np.any(np.abs(w) < 1e-12):
        raise DomainError("g moves this point across the excluded pole; omega is undefined")
    return (w / np.abs(w)) ** int(n)


def _tangent_at_identity(axis_or_A):
    """``(a'(0), b'(0))`` for the one-parameter subgroup of an axis or algebra element."""
    if isinstance(axis_or_A, Su2AlgebraElement):
        a = axis_or_A.vector
    else:
        # rotation by +t about the axis: exp(t * s_k e_k) with s = (-1, 1, 1)
        a = np.zeros(3)
        k = _axis(axis_or_A)
        a[k] = -1.0 if k == 0 else 1.0
    return 0.5j * a[2], 0.5 * (a[1] - 1j * a[0])


def omega_tilde(axis, x, n: float, method: str = "exact", step: float = 1e-5) -> np.ndarray:
    """``i d/dt omega(x, g(t))`` at ``t = 0`` for the rotation about ``axis``.

    ``method="exact"`` uses the closed-form derivative; ``"fd"`` differentiates
    :func:`omega_array` by central differences (integer ``n`` only).
    """
    x = np.asarray(x, dtype=float)
    if method == "exact":
        da, db = _tangent_at_identity(axis)
        z = north_coordinate(x)
        # omega = (w/|w|)^n, w(0) = 1, so i d/dt omega = -n Im w'(0)
        return -n * np.imag(db * z + np.conj(da))
    if method == "fd":
        k = _axis(axis)
        plus = omega_array(x, rotation_element(k, step), int(n))
        minus = omega_array(x, rotation_element(k, -step), int(n))
        return np.real(1j * (plus - minus) / (2 * step))
    raise ValueError(method)


# ---------------------------------------------------------------------------
# grid realization


@dataclass
class GridSection:
    """Chart samples on an interior (theta, phi) grid; polar caps excluded."""

    chart: Chart
    theta: np.ndarray
    phi: np.ndarray
    values: np.ndarray
    h_theta: float
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.chart = Chart(self.chart)
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (len(self.theta), len(self.phi)):
            raise ValueError("values must have shape (len(theta), len(phi))")
        cut = THETA_CUT_CELLS * self.h_theta
        if self.theta.min() < cut - 1e-12 or self.theta.max() > np.pi - cut + 1e-12:
            raise ValueError("grid rows inside the excluded polar caps")

    @property
    def points(self) -> np.ndarray:
        T, P = np.meshgrid(self.theta, self.phi, indexing="ij")
        return angles_to_cartesian(T, P)

    def like(self, values, **meta) -> "GridSection":
        return GridSection(self.chart, self.theta, self.phi, values, self.h_theta, {**self.metadata, **meta})


@dataclass(frozen=True)
class Grid:
    n_theta: int
    n_phi: int

    @property
    def h_theta(self) -> float:
        return np.pi / self.n_theta

    @property
    def theta(self) -> np.ndarray:
        full = (np.arange(self.n_theta) + 0.5) * self.h_theta
        cut = THETA_CUT_CELLS * self.h_theta
        return full[(full >= cut) & (full <= np.pi - cut)]

    @property
    def phi(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_phi) / self.n_phi

    def mesh(self):
        return np.meshgrid(self.theta, self.phi, indexing="ij")

    def section(self, values, chart=Chart.NORTH) -> GridSection:
        return GridSection(Chart(chart), self.theta, self.phi, values, self.h_theta)

    def sample(self, func, chart=Chart.NORTH) -> GridSection:
        T, P = self.mesh()
        return self.section(func(T, P), chart)


def sample_harmonic(n: int, j: float, m: float, grid: Grid, chart=Chart.NORTH) -> GridSection:
    T, P = grid.mesh()
    return grid.section(monopole_harmonic(n, j, m, T, P, chart), chart)


def _fd4_theta(f: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order first derivative along axis 0 (one-sided stencils at the ends)."""
    d = np.empty_like(f)
    d[2:-2] = (f[:-4] - 8 * f[1:-3] + 8 * f[3:-1] - f[4:]) / (12 * h)
    d[0] = (-25 * f[0] + 48 * f[1] - 36 * f[2] + 16 * f[3] - 3 * f[4]) / (12 * h)
    d[1] = (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]) / (12 * h)
    d[-1] = -(-25 * f[-1] + 48 * f[-2] - 36 * f[-3] + 16 * f[-4] - 3 * f[-5]) / (12 * h)
    d[-2] = -(-3 * f[-1] - 10 * f[-2] + 18 * f[-3] - 6 * f[-4] + f[-5]) / (12 * h)
    return d


def _fourier_phi(f: np.ndarray) -> np.ndarray:
    n = f.shape[1]
    k = np.fft.fftfreq(n, d=1.0 / n)
    if n % 2 == 0:
        k[n // 2] = 0.0
    return np.fft.ifft(1j * k * np.fft.fft(f, axis=1), axis=1)


def orbital_apply(axis, values: np.ndarray, theta: np.ndarray, phi: np.ndarray, h: float):
    """``L_axis`` on samples: Fourier in phi, fourth-order differences in theta."""
    k = _axis(axis)
    f_phi = _fourier_phi(values)
    if k == 2:
        return -1j * f_phi, 0.0
    f_theta = _fd4_theta(values, h)
    T, P = np.meshgrid(theta, phi, indexing="ij")
    cot = np.cos(T) / np.sin(T)
    if k == 0:
        out = 1j * (np.sin(P) * f_theta + cot * np.cos(P) * f_phi)
    else:
        out = 1j * (-np.cos(P) * f_theta + cot * np.sin(P) * f_phi)
    # Richardson-style error estimate of the theta derivative from the 2h stencil
    if len(theta) >= 10:
        coarse = _fd4_theta(values[::2], 2 * h)
        err = np.max(np.abs(coarse - f_theta[::2])) / 15.0
    else:
        err = np.inf
    return out, err


def k_vector(x, chart) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    rho2 = x[..., 0] ** 2 + x[..., 1] ** 2
    if Chart(chart) is Chart.NORTH:
        den = np.where(x[..., 2] > 0, rho2 / (1 + x[..., 2]), 1 - x[..., 2])
        return np.stack([x[..., 0], x[..., 1], x[..., 2] - 1.0], axis=-1) / den[..., None]
    den = np.where(x[..., 2] < 0, rho2 / (1 - x[..., 2]), 1 + x[..., 2])
    return np.stack([x[..., 0], x[..., 1], x[..., 2] + 1.0], axis=-1) / den[..., None]


def local_generator_apply(axis, s: GridSection, n: float, rtol: float = 1e-4) -> GridSection:
    """``(L - (n/2) K)_axis`` applied to chart samples.

    ``n`` may be fractional here; that is only meaningful for the gauge
    consistency diagnostic.
    """
    k = _axis(axis)
    Lf, err = orbital_apply(k, s.values, s.theta, s.phi, s.h_theta)
    K = k_vector(s.points, s.chart)[..., k]
    out = Lf - (n / 2) * K * s.values
    scale = max(float(np.max(np.abs(s.values))), 1e-300)
    meta = {"theta_derivative_error": float(err), "resolution_warning": bool(err / scale > rtol)}
    if meta["resolution_warning"]:
        warnings.warn(f"grid may be too coarse: theta-derivative error estimate {err:.2e}", stacklevel=2)
    return s.like(out, **meta)


def grid_generator_matrices(
    n: int, j_max: float = 4, grid: Grid = Grid(128, 256), chart=Chart.NORTH
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Matrices of the grid generators projected onto harmonics with ``j <= j_max``.

    Least-squares projection of ``J_axis Y_b`` onto the sampled basis.
    """
    basis = SpectralBasis(n, j_max)
    T, P = grid.mesh()
    cols = [monopole_harmonic(n, j, m, T, P, chart).ravel() for j, m in basis.labels]
    A = np.stack(cols, axis=1)
    w = np.sqrt(np.sin(T)).ravel()[:, None]
    mats = []
    for k in range(3):
        rhs = []
        for j, m in basis.labels:
            s = grid.section(monopole_harmonic(n, j, m, T, P, chart), chart)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rhs.append(local_generator_apply(k, s, n).values.ravel())
        B = np.stack(rhs, axis=1)
        coef, *_ = np.linalg.lstsq(w * A, w * B, rcond=None)
        mats.append(coef)
    return tuple(mats)


def commutator_defect(
    n: int,
    j_max: float = DEFAULT_J_MAX,
    realization: str = "spectral",
    grid: Grid = Grid(128, 256),
) -> float:
    """``max_ij ||[J_i, J_j] - i eps_ijk J_k||_max`` in the chosen realization."""
    if realization == "spectral":
        g = build_spectral_generators(SpectralBasis(n, j_max))
        J = [g.Jx.entries, g.Jy.entries, g.Jz.entries]
    elif realization == "grid":
        J = list(grid_generator_matrices(n, j_max, grid))
    else:
        raise ValueError(realization)
    return _commutator_defect_matrices(J)


def spectral_action(n: int, j: float, m: float, axis, T, P, chart=Chart.NORTH) -> np.ndarray:
    """``J_axis Y_{jm}`` assembled from the ladder matrix elements."""
    k = _axis(axis)
    Y = lambda mm: monopole_harmonic(n, j, mm, T, P, chart)  # noqa: E731
    if k == 2:
        return m * Y(m)
    up = np.sqrt(max(j * (j + 1) - m * (m + 1), 0.0))
    dn = np.sqrt(max(j * (j + 1) - m * (m - 1), 0.0))
    Yu = Y(m + 1) if m + 1 <= j + 1e-12 else 0.0
    Yd = Y(m - 1) if m - 1 >= -j - 1e-12 else 0.0
    if k == 0:
        return 0.5 * (up * Yu + dn * Yd)
    return (up * Yu - dn * Yd) / 2j


def local_form_error(n: int, j_max: float = 4, grid: Grid = Grid(128, 256), axes="xyz", chart=Chart.NORTH) -> float:
    """Worst relative error of the grid generators against the spectral action.

    Error per harmonic is ``max|J_grid Y - J_spec Y| / max|Y|``.
    """
    T, P = grid.mesh()
    worst = 0.0
    for j, m in SpectralBasis(n, j_max).labels:
        s = grid.section(monopole_harmonic(n, j, m, T, P, chart), chart)
        scale = np.max(np.abs(s.values))
        for ax in axes:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                got = local_generator_apply(ax, s, n).values
            want = spectral_action(n, j, m, ax, T, P, chart)
            worst = max(worst, float(np.max(np.abs(got - want)) / scale))
    return worst


def gauge_consistency_defect(nu: float, grid: Grid = Grid(64, 128), section=None) -> float:
    """Mismatch between the South-chart generators on ``exp(i nu phi) s`` and the
    gauge transform of the North-chart generators on ``s``.

    Zero up to discretization error for integer ``nu``; for fractional ``nu`` the
    would-be transition ``exp(i nu phi)`` jumps at ``phi = 0`` and the
    mismatch is O(1).  Returned relative to ``max|s|``.
    """
    T, P = grid.mesh()
    if section is None:
        values = np.exp(-4 * (T - np.pi / 2) ** 2) * (1 + 0.3 * np.cos(P) + 0.2j * np.sin(2 * P))
    else:
        values = section(T, P)
    trans = np.exp(1j * nu * P)
    sN = grid.section(values, Chart.NORTH)
    sS = grid.section(trans * values, Chart.SOUTH)
    worst = 0.0
    for k in range(3):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            lhs = local_generator_apply(k, sS, nu).values
            rhs = trans * local_generator_apply(k, sN, nu).values
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst / float(np.max(np.abs(values)))


def finite_rotation_apply(n: int, g: SU2Element, func, x) -> np.ndarray:
    """``(U(g) s)(x) = omega(x, g) s(g^-1 x)`` for a North-chart section ``func(points)``."""
    x = np.asarray(x, dtype=float)
    y = cp1_action_array(g.inverse(), x)
    return omega_array(x, g, n) * func(y)


def l2_norm_quadrature(n: int, j: float, m: float, n_theta: int = 64, n_phi: int = 128) -> float:
    """Gauss-Legendre (in cos theta) times trapezoid (in phi) norm of a harmonic."""
    nodes, weights = leggauss(n_theta)
    theta = np.arccos(nodes)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    T, P = np.meshgrid(theta, phi, indexing="ij")
    Y = monopole_harmonic(n, j, m, T, P)
    integral = np.sum(weights[:, None] * np.abs(Y) ** 2) * (2 * np.pi / n_phi)
    return float(np.sqrt(integral))
