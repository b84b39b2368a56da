"""
SU(2) arithmetic, the Hopf projection and stereographic charts.

Group elements are unit pairs ``(z0, z1)`` standing for the matrix

    [[z0, conj(z1)],
     [-z1, conj(z0)]]

so that the right action of the diagonal U(1) subgroup reads
``(z0, z1) -> (lam*z0, lam*z1)`` and the projection to the sphere is
``(z0, z1) -> [z0 : z1]``.

Chart conventions
-----------------
The North chart is the sphere with the north pole removed, with coordinate
``z = z0/z1 = exp(i phi) sin(theta) / (1 - cos(theta))``.  The South chart is
the sphere with the south pole removed, with coordinate
``zeta = z1/z0 = exp(-i phi) sin(theta) / (1 + cos(theta))``.  Polar angles
are the usual ones: ``x = (sin t cos p, sin t sin p, cos t)``.

With these conventions ``(1, 0)`` projects to the north pole,
``(1, 1)/sqrt(2)`` to ``(1, 0, 0)``, and ``(exp(it/2), 0)`` rotates the sphere
by ``+t`` about the third axis.  The identification of ``[z0 : z1]`` with a
point of the sphere reverses orientation relative to the Pauli-matrix
adjoint map, which is why the first Lie algebra basis element generates a
rotation by ``-t`` about the first axis (see :func:`rotation_matrix_of`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EPS_POLE = 1e-8
_NORM_TOL = 1e-12

SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

#: Lie algebra basis ``i sigma_k / 2``; ``exp(t * BASIS[2])`` is ``(e^{it/2}, 0)``.
BASIS = 0.5j * SIGMA

LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_i, _j, _k] = 1.0
    LEVI_CIVITA[_j, _i, _k] = -1.0


class Chart(str, enum.Enum):
    NORTH = "N"
    SOUTH = "S"


@dataclass(frozen=True)
class SU2Element:
    """Unit pair ``(z0, z1)``; renormalized on construction."""

    z0: complex
    z1: complex

    def __post_init__(self):
        z0, z1 = complex(self.z0), complex(self.z1)
        norm = np.hypot(abs(z0), abs(z1))
        if norm == 0.0:
            raise ValueError("SU2Element needs a nonzero pair")
        if abs(norm - 1.0) > _NORM_TOL:
            z0, z1 = z0 / norm, z1 / norm
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "z1", z1)

    @classmethod
    def identity(cls) -> "SU2Element":
        return cls(1.0, 0.0)

    @classmethod
    def from_matrix(cls, m) -> "SU2Element":
        m = np.asarray(m, dtype=complex)
        return cls(m[0, 0], -m[1, 0])

    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.z0, np.conj(self.z1)], [-self.z1, np.conj(self.z0)]],
            dtype=complex,
        )

    def inverse(self) -> "SU2Element":
        return SU2Element(np.conj(self.z0), -self.z1)

    def __mul__(self, other: "SU2Element") -> "SU2Element":
        return su2_multiply(self, other)

    def as_array(self) -> np.ndarray:
        return np.array([self.z0, self.z1], dtype=complex)


@dataclass(frozen=True)
class Su2AlgebraElement:
    """Coefficients ``a`` in the basis ``i sigma_k / 2``."""

    a: tuple

    def __post_init__(self):
        a = tuple(float(v) for v in np.asarray(self.a, dtype=float).ravel())
        if len(a) != 3:
            raise ValueError("su(2) element needs three coefficients")
        object.__setattr__(self, "a", a)

    @classmethod
    def basis(cls, k: int) -> "Su2AlgebraElement":
        a = [0.0, 0.0, 0.0]
        a[k] = 1.0
        return cls(a)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.a)

    def matrix(self) -> np.ndarray:
        return np.einsum("k,kij->ij", self.vector, BASIS)

    @classmethod
    def from_matrix(cls, m) -> "Su2AlgebraElement":
        # tr((i s_j/2)(i s_k/2)) = -delta_jk / 2
        m = np.asarray(m, dtype=complex)
        coeffs = -2.0 * np.einsum("kij,ji->k", BASIS, m)
        return cls(coeffs.real)

    def bracket(self, other: "Su2AlgebraElement") -> "Su2AlgebraElement":
        a, b = self.matrix(), other.matrix()
        return Su2AlgebraElement.from_matrix(a @ b - b @ a)

    def __add__(self, other):
        return Su2AlgebraElement(self.vector + other.vector)

    def __rmul__(self, s: float):
        return Su2AlgebraElement(s * self.vector)

    __mul__ = __rmul__


@dataclass(frozen=True)
class SpherePoint:
    """Unit vector in R^3; renormalized on construction."""

    x: tuple

    def __post_init__(self):
        v = np.asarray(self.x, dtype=float).ravel()
        if v.shape != (3,):
            raise ValueError("SpherePoint needs a 3-vector")
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        if abs(norm - 1.0) > _NORM_TOL:
            v = v / norm
        object.__setattr__(self, "x", tuple(float(c) for c in v))

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "SpherePoint":
        return cls(angles_to_cartesian(theta, phi))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.x)

    @property
    def theta(self) -> float:
        return float(np.arctan2(np.hypot(self.x[0], self.x[1]), self.x[2]))

    @property
    def phi(self) -> float:
        return float(np.mod(np.arctan2(self.x[1], self.x[0]), 2 * np.pi))

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(-self.vector)


@dataclass(frozen=True)
class ChartCoordinate:
    chart: Chart
    w: complex


# ---------------------------------------------------------------------------
# array-level helpers (broadcast over leading axes)


def angles_to_cartesian(theta, phi) -> np.ndarray:
    theta, phi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    st = np.sin(theta)
    return np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)


def _one_minus(x3, rho2):
    # 1 - x3 without cancellation near x3 = 1
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(x3 > 0, rho2 / (1.0 + x3), 1.0 - x3)


def _one_plus(x3, rho2):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(x3 < 0, rho2 / (1.0 - x3), 1.0 + x3)


def north_coordinate(x) -> np.ndarray:
    """``z(x) = (x1 + i x2)/(1 - x3)``; infinite at the north pole."""
    x = np.asarray(x, dtype=float)
    rho2 = x[..., 0] ** 2 + x[..., 1] ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        return (x[..., 0] + 1j * x[..., 1]) / _one_minus(x[..., 2], rho2)


def south_coordinate(x) -> np.ndarray:
    """``zeta(x) = (x1 - i x2)/(1 + x3)``; infinite at the south pole."""
    x = np.asarray(x, dtype=float)
    rho2 = x[..., 0] ** 2 + x[..., 1] ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        return (x[..., 0] - 1j * x[..., 1]) / _one_plus(x[..., 2], rho2)


def north_inverse(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    a2 = np.abs(z) ** 2
    return np.stack([2 * z.real, 2 * z.imag, a2 - 1.0], axis=-1) / (a2 + 1.0)[..., None]


def south_inverse(zeta) -> np.ndarray:
    zeta = np.asarray(zeta, dtype=complex)
    a2 = np.abs(zeta) ** 2
    return np.stack([2 * zeta.real, -2 * zeta.imag, 1.0 - a2], axis=-1) / (a2 + 1.0)[
        ..., None
    ]


def hopf_array(z0, z1) -> np.ndarray:
    z0 = np.asarray(z0, dtype=complex)
    z1 = np.asarray(z1, dtype=complex)
    w = z0 * np.conj(z1)
    x = np.stack([2 * w.real, 2 * w.imag, np.abs(z0) ** 2 - np.abs(z1) ** 2], axis=-1)
    return x / (np.abs(z0) ** 2 + np.abs(z1) ** 2)[..., None]


def hopf_lift_array(x):
    """A unit pair over each sphere point (not continuous across the equator)."""
    x = np.asarray(x, dtype=float)
    x3 = x[..., 2]
    upper = x3 >= 0
    c = np.sqrt(np.clip((1 + x3) / 2, 0, None))
    s = np.sqrt(np.clip((1 - x3) / 2, 0, None))
    with np.errstate(divide="ignore", invalid="ignore"):
        # upper: (cos(t/2), e^{-i p} sin(t/2)); lower: (e^{i p} cos(t/2), sin(t/2))
        z1_up = (x[..., 0] - 1j * x[..., 1]) / (2 * c)
        z0_lo = (x[..., 0] + 1j * x[..., 1]) / (2 * s)
    z0 = np.where(upper, c + 0j, z0_lo)
    z1 = np.where(upper, z1_up, s + 0j)
    return z0, z1


def act_array(g: SU2Element, z0, z1):
    a, b = g.z0, g.z1
    return a * z0 - np.conj(b) * z1, b * z0 + np.conj(a) * z1


def cp1_action_array(g: SU2Element, x) -> np.ndarray:
    z0, z1 = hopf_lift_array(x)
    return hopf_array(*act_array(g, z0, z1))


# ---------------------------------------------------------------------------
# public operations


def su2_multiply(g1: SU2Element, g2: SU2Element) -> SU2Element:
    """Matrix product ``g1 g2`` in the pair convention."""
    a, b = g1.z0, g1.z1
    return SU2Element(a * g2.z0 - np.conj(b) * g2.z1, b * g2.z0 + np.conj(a) * g2.z1)


def su2_exp(A: Su2AlgebraElement, t: float = 1.0) -> SU2Element:
    """``exp(t A)`` via the closed form for traceless anti-hermitian 2x2 matrices."""
    a = t * A.vector
    norm = np.linalg.norm(a)
    if norm == 0.0:
        return SU2Element.identity()
    n = a / norm
    c, s = np.cos(norm / 2), np.sin(norm / 2)
    return SU2Element(c + 1j * s * n[2], s * n[1] - 1j * s * n[0])


def rotation_element(axis: int, t: float) -> SU2Element:
    """SU(2) element acting on the sphere as the rotation by ``+t`` about ``axis``."""
    if axis == 0:
        return SU2Element(np.cos(t / 2), 1j * np.sin(t / 2))
    if axis == 1:
        return SU2Element(np.cos(t / 2), np.sin(t / 2))
    if axis == 2:
        return SU2Element(np.exp(0.5j * t), 0.0)
    raise ValueError(f"axis must be 0, 1 or 2, got {axis!r}")


def hopf_projection(g: SU2Element) -> SpherePoint:
    return SpherePoint(hopf_array(g.z0, g.z1))


def hopf_lift(p: SpherePoint) -> SU2Element:
    z0, z1 = hopf_lift_array(p.vector)
    return SU2Element(complex(z0), complex(z1))


def cp1_action(g: SU2Element, p: SpherePoint) -> SpherePoint:
    """``[z0 : z1] -> [a z0 - conj(b) z1 : b z0 + conj(a) z1]`` for ``g = (a, b)``."""
    return SpherePoint(cp1_action_array(g, p.vector))


def rotation_matrix_of(g: SU2Element) -> np.ndarray:
    """The 3x3 rotation by which ``g`` acts on the sphere (columns are images of e_k)."""
    return cp1_action_array(g, np.eye(3)).T


def rotation_generator_of(A: Su2AlgebraElement) -> np.ndarray:
    """Derivative of :func:`rotation_matrix_of` along ``exp(tA)``.

    In the ``i sigma/2`` basis this is ``u -> (-a1, a2, a3) x u``.
    """
    w = A.vector * np.array([-1.0, 1.0, 1.0])
    return -np.einsum("ijk,k->ij", LEVI_CIVITA, w)


def stereo_charts(p: SpherePoint, eps_pole: float = EPS_POLE) -> list[ChartCoordinate]:
    """Coordinates of ``p`` in every chart whose excluded pole is farther than ``eps_pole``."""
    x = p.vector
    out = []
    if np.linalg.norm(x - np.array([0.0, 0.0, 1.0])) > eps_pole:
        out.append(ChartCoordinate(Chart.NORTH, complex(north_coordinate(x))))
    if np.linalg.norm(x - np.array([0.0, 0.0, -1.0])) > eps_pole:
        out.append(ChartCoordinate(Chart.SOUTH, complex(south_coordinate(x))))
    return out


def chart_coordinate(p: SpherePoint, chart: Chart, eps_pole: float = EPS_POLE) -> complex:
    for c in stereo_charts(p, eps_pole):
        if c.chart == Chart(chart):
            return c.w
    raise DomainError(f"{p.x} lies within {eps_pole} of the pole excluded by chart {chart}")


def chart_inverse(c: ChartCoordinate) -> SpherePoint:
    if Chart(c.chart) is Chart.NORTH:
        return SpherePoint(north_inverse(c.w))
    return SpherePoint(south_inverse(c.w))


def random_su2(rng: np.random.Generator, size: int | None = None):
    """Haar-random elements (a list when ``size`` is given)."""
    n = 1 if size is None else size
    v = rng.normal(size=(n, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    out = [SU2Element(r[0] + 1j * r[1], r[2] + 1j * r[3]) for r in v]
    return out[0] if size is None else out


def random_sphere_points(rng: np.random.Generator, size: int) -> np.ndarray:
    v = rng.normal(size=(size, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)
