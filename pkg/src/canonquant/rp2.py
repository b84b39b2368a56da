"""
Two indistinguishable particles: the projective plane and the bundle L_-.

The relative direction lives on ``RP^2 = S^2 / {x ~ -x} = SU(2)/H`` with

    H = { diag(lam, conj(lam)) }  U  { [[0, conj(lam)], [-lam, 0]] },  |lam| = 1.

The sign character ``kappa`` of ``H`` (diagonal -> +1, antidiagonal -> -1)
defines the fermionic line bundle.  It is realized concretely as the
sub-bundle of ``RP^2 x C^3`` spanned by ``phi(x)`` for an odd, nowhere
vanishing map ``phi``; sections are ``a(x) phi(x)`` with ``a`` odd under
``x -> -x``, and rotations act on them through the ordinary orbital
operators on ``a``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError
from .monopole_operators import (
    Generators,
    OperatorMatrix,
    harmonic_dtheta,
    ladder_blocks,
    monopole_harmonic,
)
from .su2 import SpherePoint, SU2Element, hopf_projection, su2_multiply

EPS_CANON = 1e-9
_H_TOL = 1e-12


class Sector(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ProjectivePoint:
    """Antipodal class ``[x]`` stored through its canonical representative."""

    rep: SpherePoint

    @property
    def vector(self) -> np.ndarray:
        return self.rep.vector


def rp2_canonical_rep(x, eps: float = EPS_CANON) -> ProjectivePoint:
    """Representative whose first coordinate exceeding ``eps`` in magnitude is positive."""
    v = x.vector if isinstance(x, SpherePoint) else np.asarray(x, dtype=float)
    v = v / np.linalg.norm(v)
    for c in v:
        if abs(c) > eps:
            if c < 0:
                v = -v
            break
    # -0.0 and 0.0 must compare bit-identical
    v = v + 0.0
    return ProjectivePoint(SpherePoint(v))


class HKind(str, enum.Enum):
    DIAGONAL = "diagonal"
    ANTIDIAGONAL = "antidiagonal"


@dataclass(frozen=True)
class HElement:
    matrix2x2: np.ndarray
    kind: HKind

    @classmethod
    def diagonal(cls, lam: complex) -> "HElement":
        lam = complex(lam)
        return cls(np.array([[lam, 0], [0, np.conj(lam)]], dtype=complex), HKind.DIAGONAL)

    @classmethod
    def antidiagonal(cls, lam: complex) -> "HElement":
        lam = complex(lam)
        return cls(np.array([[0, np.conj(lam)], [-lam, 0]], dtype=complex), HKind.ANTIDIAGONAL)

    @classmethod
    def from_matrix(cls, m) -> "HElement":
        m = np.asarray(m, dtype=complex)
        return cls(m, _classify_matrix(m))

    def as_su2(self) -> SU2Element:
        return SU2Element.from_matrix(self.matrix2x2)


def _classify_matrix(m: np.ndarray) -> HKind:
    if m.shape != (2, 2):
        raise DomainError("H elements are 2x2 matrices")
    diag_ok = abs(m[0, 1]) < _H_TOL and abs(m[1, 0]) < _H_TOL
    anti_ok = abs(m[0, 0]) < _H_TOL and abs(m[1, 1]) < _H_TOL
    if diag_ok:
        lam = m[0, 0]
        if abs(abs(lam) - 1) < _H_TOL and abs(m[1, 1] - np.conj(lam)) < _H_TOL:
            return HKind.DIAGONAL
    elif anti_ok:
        lam = -m[1, 0]
        if abs(abs(lam) - 1) < _H_TOL and abs(m[0, 1] - np.conj(lam)) < _H_TOL:
            return HKind.ANTIDIAGONAL
    raise DomainError("matrix is not an element of H")


def kappa_classify(h) -> int:
    """Sign character of H: +1 on the diagonal torus, -1 on the antidiagonal coset."""
    m = h.matrix2x2 if isinstance(h, HElement) else np.asarray(h, dtype=complex)
    kind = _classify_matrix(m)
    if isinstance(h, HElement) and h.kind is not kind:
        raise DomainError(f"declared kind {h.kind.value} does not match the zero pattern")
    return 1 if kind is HKind.DIAGONAL else -1


def rp2_transition(alpha: int, beta: int, p: ProjectivePoint, eps: float = EPS_CANON) -> int:
    """``g_ab([x]) = sign(x_a x_b)`` on ``U_a  ^  U_b`` (charts labelled 1, 2, 3)."""
    if alpha not in (1, 2, 3) or beta not in (1, 2, 3):
        raise ValueError("chart indices are 1, 2, 3")
    x = p.vector
    xa, xb = x[alpha - 1], x[beta - 1]
    if abs(xa) <= eps or abs(xb) <= eps:
        raise DomainError(f"{tuple(x)} is not in the overlap of U_{alpha} and U_{beta}")
    return int(np.sign(xa * xb))


# ---------------------------------------------------------------------------
# the map phi and the bundle isomorphism


def _inclusion(x):
    return np.asarray(x, dtype=float).astype(complex)


@dataclass(frozen=True)
class PhiMap:
    """Odd, nowhere-vanishing map ``S^2 -> C^3`` spanning the fibres of L_-."""

    evaluator: Callable[[np.ndarray], np.ndarray] = _inclusion

    def __call__(self, x) -> np.ndarray:
        v = x.vector if isinstance(x, SpherePoint) else np.asarray(x, dtype=float)
        return np.asarray(self.evaluator(v), dtype=complex)

    def unit(self, x) -> np.ndarray:
        v = self(x)
        return v / np.linalg.norm(v, axis=-1, keepdims=True)

    def check_axioms(self, rng: np.random.Generator, samples: int = 200) -> dict:
        """Sampled measurements of smoothness, non-vanishing and oddness."""
        pts = rng.normal(size=(samples, 3))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        vals = np.array([self(x) for x in pts])
        odd = max(float(np.max(np.abs(self(-x) + self(x)))) for x in pts)
        # continuity: difference quotients along short great-circle steps stay bounded
        ratios = []
        for x in pts[:50]:
            t = rng.normal(size=3)
            t -= (t @ x) * x
            t /= np.linalg.norm(t)
            for h in (1e-3, 1e-5):
                y = np.cos(h) * x + np.sin(h) * t
                ratios.append(np.linalg.norm(self(y) - self(x)) / h)
        return {
            "min_norm": float(np.min(np.linalg.norm(vals, axis=1))),
            "odd_defect": odd,
            "max_difference_quotient": float(np.max(ratios)),
        }

    def satisfies_axioms(self, rng: np.random.Generator, samples: int = 200) -> bool:
        a = self.check_axioms(rng, samples)
        return a["min_norm"] > 0.1 and a["odd_defect"] < 1e-12 and np.isfinite(a["max_difference_quotient"]) and a[
            "max_difference_quotient"
        ] < 1e6


DEFAULT_PHI = PhiMap()


def right_multiply(g: SU2Element, h: HElement) -> SU2Element:
    return su2_multiply(g, h.as_su2())


def bundle_iso_phi(g: SU2Element, v: complex, phi: PhiMap = DEFAULT_PHI):
    """``[(g, v)] -> ([x(g)], v phi(x(g)))`` from the associated bundle to L_-.

    The returned vector is expressed with the representative ``x(g)`` itself,
    which is what makes the map independent of the choice of ``g`` in its
    class: replacing ``g`` by ``g h`` with antidiagonal ``h`` flips ``x(g)``
    and ``kappa(h^-1) = -1`` flips ``v``, and the oddness of ``phi`` cancels both.
    """
    x = hopf_projection(g)
    return rp2_canonical_rep(x), complex(v) * phi(x)


# ---------------------------------------------------------------------------
# parity sectors and generators


@dataclass
class ParitySection:
    """``a(x) = sum c_lm Y_lm(x)`` with ``l`` of one parity."""

    sector: Sector
    coefficients: dict = field(default_factory=dict)
    l_max: int = 0

    def __post_init__(self):
        self.sector = Sector(self.sector)
        want = 0 if self.sector is Sector.EVEN else 1
        for (l, m) in self.coefficients:
            if l % 2 != want or l > self.l_max or abs(m) > l:
                raise ValueError(f"({l}, {m}) does not belong to the {self.sector.value} sector")

    def evaluate(self, theta, phi) -> np.ndarray:
        out = np.zeros(np.broadcast(np.asarray(theta), np.asarray(phi)).shape, dtype=complex)
        for (l, m), c in self.coefficients.items():
            out = out + c * monopole_harmonic(0, l, m, theta, phi)
        return out

    def evaluate_points(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        theta = np.arctan2(np.hypot(x[..., 0], x[..., 1]), x[..., 2])
        phi = np.arctan2(x[..., 1], x[..., 0])
        return self.evaluate(theta, phi)


def sector_l_values(sector, l_max: int) -> list[int]:
    start = 0 if Sector(sector) is Sector.EVEN else 1
    return list(range(start, l_max + 1, 2))


def parity_generators(sector, l_max: int) -> Generators:
    """Orbital ``L_i`` on spherical harmonics with ``l`` of the sector's parity."""
    sector = Sector(sector)
    if sector is Sector.ODD and l_max < 1:
        raise ValueError("the odd sector needs l_max >= 1")
    if l_max < 0:
        raise ValueError("l_max must be nonnegative")
    ls = sector_l_values(sector, l_max)
    jp, jz = ladder_blocks(ls)
    Jx = (jp + jp.T) / 2
    Jy = (jp - jp.T) / 2j
    Jz = np.diag(jz).astype(complex)
    J2 = Jx @ Jx + Jy @ Jy + Jz @ Jz
    J2 = (J2 + J2.conj().T) / 2
    return Generators(
        OperatorMatrix(Jx, True), OperatorMatrix(Jy, True), OperatorMatrix(Jz, True), OperatorMatrix(J2, True)
    )


def orbital_matrices_quadrature(l_max: int, n_theta: int | None = None, n_phi: int | None = None):
    """``<Y_a| L_i |Y_b>`` for all ``l <= l_max`` by exact quadrature.

    ``L_i Y_b`` is formed from exact angular derivatives, and the integral uses
    Gauss-Legendre nodes in ``cos(theta)`` and a uniform phi grid, which is
    exact for the band-limited integrands.  Returns the labels and the three
    matrices; nothing in the construction assumes ``L_i`` preserves ``l``.
    """
    from numpy.polynomial.legendre import leggauss

    n_theta = n_theta or (l_max + 4)
    n_phi = n_phi or (4 * l_max + 8)
    nodes, weights = leggauss(n_theta)
    theta = np.arccos(nodes)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    T, P = np.meshgrid(theta, phi, indexing="ij")
    W = weights[:, None] * (2 * np.pi / n_phi)
    labels = [(l, m) for l in range(l_max + 1) for m in range(-l, l + 1)]
    Y = [monopole_harmonic(0, l, m, T, P) for l, m in labels]
    cot = np.cos(T) / np.sin(T)
    LY = {0: [], 1: [], 2: []}
    for (l, m), y in zip(labels, Y):
        dth = harmonic_dtheta(0, l, m, T, P)
        dph = 1j * m * y
        LY[0].append(1j * (np.sin(P) * dth + cot * np.cos(P) * dph))
        LY[1].append(1j * (-np.cos(P) * dth + cot * np.sin(P) * dph))
        LY[2].append(-1j * dph)
    mats = []
    for k in range(3):
        M = np.array([[np.sum(W * np.conj(ya) * lyb) for lyb in LY[k]] for ya in Y])
        mats.append(M)
    return labels, mats


def parity_leakage(l_max: int) -> float:
    """Largest ``|<even l| L_i |odd l'>|`` in the unrestricted basis."""
    labels, mats = orbital_matrices_quadrature(l_max)
    par = np.array([l % 2 for l, _ in labels])
    cross = par[:, None] != par[None, :]
    return float(max(np.max(np.abs(M[cross])) for M in mats))


# ---------------------------------------------------------------------------
# projector and holonomy


def projector_p(x, phi: PhiMap = DEFAULT_PHI) -> np.ndarray:
    """Rank-one projector ``|phi(x)><phi(x)|`` with ``phi`` normalized."""
    u = phi.unit(x)
    return np.outer(u, np.conj(u))


def holonomy_transport(path, phi: PhiMap = DEFAULT_PHI, max_step: float = 0.1, end_tol: float = 1e-8) -> complex:
    """Parallel transport of the fibre of L_- around a loop closed in RP^2.

    Product of normalized overlaps ``<phi(x_{k+1})|phi(x_k)>`` along the path,
    times the identification factor ``<phi(x_0)|phi(x_N)>`` at the end, which is
    ``-1`` when the path ends at the antipode of its start.
    """
    pts = np.array([p.vector if isinstance(p, SpherePoint) else np.asarray(p, float) for p in path])
    pts = pts / np.linalg.norm(pts, axis=1, keepdims=True)
    if len(pts) < 2:
        raise ValueError("a loop needs at least two points")
    steps = np.arccos(np.clip(np.sum(pts[1:] * pts[:-1], axis=1), -1, 1))
    if np.max(steps) > max_step + 1e-12:
        raise ValueError(f"path step {np.max(steps):.3g} exceeds {max_step}; refine the path")
    start, end = pts[0], pts[-1]
    if min(np.linalg.norm(end - start), np.linalg.norm(end + start)) > end_tol:
        raise ValueError("path does not close in RP^2")
    u = np.array([phi.unit(x) for x in pts])
    overlaps = np.sum(np.conj(u[1:]) * u[:-1], axis=1)
    if np.min(np.abs(overlaps)) < 1e-6:
        raise ValueError("degenerate transport step (overlap below 1e-6); refine the path")
    hol = np.prod(overlaps / np.abs(overlaps))
    closing = np.vdot(u[0], u[-1])
    return complex(hol * closing / abs(closing))


def great_circle_path(start, axis, angle: float, steps: int) -> np.ndarray:
    """Points ``R(axis, s) start`` for ``s`` from 0 to ``angle`` in ``steps`` increments."""
    start = np.asarray(start, float)
    k = np.asarray(axis, float)
    k = k / np.linalg.norm(k)
    s = np.linspace(0.0, angle, steps + 1)[:, None]
    return start * np.cos(s) + np.cross(k, start) * np.sin(s) + k * (k @ start) * (1 - np.cos(s))


def small_circle_path(colatitude: float, steps: int) -> np.ndarray:
    s = np.linspace(0, 2 * np.pi, steps + 1)
    st = np.sin(colatitude)
    return np.stack([st * np.cos(s), st * np.sin(s), np.full_like(s, np.cos(colatitude))], axis=1)
