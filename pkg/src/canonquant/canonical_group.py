"""
Finite-dimensional canonical groups acting on ``T*W = W x W*``.

Two families are provided:

* the rotation family ``R^3 x| SU(2)``, with SU(2) acting on ``W = R^3`` through
  :func:`canonquant.su2.rotation_matrix_of`;
* the abelian family ``R^n x R^n`` of covector shifts and translations, whose
  momentum map carries a nonzero constant cocycle (the Heisenberg central
  term).

Sign conventions
----------------
Poisson brackets are ``{f, h} = df/du . dh/dpsi - df/dpsi . dh/du`` so that
``{u_i, psi_j} = delta_ij``.  For the rotation family the momentum observable
of a basis element is ``P(e_k)(u, psi) = s_k (u x psi)_k`` with
``s = (-1, +1, +1)``; the flipped first sign comes from the orientation of
the Hopf identification.  Only sign-independent statements (vanishing or
constancy of the cocycle) are asserted by the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .su2 import (
    SU2Element,
    Su2AlgebraElement,
    rotation_generator_of,
    rotation_matrix_of,
    su2_multiply,
)

FD_STEP = 1e-5


@dataclass(frozen=True)
class Shift:
    """Translation ``u -> u + b`` of the abelian family (also its own generator)."""

    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(float(v) for v in np.ravel(self.b)))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.b)


GroupPart = Union[SU2Element, Shift]
AlgebraPart = Union[Su2AlgebraElement, Shift]


@dataclass(frozen=True)
class SemidirectElement:
    phi: tuple
    g: GroupPart

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(float(v) for v in np.ravel(self.phi)))

    @property
    def phi_vector(self) -> np.ndarray:
        return np.array(self.phi)

    @classmethod
    def identity(cls, family: str = "rotation", dim: int = 3) -> "SemidirectElement":
        if family == "rotation":
            return cls(np.zeros(3), SU2Element.identity())
        if family == "abelian":
            return cls(np.zeros(dim), Shift(np.zeros(dim)))
        raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CotangentPoint:
    u: np.ndarray
    psi: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "u", np.asarray(self.u, dtype=float))
        object.__setattr__(self, "psi", np.asarray(self.psi, dtype=float))


@dataclass(frozen=True)
class AlgebraElementTilde:
    phi: tuple
    A: AlgebraPart

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(float(v) for v in np.ravel(self.phi)))

    @property
    def phi_vector(self) -> np.ndarray:
        return np.array(self.phi)

    def __add__(self, other: "AlgebraElementTilde") -> "AlgebraElementTilde":
        _same_family(self.A, other.A)
        if isinstance(self.A, Shift):
            A = Shift(self.A.vector + other.A.vector)
        else:
            A = self.A + other.A
        return AlgebraElementTilde(self.phi_vector + other.phi_vector, A)

    def scale(self, s: float) -> "AlgebraElementTilde":
        if isinstance(self.A, Shift):
            A = Shift(s * self.A.vector)
        else:
            A = s * self.A
        return AlgebraElementTilde(s * self.phi_vector, A)


def _same_family(a, b):
    if isinstance(a, Shift) != isinstance(b, Shift):
        raise TypeError("cannot mix rotation and abelian families")


def _linear_part(g: GroupPart, dim: int) -> np.ndarray:
    if isinstance(g, Shift):
        return np.eye(dim)
    return rotation_matrix_of(g)


def semidirect_multiply(e2: SemidirectElement, e1: SemidirectElement) -> SemidirectElement:
    """``(phi2, g2)(phi1, g1) = (phi2 + R(g2) phi1, g2 g1)``."""
    _same_family(e2.g, e1.g)
    if isinstance(e2.g, Shift):
        return SemidirectElement(
            e2.phi_vector + e1.phi_vector, Shift(e2.g.vector + e1.g.vector)
        )
    R2 = rotation_matrix_of(e2.g)
    return SemidirectElement(e2.phi_vector + R2 @ e1.phi_vector, su2_multiply(e2.g, e1.g))


def cotangent_action(e: SemidirectElement, pt: CotangentPoint) -> CotangentPoint:
    """Left action ``(u, psi) -> (R(g) u, R*(g^-1) psi - phi')``.

    For the abelian family ``R(g)`` is the translation ``u -> u + b``.
    """
    if isinstance(e.g, Shift):
        return CotangentPoint(pt.u + e.g.vector, pt.psi - e.phi_vector)
    R = rotation_matrix_of(e.g)
    # R*(g^-1) is the transpose of R(g^-1), i.e. R(g) for an orthogonal R
    return CotangentPoint(R @ pt.u, R @ pt.psi - e.phi_vector)


def algebra_bracket(A1: AlgebraElementTilde, A2: AlgebraElementTilde) -> AlgebraElementTilde:
    """Bracket of the semidirect-sum algebra."""
    _same_family(A1.A, A2.A)
    if isinstance(A1.A, Shift):
        n = len(A1.phi)
        return AlgebraElementTilde(np.zeros(n), Shift(np.zeros(n)))
    R1, R2 = rotation_generator_of(A1.A), rotation_generator_of(A2.A)
    phi = R1 @ A2.phi_vector - R2 @ A1.phi_vector
    return AlgebraElementTilde(phi, A1.A.bracket(A2.A))


# ---------------------------------------------------------------------------
# observables and brackets


@dataclass(frozen=True)
class Observable:
    """Function on ``T*W`` with an optional closed-form gradient ``(d/du, d/dpsi)``."""

    func: Callable[[np.ndarray, np.ndarray], float]
    grad: Optional[Callable[[np.ndarray, np.ndarray], tuple]] = None

    def __call__(self, pt: CotangentPoint) -> float:
        return float(self.func(pt.u, pt.psi))

    def gradient(self, pt: CotangentPoint, step: float = FD_STEP):
        if self.grad is not None:
            du, dpsi = self.grad(pt.u, pt.psi)
            return np.asarray(du, float), np.asarray(dpsi, float)
        return _fd_gradient(self.func, pt.u, pt.psi, step)

    def compose(self, action: Callable[[CotangentPoint], CotangentPoint]) -> "Observable":
        f = self.func

        def pulled(u, psi):
            q = action(CotangentPoint(u, psi))
            return f(q.u, q.psi)

        return Observable(pulled)


def _fd_gradient(f, u, psi, step):
    n = len(u)
    du, dpsi = np.empty(n), np.empty(n)
    for i in range(n):
        e = np.zeros(n)
        e[i] = step
        du[i] = (f(u + e, psi) - f(u - e, psi)) / (2 * step)
        dpsi[i] = (f(u, psi + e) - f(u, psi - e)) / (2 * step)
    return du, dpsi


def p_map(At: AlgebraElementTilde) -> Observable:
    """Momentum observable ``(u, psi) -> psi(R(A) u) + phi(u)``."""
    phi = At.phi_vector
    if isinstance(At.A, Shift):
        b = At.A.vector
        return Observable(
            lambda u, psi: psi @ b + phi @ u,
            lambda u, psi: (phi.copy(), b.copy()),
        )
    R = rotation_generator_of(At.A)
    return Observable(
        lambda u, psi: psi @ (R @ u) + phi @ u,
        lambda u, psi: (R.T @ psi + phi, R @ u),
    )


def p_map_eval(At: AlgebraElementTilde, pt: CotangentPoint) -> float:
    return p_map(At)(pt)


def coordinate_observable(kind: str, i: int) -> Observable:
    """``u_i`` (kind ``"u"``) or ``psi_i`` (kind ``"psi"``)."""

    def grad(u, psi):
        e = np.zeros(len(u))
        e[i] = 1.0
        z = np.zeros(len(u))
        return (e, z) if kind == "u" else (z, e)

    if kind == "u":
        return Observable(lambda u, psi: u[i], grad)
    if kind == "psi":
        return Observable(lambda u, psi: psi[i], grad)
    raise ValueError(kind)


def poisson_bracket_canonical(
    f: Observable, h: Observable, pt: CotangentPoint, step: float = FD_STEP
) -> float:
    fu, fp = f.gradient(pt, step)
    hu, hp = h.gradient(pt, step)
    return float(fu @ hp - fp @ hu)


@dataclass
class CocycleReport:
    values: np.ndarray
    mean: float
    spread: float

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))


def cocycle_defect(
    A1: AlgebraElementTilde, A2: AlgebraElementTilde, sample: list[CotangentPoint]
) -> CocycleReport:
    """``z(A1, A2) = {P(A1), P(A2)} - P([A1, A2])`` at each sample point."""
    if len(sample) < 2:
        raise ValueError("cocycle_defect needs at least two sample points")
    P1, P2 = p_map(A1), p_map(A2)
    P12 = p_map(algebra_bracket(A1, A2))
    vals = np.array([poisson_bracket_canonical(P1, P2, pt) - P12(pt) for pt in sample])
    return CocycleReport(vals, float(vals.mean()), float(vals.max() - vals.min()))


def random_cotangent_points(rng: np.random.Generator, size: int, dim: int = 3):
    return [
        CotangentPoint(rng.normal(size=dim), rng.normal(size=dim)) for _ in range(size)
    ]
