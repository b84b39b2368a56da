import numpy as np
import pytest

from canonquant.canonical_group import (
    AlgebraElementTilde,
    CotangentPoint,
    SemidirectElement,
    Shift,
    algebra_bracket,
    cocycle_defect,
    coordinate_observable,
    cotangent_action,
    p_map,
    p_map_eval,
    poisson_bracket_canonical,
    random_cotangent_points,
    semidirect_multiply,
)
from canonquant.su2 import SU2Element, Su2AlgebraElement, random_su2, rotation_element


@pytest.fixture
def sample(rng):
    return random_cotangent_points(rng, 100)


def random_tilde(rng):
    return AlgebraElementTilde(rng.normal(size=3), Su2AlgebraElement(rng.normal(size=3)))


def random_abelian(rng, dim=3):
    return AlgebraElementTilde(rng.normal(size=dim), Shift(rng.normal(size=dim)))


def test_identity_multiply(rng):
    e = SemidirectElement(rng.normal(size=3), random_su2(rng))
    out = semidirect_multiply(SemidirectElement.identity(), e)
    assert np.allclose(out.phi_vector, e.phi_vector)
    assert out.g.z0 == pytest.approx(e.g.z0) and out.g.z1 == pytest.approx(e.g.z1)


def test_rotated_translation_part():
    e2 = SemidirectElement(np.zeros(3), rotation_element(2, np.pi))
    e1 = SemidirectElement([1.0, 0, 0], SU2Element.identity())
    assert np.allclose(semidirect_multiply(e2, e1).phi_vector, [-1, 0, 0], atol=1e-12)


def test_left_action(rng, sample):
    for pt in sample[:20]:
        a = SemidirectElement(rng.normal(size=3), random_su2(rng))
        b = SemidirectElement(rng.normal(size=3), random_su2(rng))
        lhs = cotangent_action(semidirect_multiply(a, b), pt)
        rhs = cotangent_action(a, cotangent_action(b, pt))
        assert np.allclose(lhs.u, rhs.u, atol=1e-12)
        assert np.allclose(lhs.psi, rhs.psi, atol=1e-12)


def test_identity_action(sample):
    pt = sample[0]
    out = cotangent_action(SemidirectElement.identity(), pt)
    assert np.allclose(out.u, pt.u) and np.allclose(out.psi, pt.psi)


def test_pure_translation(sample):
    pt = sample[0]
    phi = np.array([0.3, -1.0, 2.0])
    out = cotangent_action(SemidirectElement(phi, SU2Element.identity()), pt)
    assert np.allclose(out.u, pt.u)
    assert np.allclose(out.psi, pt.psi - phi)


def test_abelian_family_action(rng, sample):
    pt = sample[0]
    a, b = rng.normal(size=3), rng.normal(size=3)
    out = cotangent_action(SemidirectElement(a, Shift(b)), pt)
    assert np.allclose(out.u, pt.u + b) and np.allclose(out.psi, pt.psi - a)


def test_p_map_linear_case():
    At = AlgebraElementTilde([1.0, 0, 0], Su2AlgebraElement([0, 0, 0]))
    assert p_map_eval(At, CotangentPoint([2.0, 0, 0], [0, 0, 0])) == pytest.approx(2.0)


def test_p_map_angular_momentum():
    At = AlgebraElementTilde(np.zeros(3), Su2AlgebraElement.basis(2))
    assert p_map_eval(At, CotangentPoint([1.0, 0, 0], [0, 1.0, 0])) == pytest.approx(1.0)


def test_p_map_gradient_matches_fd(rng, sample):
    from canonquant.canonical_group import Observable

    P = p_map(random_tilde(rng))
    fd = Observable(P.func)
    for pt in sample[:5]:
        for g1, g2 in zip(P.gradient(pt), fd.gradient(pt)):
            assert np.allclose(g1, g2, atol=1e-8)


@pytest.mark.parametrize("i", range(3))
@pytest.mark.parametrize("j", range(3))
def test_canonical_pairs(sample, i, j):
    br = poisson_bracket_canonical(coordinate_observable("u", i), coordinate_observable("psi", j), sample[0])
    assert br == pytest.approx(float(i == j))


def test_antisymmetry(rng, sample):
    f = p_map(random_tilde(rng))
    assert poisson_bracket_canonical(f, f, sample[0]) == pytest.approx(0, abs=1e-12)


def test_basis_bracket_closes(sample):
    e1 = AlgebraElementTilde(np.zeros(3), Su2AlgebraElement.basis(0))
    e2 = AlgebraElementTilde(np.zeros(3), Su2AlgebraElement.basis(1))
    for pt in sample:
        lhs = poisson_bracket_canonical(p_map(e1), p_map(e2), pt)
        assert lhs == pytest.approx(p_map_eval(algebra_bracket(e1, e2), pt), abs=1e-8)


def test_rotation_cocycle_vanishes(rng, sample):
    for _ in range(10):
        rep = cocycle_defect(random_tilde(rng), random_tilde(rng), sample)
        assert rep.max_abs < 1e-8


def test_heisenberg_cocycle(rng, sample):
    A1, A2 = random_abelian(rng), random_abelian(rng)
    rep = cocycle_defect(A1, A2, sample)
    expected = A1.phi_vector @ A2.A.vector - A2.phi_vector @ A1.A.vector
    assert np.allclose(rep.values, expected, atol=1e-8)
    assert rep.spread < 1e-10


def test_zero_partner(rng, sample):
    A1 = random_tilde(rng)
    zero = AlgebraElementTilde(np.zeros(3), Su2AlgebraElement(np.zeros(3)))
    assert cocycle_defect(A1, zero, sample).max_abs < 1e-12


def test_cocycle_needs_two_points(rng, sample):
    with pytest.raises(ValueError):
        cocycle_defect(random_tilde(rng), random_tilde(rng), sample[:1])
