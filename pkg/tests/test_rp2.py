import numpy as np
import pytest

from canonquant.errors import DomainError
from canonquant.rp2 import (
    DEFAULT_PHI,
    HElement,
    HKind,
    ParitySection,
    PhiMap,
    bundle_iso_phi,
    great_circle_path,
    holonomy_transport,
    kappa_classify,
    orbital_matrices_quadrature,
    parity_generators,
    parity_leakage,
    projector_p,
    right_multiply,
    rp2_canonical_rep,
    rp2_transition,
    sector_l_values,
    small_circle_path,
)
from canonquant.su2 import SpherePoint, SU2Element, hopf_projection, random_sphere_points, random_su2


@pytest.fixture
def points(rng):
    return random_sphere_points(rng, 100)


def test_canonical_rep_examples():
    assert np.array_equal(rp2_canonical_rep([0, 0, -1]).vector, [0, 0, 1])
    assert np.array_equal(rp2_canonical_rep([-1, 0, 0]).vector, [1, 0, 0])


def test_canonical_rep_antipodal(points):
    for x in points:
        a, b = rp2_canonical_rep(x).vector, rp2_canonical_rep(-x).vector
        assert a.tobytes() == b.tobytes()


def test_canonical_rep_signed_zero():
    a = rp2_canonical_rep([0.0, -0.0, 1.0]).vector
    b = rp2_canonical_rep([-0.0, 0.0, -1.0]).vector
    assert a.tobytes() == b.tobytes()


def test_kappa_table():
    assert kappa_classify(HElement.diagonal(1j)) == 1
    assert kappa_classify(HElement.antidiagonal(1)) == -1


def test_kappa_of_product():
    a, b = HElement.antidiagonal(np.exp(0.4j)), HElement.antidiagonal(np.exp(-1.1j))
    prod = HElement.from_matrix(a.matrix2x2 @ b.matrix2x2)
    assert prod.kind is HKind.DIAGONAL
    assert kappa_classify(prod) == 1


def test_kappa_is_character(rng):
    hs = [HElement.diagonal(np.exp(1j * t)) for t in rng.uniform(0, 6, 3)]
    hs += [HElement.antidiagonal(np.exp(1j * t)) for t in rng.uniform(0, 6, 3)]
    for a in hs:
        for b in hs:
            ab = HElement.from_matrix(a.matrix2x2 @ b.matrix2x2)
            assert kappa_classify(ab) == kappa_classify(a) * kappa_classify(b)


def test_kappa_rejects_non_members():
    with pytest.raises(DomainError):
        kappa_classify(np.array([[1, 1], [0, 1]]))
    with pytest.raises(DomainError):
        kappa_classify(HElement(np.eye(2, dtype=complex), HKind.ANTIDIAGONAL))


def test_transition_examples():
    s = 1 / np.sqrt(2)
    assert rp2_transition(1, 2, rp2_canonical_rep([s, s, 0])) == 1
    assert rp2_transition(1, 2, rp2_canonical_rep([s, -s, 0])) == -1


def test_transition_outside_overlap():
    with pytest.raises(DomainError):
        rp2_transition(1, 3, rp2_canonical_rep([1, 0, 0]))


def test_transition_cocycle(points):
    for x in points:
        p = rp2_canonical_rep(x)
        assert rp2_transition(1, 2, p) * rp2_transition(2, 3, p) * rp2_transition(3, 1, p) == 1


def test_transition_representative_independent(points):
    for x in points[:20]:
        p, q = rp2_canonical_rep(x), rp2_canonical_rep(-x)
        assert rp2_transition(2, 3, p) == rp2_transition(2, 3, q)


def test_phi_axioms(rng):
    ax = DEFAULT_PHI.check_axioms(rng)
    assert ax["odd_defect"] == 0.0
    assert ax["min_norm"] == pytest.approx(1.0)
    assert DEFAULT_PHI.satisfies_axioms(rng)


def test_phi_even_map_fails(rng):
    even = PhiMap(lambda x: np.array([x[0] ** 2, x[1] ** 2, x[2] ** 2 + 1.0]))
    assert not even.satisfies_axioms(rng)


def test_iso_identity():
    base, vec = bundle_iso_phi(SU2Element.identity(), 1.0)
    assert np.allclose(base.vector, [0, 0, 1])
    assert np.allclose(vec, [0, 0, 1])


def test_iso_zero_vector(rng):
    g = random_su2(rng)
    base, vec = bundle_iso_phi(g, 0.0)
    assert np.allclose(vec, 0)
    assert np.allclose(base.vector, rp2_canonical_rep(hopf_projection(g)).vector)


def test_antidiagonal_flips_base_point(rng):
    g = random_su2(rng)
    x = hopf_projection(g).vector
    y = hopf_projection(right_multiply(g, HElement.antidiagonal(np.exp(0.3j)))).vector
    assert np.allclose(x, -y, atol=1e-12)


@pytest.mark.parametrize(
    "h",
    [HElement.diagonal(1), HElement.diagonal(np.exp(0.9j)), HElement.antidiagonal(1), HElement.antidiagonal(np.exp(-2j))],
)
def test_iso_equivariance(rng, h):
    for g, v in zip(random_su2(rng, 20), rng.normal(size=20) + 1j * rng.normal(size=20)):
        b1, v1 = bundle_iso_phi(g, v)
        b2, v2 = bundle_iso_phi(right_multiply(g, h), kappa_classify(h) * v)
        assert np.allclose(b1.vector, b2.vector, atol=1e-10)
        assert np.allclose(v1, v2, atol=1e-10)


def test_odd_l1_generators():
    g = parity_generators("odd", 1)
    assert g.Jx.dim == 3
    assert np.allclose(g.J2.entries, 2 * np.eye(3))


def test_even_l0_generators():
    g = parity_generators("even", 0)
    for M in (g.Jx, g.Jy, g.Jz):
        assert M.entries.shape == (1, 1) and M.entries[0, 0] == 0


@pytest.mark.parametrize(
    "sector,values,mults", [("odd", [2, 12, 30], [3, 7, 11]), ("even", [0, 6, 20], [1, 5, 9])]
)
def test_sector_spectra(sector, values, mults):
    ev = np.linalg.eigvalsh(parity_generators(sector, 5).J2.entries)
    for v, k in zip(values, mults):
        assert np.sum(np.abs(ev - v) < 1e-10) == k
    assert len(ev) == sum(mults)


def test_generators_match_quadrature():
    labels, mats = orbital_matrices_quadrature(5)
    idx = [i for i, (l, _) in enumerate(labels) if l % 2 == 1]
    g = parity_generators("odd", 5)
    for M, G in zip(mats, (g.Jx, g.Jy, g.Jz)):
        assert np.allclose(M[np.ix_(idx, idx)], G.entries, atol=1e-12)


def test_parity_leakage():
    assert parity_leakage(5) < 1e-12


def test_sector_labels():
    assert sector_l_values("odd", 5) == [1, 3, 5]
    assert sector_l_values("even", 5) == [0, 2, 4]


def test_parity_section_symmetry(points):
    odd = ParitySection("odd", {(1, 0): 1.0, (3, -2): 0.5j}, 3)
    even = ParitySection("even", {(0, 0): 1.0, (2, 1): -0.3}, 2)
    assert np.allclose(odd.evaluate_points(-points), -odd.evaluate_points(points))
    assert np.allclose(even.evaluate_points(-points), even.evaluate_points(points))


def test_parity_section_rejects_wrong_l():
    with pytest.raises(ValueError):
        ParitySection("odd", {(2, 0): 1.0}, 3)


def test_projector_north_pole():
    assert np.allclose(projector_p([0, 0, 1]), np.diag([0, 0, 1]))


def test_projector_axioms(points):
    for x in points:
        p = projector_p(x)
        assert np.max(np.abs(p @ p - p)) < 1e-12
        assert np.max(np.abs(p - p.conj().T)) < 1e-12
        assert abs(np.trace(p) - 1) < 1e-12
        assert np.max(np.abs(projector_p(-x) - p)) < 1e-12


def test_holonomy_contractible():
    assert abs(holonomy_transport(small_circle_path(0.1, 1000)) - 1) < 1e-6


def test_holonomy_noncontractible():
    path = great_circle_path([1.0, 0, 0], [0, 0, 1], np.pi, 10000)
    assert abs(holonomy_transport(path) + 1) < 1e-4


def test_holonomy_double_loop():
    path = great_circle_path([1.0, 0, 0], [0, 0, 1], 2 * np.pi, 20000)
    assert abs(holonomy_transport(path) - 1) < 1e-4


def test_holonomy_complex_phi():
    # a phase-twisted odd map has the same Z2 holonomy
    phi = PhiMap(lambda x: np.exp(0.7j * x[2] ** 2) * x.astype(complex))
    path = great_circle_path([0.0, 0.6, 0.8], [1, 0, 0], np.pi, 5000)
    assert abs(holonomy_transport(path, phi) + 1) < 1e-4


def test_holonomy_rejects_big_steps():
    with pytest.raises(ValueError):
        holonomy_transport(great_circle_path([1.0, 0, 0], [0, 0, 1], np.pi, 10))


def test_holonomy_rejects_open_path():
    with pytest.raises(ValueError):
        holonomy_transport(great_circle_path([1.0, 0, 0], [0, 0, 1], 1.0, 100))


def test_holonomy_accepts_sphere_points():
    path = [SpherePoint(x) for x in small_circle_path(0.5, 200)]
    assert abs(holonomy_transport(path) - 1) < 1e-6
