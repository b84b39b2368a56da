import time

import numpy as np
import pytest

from canonquant.errors import DomainError, ResolutionError
from canonquant.monopole_bundle import (
    MonopoleBundle,
    chern_flux_integral,
    closure_defect,
    curl_numerical,
    equator_winding,
    gauge_potential_eval,
    monopole_field,
    transition_gSN,
)
from canonquant.su2 import SpherePoint, random_sphere_points


def test_bundle_label():
    assert MonopoleBundle(3).eg_over_c == 1.5
    with pytest.raises(ValueError):
        MonopoleBundle(0.5)


@pytest.mark.parametrize("n", [-3, 0, 1, 4])
def test_transition_on_positive_axis(n):
    assert transition_gSN(SpherePoint([1, 0, 0]), n) == pytest.approx(1.0)


def test_transition_at_z_equals_i():
    p = SpherePoint.from_angles(np.pi / 2, np.pi / 2)
    assert transition_gSN(p, 2) == pytest.approx(-1.0)


def test_trivial_transition(rng):
    for x in random_sphere_points(rng, 20):
        assert transition_gSN(SpherePoint(x), 0) == pytest.approx(1.0)


def test_transition_is_phase(rng):
    for x in random_sphere_points(rng, 20):
        p = SpherePoint(x)
        assert transition_gSN(p, 3) == pytest.approx(np.exp(3j * p.phi), abs=1e-12)


@pytest.mark.parametrize("x", [[0, 0, 1], [0, 0, -1]])
def test_transition_rejects_poles(x):
    with pytest.raises(DomainError):
        transition_gSN(SpherePoint(x), 1)


def test_winding_examples():
    res = equator_winding(3, 100)
    assert res.winding == 3 and res.residual < 1e-10
    assert equator_winding(0, 100).winding == 0
    assert equator_winding(-2, 100).winding == -2


def test_winding_too_coarse():
    with pytest.raises(ResolutionError):
        equator_winding(5, 8)


def test_potential_example():
    s = gauge_potential_eval([1, 0, 0], 1.0, "N")
    assert np.allclose(s.A, [0, 1, 0])


@pytest.mark.parametrize("q,patch", [([0, 0, -2.0], "N"), ([0, 0, 1.0], "S")])
def test_potential_singular_ray(q, patch):
    with pytest.raises(DomainError):
        gauge_potential_eval(q, 1.0, patch)


@pytest.mark.parametrize("patch", ["N", "S"])
def test_curl_is_monopole_field(rng, patch):
    worst = 0.0
    for x in random_sphere_points(rng, 100):
        q = x * rng.uniform(0.5, 2.0)
        if (patch == "N" and x[2] < -0.99) or (patch == "S" and x[2] > 0.99):
            continue
        worst = max(worst, np.max(np.abs(curl_numerical(q, 0.7, patch) - monopole_field(q, 0.7))))
    assert worst < 1e-6


def test_gauge_difference_is_pure_gradient():
    # A_N - A_S = 2 g grad(phi)
    q = np.array([0.3, -0.4, 0.5])
    d = gauge_potential_eval(q, 1.0, "N").A - gauge_potential_eval(q, 1.0, "S").A
    rho2 = q[0] ** 2 + q[1] ** 2
    assert np.allclose(d, 2 * np.array([-q[1], q[0], 0]) / rho2)


def test_flux_n2():
    assert chern_flux_integral(2, 100, 200) == pytest.approx(2.0, abs=1e-6)


def test_flux_zero():
    assert chern_flux_integral(0) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("n", range(-3, 4))
def test_flux_matches_winding(n):
    t0 = time.perf_counter()
    flux = chern_flux_integral(n, 100, 200)
    w = equator_winding(n, 100)
    assert time.perf_counter() - t0 < 1.0
    assert round(flux) == w.winding == n
    assert abs(flux - n) < 1e-6 and w.residual < 1e-6


@pytest.mark.parametrize("nu", [0, 1, 2, -3])
def test_closure_integer(nu):
    assert closure_defect(nu) < 1e-12


def test_closure_half():
    assert closure_defect(0.5) == pytest.approx(2.0)


def test_closure_fractional():
    assert closure_defect(1.37) == pytest.approx(abs(np.exp(2.74j * np.pi) - 1), abs=1e-12)
    assert closure_defect(1.37) == pytest.approx(1.8355, abs=1e-4)
    assert closure_defect(0.3) > 0.1
