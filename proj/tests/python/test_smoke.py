import math

import numpy as np
import pytest

import ukblab


@pytest.fixture(scope="module")
def m2_plus_m3():
    return ukblab.catalog()["m2_plus_m3"]


def test_catalog_and_blocks(m2_plus_m3):
    entries = ukblab.catalog()
    assert set(entries) == {
        "m2",
        "m3",
        "m2_plus_m3",
        "scalars_in_m2",
        "doubled_m2",
        "diagonal_d3",
    }
    assert m2_plus_m3.dim == 13
    assert [b.n for b in m2_plus_m3.blocks] == [2, 3]


def test_generate_algebra_roundtrip():
    e11 = np.diag([1.0 + 0j, 0.0])
    e22 = np.diag([0.0 + 0j, 1.0])
    a = ukblab.generate_algebra(2, [e11, e22])
    assert a.dim == 2
    assert len(a.blocks) == 2


def test_states_distance_and_gns(m2_plus_m3):
    s1 = ukblab.state_from_ray(m2_plus_m3, 0, np.array([1.0, 0.0], complex))
    s2 = ukblab.state_from_ray(
        m2_plus_m3, 1, np.array([1.0, 0.0, 0.0], complex)
    )
    assert s1.is_pure and s2.is_pure
    assert ukblab.kahler_distance(s1, s2) == ukblab.CROSS_FIBER_DISTANCE
    assert ukblab.gns_dim(s1) == 2
    assert ukblab.is_pure_via_gns(s1)
    assert math.isclose(
        ukblab.KAPPA, math.sqrt(2.0) * math.pi / 2.0, rel_tol=0, abs_tol=1e-15
    )


def test_ideals_and_restriction(m2_plus_m3):
    ideals = ukblab.enumerate_ideals(m2_plus_m3)
    assert len(ideals) == 4
    ok, clauses = ukblab.restriction_iso_ideal(m2_plus_m3, {0}, samples=10)
    assert ok and clauses


def test_star_and_norm():
    m2 = ukblab.catalog()["m2"]
    e12 = np.array([[0.0, 1.0], [0.0, 0.0]], complex)
    e21 = e12.conj().T
    commutator = ukblab.star_product(m2, e12, e21) - ukblab.star_product(
        m2, e21, e12
    )
    assert np.allclose(commutator, np.diag([1.0, -1.0]), atol=1e-10)
    exact, sampled = ukblab.cstar_norm(m2, np.diag([1.0 + 0j, 2.0]), 500)
    assert math.isclose(exact, 2.0, abs_tol=1e-12)
    assert sampled <= exact + 1e-12


def test_hereditary_geometry():
    m2 = ukblab.catalog()["m2"]
    p = np.diag([1.0 + 0j, 0.0])
    ctx = ukblab.hereditary_context(m2, p)
    assert ctx.spectrum == {0}
    tau = ukblab.random_pure_state(ctx.subalgebra, seed=3)
    rho = ukblab.xi_extend(ctx, tau)
    t, tau_back = ukblab.theta(ctx, rho)
    assert math.isclose(t, 1.0, abs_tol=1e-10)
    assert ukblab.classify_state(ctx, rho) == "ON_IMAGE"
    mid = ukblab.theta_preimage(ctx, 0.25, tau)
    assert math.isclose(
        ukblab.distance_to_xi_image(ctx, mid),
        math.sqrt(2.0) * math.pi / 3.0,
        abs_tol=1e-10,
    )
    ok, _ = ukblab.subbundle_check(ctx, samples=10)
    assert ok


def test_verify_algebra_passes():
    ok, clauses = ukblab.verify_algebra(
        ukblab.catalog()["m2"], samples=10, seed=7
    )
    assert ok, [c for c in clauses if not c["pass"]]
