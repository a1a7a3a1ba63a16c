import math

import numpy as np
import pytest

from sbmpot import bernstein, densities


def test_stable_potential_density_closed_form():
    for alpha in (0.5, 1.0, 1.5):
        phi = bernstein.stable(alpha)
        t = np.geomspace(1e-3, 10.0, 21)
        expected = t ** (alpha / 2.0 - 1.0) / math.gamma(alpha / 2.0)
        np.testing.assert_allclose(
            densities.potential_density_u(phi, t), expected, rtol=1e-9)


def test_potential_density_inversion_route_agrees():
    # mode="invert" bypasses closed forms; cross-validates the Talbot path
    phi = bernstein.stable(1.0)
    t = np.geomspace(1e-2, 10.0, 15)
    closed = densities.potential_density_u(phi, t, mode="closed")
    inverted = densities.potential_density_u(phi, t, mode="talbot")
    np.testing.assert_allclose(inverted, closed, rtol=1e-8)


def test_geometric_potential_closed_series():
    # the truncated-series potential density is exact; the Talbot route must agree
    phi = bernstein.geometric_like(1.0, 64)
    t = np.geomspace(1e-2, 1.0, 11)
    closed = densities.potential_density_u(phi, t, mode="closed")
    inverted = densities.potential_density_u(phi, t, mode="talbot")
    np.testing.assert_allclose(inverted, closed, rtol=1e-7)


def test_u_decreasing_and_convex(catalog):
    t = np.geomspace(1e-2, 10.0, 40)
    for phi in catalog:
        u = np.atleast_1d(densities.potential_density_u(phi, t))
        assert np.all(np.diff(u) < 0.0), phi.label()
        assert np.all(np.diff(u, 2) > -1e-12 * u[:-2]), phi.label()


def test_zahle_upper_bound_with_explicit_constant(catalog):
    for phi in catalog:
        rep = densities.zahle_upper_check(phi)
        assert rep.passed, phi.label()
        assert rep.max_product <= densities.ZAHLE_BOUND + 1e-6, phi.label()


def test_zahle_lower_bound_via_scaling_witness():
    # a witness below the lower scaling index verifies; one above it cannot
    phi = bernstein.stable(1.0)
    good = densities.ScalingWitness(delta=0.4, a_const=1.0, s0=1.0)
    assert densities.verify_scaling_condition(phi, good)
    bad = densities.ScalingWitness(delta=0.9, a_const=1.0, s0=1.0)
    assert not densities.verify_scaling_condition(phi, bad)
    t = np.geomspace(1e-3, 0.9, 30)
    u = np.atleast_1d(densities.potential_density_u(phi, t))
    products = u * t * np.atleast_1d(phi(1.0 / t))
    assert np.all(products > 0.0)
    assert products.min() > 0.1


def test_find_scaling_constant_stable():
    phi = bernstein.stable(1.0)
    a = densities.find_scaling_constant(phi, delta=0.4)
    assert np.isfinite(a) and a >= 1.0 - 1e-12


def test_tail_vs_conjugate_potential_identity(catalog):
    # two independent routes to the Levy tail must agree on live points
    for phi in catalog:
        gap = densities.tail_vs_conjugate_potential(phi)
        assert gap < 1e-4, f"{phi.label()}: {gap:.3e}"


def test_asymptotic_ratio_windows(catalog):
    for phi in catalog:
        for win in (densities.u_asymptotic_ratio(phi), densities.mu_asymptotic_ratio(phi)):
            assert 0.0 < win.lo <= win.hi, phi.label()
            assert win.hi / win.lo < 1e3, phi.label()


def test_density_evaluator_batches_match_scalars():
    phi = bernstein.relativistic_stable(1.0, 1.0)
    ev = densities.DensityEvaluator(phi)
    t = np.array([0.05, 0.3, 2.0])
    batch = np.atleast_1d(ev.u(t))
    singles = np.array([float(ev.u(float(x))) for x in t])
    np.testing.assert_allclose(batch, singles, rtol=1e-10)


def test_killed_phi_potential_density_allowed():
    phi = bernstein.killed_shift(bernstein.stable(1.0), 0.5)
    t = np.geomspace(1e-2, 2.0, 9)
    u = np.atleast_1d(densities.potential_density_u(phi, t))
    base = np.atleast_1d(densities.potential_density_u(bernstein.stable(1.0), t))
    assert np.all(u > 0.0)
    assert np.all(u <= base * (1.0 + 1e-9))
