import math

import numpy as np
import pytest

from sbmpot import bernstein, ladder


def test_chi_identity_stable():
    for alpha in (0.5, 1.0, 1.5):
        phi = bernstein.stable(alpha)
        for lam in (0.1, 1.0, 10.0, 100.0):
            chi = float(ladder.ladder_exponent_chi(phi, lam))
            assert abs(chi / lam ** (alpha / 2.0) - 1.0) < 1e-6


def test_chi_vectorized_matches_scalar():
    phi = bernstein.sum_of_stables(1.0, 0.5)
    lam = np.geomspace(0.1, 100.0, 9)
    batch = np.atleast_1d(ladder.ladder_exponent_chi(phi, lam))
    singles = np.array([float(ladder.ladder_exponent_chi(phi, float(x))) for x in lam])
    np.testing.assert_allclose(batch, singles, rtol=1e-12)


def test_sandwich_all_catalog(catalog, lam_grid):
    for phi in catalog:
        mn, mx = ladder.chi_sandwich_check(phi, lam_grid)
        assert mn >= ladder.SANDWICH_LO - 1e-9, phi.label()
        assert mx <= ladder.SANDWICH_HI + 1e-9, phi.label()


def test_chi_is_complete_bernstein():
    for phi in (bernstein.stable(1.0), bernstein.sum_of_stables(1.0, 0.5)):
        rep = ladder.chi_is_cbf_check(phi)
        assert rep.passed, phi.label()


def test_renewal_function_stable_closed_form():
    for alpha in (0.5, 1.0, 1.5):
        phi = bernstein.stable(alpha)
        t = np.geomspace(0.1, 10.0, 9)
        expected = t ** (alpha / 2.0) / math.gamma(1.0 + alpha / 2.0)
        np.testing.assert_allclose(
            np.atleast_1d(ladder.renewal_function_V(phi, t)), expected, rtol=1e-9)


def test_renewal_scaling_inequality(catalog):
    # V(2t) <= 2 V(t): subadditivity of the renewal function of a subordinator
    t = np.geomspace(0.05, 5.0, 12)
    for phi in catalog:
        v1 = np.atleast_1d(ladder.renewal_function_V(phi, t))
        v2 = np.atleast_1d(ladder.renewal_function_V(phi, 2.0 * t))
        assert np.all(v2 <= 2.0 * v1 * (1.0 + 1e-6)), phi.label()
        assert np.all(np.diff(v1) > 0.0), phi.label()


def test_ladder_density_is_renewal_derivative():
    phi = bernstein.stable(1.0)
    t = np.geomspace(0.2, 5.0, 9)
    h = 1e-4 * t
    dv = (np.atleast_1d(ladder.renewal_function_V(phi, t + h))
          - np.atleast_1d(ladder.renewal_function_V(phi, t - h))) / (2.0 * h)
    v = np.atleast_1d(ladder.ladder_density_v(phi, t))
    np.testing.assert_allclose(v, dv, rtol=1e-5)


def test_halfline_green_closed_value():
    phi = bernstein.stable(1.0)
    expected = (2.0 / math.pi) * math.log(1.0 + math.sqrt(2.0))
    assert ladder.halfline_green(phi, 1.0, 2.0) == pytest.approx(expected, abs=1e-4)


def test_halfline_green_symmetry():
    phi = bernstein.stable(1.0)
    xs = np.linspace(0.5, 2.5, 5)
    for i, x in enumerate(xs):
        for y in xs[i + 1:]:
            a = ladder.halfline_green(phi, float(x), float(y))
            b = ladder.halfline_green(phi, float(y), float(x))
            assert abs(a - b) < 1e-6


def test_interval_green_mass_bound_limits():
    phi = bernstein.stable(1.0)
    big = ladder.interval_green_mass_bound(phi, 1.0, 0.5)
    assert big.min_form <= big.plain * (1.0 + 1e-12)
    assert big.plain > 0.0
    # expected exit time vanishes at the boundary
    near_zero = ladder.interval_green_mass_bound(phi, 1.0, 1e-9)
    assert near_zero.plain < 1e-3


def test_ladder_objects_bundle():
    phi = bernstein.stable(1.0)
    objs = ladder.ladder_objects(phi)
    lam = np.array([1.0, 4.0])
    np.testing.assert_allclose(np.atleast_1d(objs.chi_eval(lam)), np.sqrt(lam), rtol=1e-8)
    t = np.array([0.5, 1.0])
    np.testing.assert_allclose(
        np.atleast_1d(objs.renewal_eval(t)),
        np.atleast_1d(ladder.renewal_function_V(phi, t)), rtol=1e-10)
