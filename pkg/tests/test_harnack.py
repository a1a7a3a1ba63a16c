import math

import numpy as np
import pytest

from sbmpot import bernstein, harnack, montecarlo as mc
from sbmpot.errors import ConstructionError, EvaluationDomainError


def _cfg(paths, seed=11, **kw):
    kw.setdefault("horizon", 1.0)
    kw.setdefault("step", 1e-3)
    return mc.PathConfig(paths=paths, seed=seed, **kw)


def test_fatness_spec_validation():
    with pytest.raises(ConstructionError):
        harnack.FatnessSpec(kappa=0.7, R=1.0, corkscrew=lambda q, r: q + r / 2.0)
    with pytest.raises(ConstructionError):
        harnack.FatnessSpec(kappa=0.5, R=0.0, corkscrew=lambda q, r: q + r / 2.0)


def test_probe_families_vanish_inside():
    R = 1.0
    inside = np.linspace(-0.999, 0.999, 41)[:, None]
    for data in harnack.shell_probes_1d(R):
        assert np.all(data(inside) == 0.0)
    rad = np.linspace(0.0, 0.999, 21)
    pts = np.stack([rad, np.zeros_like(rad)], axis=1)
    for data in harnack.sector_probes_2d(R):
        assert np.all(data(pts) == 0.0)


def test_probe_families_cover_annulus():
    R = 1.0
    ys = np.concatenate([np.linspace(-15.9, -1.0, 200), np.linspace(1.0, 15.9, 200)])
    total = sum(data(ys[:, None]) for data in harnack.shell_probes_1d(R))
    assert np.all(total == 1.0)
    ang = np.linspace(-math.pi + 1e-6, math.pi - 1e-6, 400)
    pts = 1.5 * np.stack([np.cos(ang), np.sin(ang)], axis=1)
    total = sum(data(pts) for data in harnack.sector_probes_2d(R))
    assert np.all(total == 1.0)


def test_constant_data_is_exactly_one():
    phi = bernstein.stable(1.0)
    dom = mc.Ball(center=(0.0,), radius=1.0)
    probe = harnack.HarmonicProbe(
        boundary_data=lambda x: np.ones(x.shape[0]),
        domain=dom,
        grid=np.array([[-0.4], [0.0], [0.3]]))
    ests = harnack.mc_harmonic(phi, 1, probe, _cfg(300))
    for est in ests:
        assert est.mean == 1.0 and est.std_error == 0.0


def test_mc_harmonic_linearity_on_shared_paths():
    phi = bernstein.stable(1.0)
    dom = mc.Ball(center=(0.0,), radius=1.0)
    grid = np.array([[0.0], [0.2]])

    def base(x):
        return (x[:, 0] >= 1.0).astype(float)

    cfg = _cfg(400)
    u = harnack.mc_harmonic(phi, 1, harnack.HarmonicProbe(base, dom, grid), cfg)
    three = harnack.mc_harmonic(
        phi, 1, harnack.HarmonicProbe(lambda x: 3.0 * base(x), dom, grid), cfg)
    for a, b in zip(u, three):
        assert b.mean == pytest.approx(3.0 * a.mean, rel=1e-14)


def test_mc_harmonic_dimension_mismatch():
    phi = bernstein.stable(1.0)
    dom = mc.Ball(center=(0.0,), radius=1.0)
    probe = harnack.HarmonicProbe(lambda x: np.ones(x.shape[0]), dom, np.array([[0.0]]))
    with pytest.raises(EvaluationDomainError):
        harnack.mc_harmonic(phi, 2, probe, _cfg(10))


def test_harnack_ratio_stable_passes():
    phi = bernstein.stable(1.0)
    rep = harnack.harnack_ratio(phi, 1, 0.05, _cfg(600))
    assert rep.passed
    assert 1.0 <= rep.ratio < 5.0
    assert rep.refinement_delta < 0.2


def test_harnack_ratio_d2_sectors():
    phi = bernstein.stable(1.0)
    rep = harnack.harnack_ratio(phi, 2, 0.05, _cfg(400, seed=7))
    assert rep.passed
    assert math.isfinite(rep.ratio)


def test_carleson_conclusive_and_passing():
    phi = bernstein.stable(1.0)
    rep = harnack.carleson_check(phi, mc.Interval(0.0, 1.0), 0.0, 0.05, _cfg(1500))
    assert not rep.inconclusive
    assert rep.passed
    assert rep.floor > 0.0
    assert rep.corkscrew_value == pytest.approx(0.025)


def test_carleson_mirrored_endpoint():
    phi = bernstein.stable(1.0)
    rep = harnack.carleson_check(phi, mc.Interval(0.0, 1.0), 1.0, 0.05, _cfg(1500))
    assert not rep.inconclusive
    assert rep.passed
    assert rep.corkscrew_value == pytest.approx(0.975)


def test_carleson_tiny_r_inconclusive_not_failed():
    phi = bernstein.stable(1.0)
    rep = harnack.carleson_check(phi, mc.Interval(0.0, 1.0), 0.0, 1e-5, _cfg(40))
    assert rep.inconclusive
    assert not rep.passed


def test_carleson_interior_q_rejected():
    phi = bernstein.stable(1.0)
    with pytest.raises(EvaluationDomainError):
        harnack.carleson_check(phi, mc.Interval(0.0, 1.0), 0.5, 0.05, _cfg(10))


def test_bhp_trivial_and_symmetry():
    phi = bernstein.stable(1.0)
    cfg = _cfg(400, seed=7)

    def u_data(x):
        y = x[:, 0]
        return ((y >= 0.1) & (y < 0.4)).astype(float)

    def v_data(x):
        y = x[:, 0]
        return ((y >= 0.4) & (y < 1.6)).astype(float)

    same = harnack.bhp_ratio_check(phi, 1, 0.05, cfg, probes=(u_data, u_data))
    assert same.spread == 1.0 and same.delta_paths == 0.0
    a = harnack.bhp_ratio_check(phi, 1, 0.05, cfg, probes=(u_data, v_data))
    b = harnack.bhp_ratio_check(phi, 1, 0.05, cfg, probes=(v_data, u_data))
    assert a.spread == pytest.approx(b.spread, rel=1e-12)


def test_bhp_interval_passes():
    phi = bernstein.stable(1.0)
    rep = harnack.bhp_ratio_check(phi, 1, 0.05, _cfg(2400))
    assert rep.passed
    assert rep.spread < 10.0


def test_bhp_halfdisk_passes():
    phi = bernstein.stable(1.0)
    rep = harnack.bhp_ratio_check(phi, 2, 0.05, _cfg(1200, seed=7), domain="halfdisk")
    assert rep.passed
    assert rep.spread < 10.0


def test_bhp_bad_domain_rejected():
    phi = bernstein.stable(1.0)
    with pytest.raises(EvaluationDomainError):
        harnack.bhp_ratio_check(phi, 3, 0.05, _cfg(10), domain="interval")


def test_halfdisk_geometry():
    hd = harnack.HalfDisk(radius=1.0)
    pts = np.array([[0.0, 0.5], [0.0, -0.5], [2.0, 0.5], [0.0, 0.0]])
    np.testing.assert_array_equal(hd.contains(pts), [True, False, False, False])
    np.testing.assert_array_equal(hd.strictly_outside(pts), [False, True, True, False])
