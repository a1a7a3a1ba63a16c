"""Empirical Harnack, Carleson, and boundary Harnack ratio checks.

A harmonic function is represented by its boundary data: u(x) =
E_x[data(X_tau_D)], evaluated by the exit sampler.  All checks share one
simulation per start point across the whole probe family (the data
functions are evaluated on the same exit positions), and the refinement
comparisons reuse the same paths: the base estimate reads the first quarter
of each path block, the paths-refined estimate reads all of it, and the
grid-refined estimate adds the interleaved start points.

Constants here are existence-only, so nothing asserts a particular ratio
value; the checks measure the ratio and require it to be finite and stable
under refinement, and each boolean verdict carries a three-sigma margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bernstein import CompleteBernsteinFunction
from .errors import ConstructionError, EvaluationDomainError
from .montecarlo import Ball, Interval, McEstimate, PathConfig, _as_points, _run_batches, scaled_config

__all__ = [
    "HarmonicProbe",
    "FatnessSpec",
    "HalfDisk",
    "shell_probes_1d",
    "sector_probes_2d",
    "mc_harmonic",
    "harnack_ratio",
    "HarnackReport",
    "carleson_check",
    "CarlesonReport",
    "bhp_ratio_check",
    "BhpReport",
]


@dataclass(frozen=True)
class HarmonicProbe:
    """Boundary data plus the domain it is harmonic in and evaluation grid."""

    boundary_data: Callable
    domain: object
    grid: np.ndarray
    label: str = ""


@dataclass(frozen=True)
class FatnessSpec:
    """Interior corkscrew geometry: B(A_r(Q), kappa*r) inside D cap B(Q, r)."""

    kappa: float
    R: float
    corkscrew: Callable

    def __post_init__(self):
        if not 0.0 < self.kappa <= 0.5:
            raise ConstructionError("kappa must lie in (0, 1/2]")
        if self.R <= 0.0:
            raise ConstructionError("R must be positive")


@dataclass(frozen=True)
class HalfDisk:
    """Upper half-disk {|x| < radius, x_2 > 0}; boundary point of interest 0."""

    radius: float

    @property
    def d(self) -> int:
        return 2

    def outside(self, x: np.ndarray) -> np.ndarray:
        return (np.linalg.norm(x, axis=1) >= self.radius) | (x[:, 1] <= 0.0)

    def strictly_outside(self, x: np.ndarray) -> np.ndarray:
        return (np.linalg.norm(x, axis=1) > self.radius) | (x[:, 1] < 0.0)

    def contains(self, x: np.ndarray) -> np.ndarray:
        return ~self.outside(x)


def shell_probes_1d(R: float, side_of: float = 0.0) -> list:
    """Eight one-sided probes outside [-R, R] around side_of.

    Three dyadic shells plus the far tail beyond 8R on each side; the tail
    replaces ever-thinner shells whose hit counts would be too noisy.
    """
    datas = []
    bands = [(1.0, 2.0), (2.0, 4.0), (4.0, 8.0), (8.0, math.inf)]
    for lo_m, hi_m in bands:
        lo, hi = R * lo_m, R * hi_m

        def right(x, lo=lo, hi=hi):
            y = x[:, 0] - side_of
            return ((y >= lo) & (y < hi)).astype(float)

        def left(x, lo=lo, hi=hi):
            y = x[:, 0] - side_of
            return ((y <= -lo) & (y > -hi)).astype(float)

        datas.append(right)
        datas.append(left)
    return datas


def sector_probes_2d(R: float) -> list:
    """Eight angular-sector indicators of the annulus [R, 4R)."""
    datas = []
    for k in range(8):
        a, b = k * math.pi / 4.0 - math.pi, (k + 1) * math.pi / 4.0 - math.pi

        def sector(x, a=a, b=b):
            rad = np.linalg.norm(x, axis=1)
            th = np.arctan2(x[:, 1], x[:, 0])
            return ((rad >= R) & (rad < 4.0 * R) & (th >= a) & (th < b)).astype(float)

        datas.append(sector)
    return datas


def _family_values(phi, domain, grid, datas, cfg: PathConfig):
    """Per-path data values for every (start, probe): shape (m, paths, K).

    NaN marks censored paths.  One simulation per start point serves the
    whole probe family, and path ids restart at zero for each start, so
    every grid point sees identical driving noise (common random numbers).
    Ratios of the resulting means are far less noisy than with independent
    paths, while each mean stays an unbiased standalone estimate.
    """
    grid = _as_points(grid, domain.d)
    m, n = grid.shape[0], cfg.paths
    vals = np.full((m, n, len(datas)), np.nan)
    censored = 0
    for i in range(m):
        starts = np.tile(grid[i], (n, 1))
        parts = _run_batches(phi, domain, starts, cfg)
        tau = np.concatenate([p[0] for p in parts])
        pos = np.concatenate([p[1] for p in parts])
        ok = ~np.isnan(tau)
        for k, data in enumerate(datas):
            vals[i, ok, k] = data(pos[ok])
        censored += int((~ok).sum())
    return vals, censored


def _family_means(vals: np.ndarray, n_use: int):
    sub = vals[:, :n_use, :]
    with np.errstate(invalid="ignore"):
        means = np.nanmean(sub, axis=1)
        stds = np.nanstd(sub, axis=1, ddof=1)
    counts = np.sum(~np.isnan(sub[:, :, 0]), axis=1)
    ses = stds / np.sqrt(np.maximum(counts, 1))[:, None]
    return means, ses


def mc_harmonic(phi, d: int, probe: HarmonicProbe, cfg: PathConfig) -> list:
    """E_x[data(X_tau)] with std errors, one McEstimate per grid point."""
    if d != probe.domain.d:
        raise EvaluationDomainError("dimension does not match the probe domain")
    vals, _ = _family_values(phi, probe.domain, probe.grid, [probe.boundary_data], cfg)
    out = []
    for i in range(vals.shape[0]):
        v = vals[i, :, 0]
        out.append(McEstimate.from_values(v[~np.isnan(v)], cfg.seed))
    return out


def _sup_inf_ratio(means: np.ndarray, idx) -> float:
    sel = means[idx, :]
    lo = sel.min(axis=0)
    hi = sel.max(axis=0)
    if np.any(lo <= 0.0):
        return math.inf
    return float(np.max(hi / lo))


@dataclass(frozen=True)
class HarnackReport:
    ratio: float
    ratio_paths_refined: float
    ratio_grid_refined: float
    delta_paths: float
    delta_grid: float
    censored: int
    passed: bool

    @property
    def refinement_delta(self) -> float:
        return max(self.delta_paths, self.delta_grid)


def harnack_ratio(
    phi: CompleteBernsteinFunction,
    d: int,
    r: float,
    cfg: PathConfig,
    data_family=None,
    stability_tol: float = 0.2,
) -> HarnackReport:
    """Measured sup/inf ratio over B(0, r) for probes harmonic in B(0, 17r).

    cfg.paths is the base path count per start; the simulation runs 4x that
    so the paths-refined and grid-refined ratios come from the same paths.
    The probe family defaults to eight dyadic shells (d = 1) or eight
    annular sectors (d = 2), all supported outside the harmonicity ball.
    """
    big_r = 17.0 * r
    domain = Ball(center=(0.0,) * d, radius=big_r)
    if data_family is None:
        data_family = shell_probes_1d(big_r) if d == 1 else sector_probes_2d(big_r)
    fine = np.linspace(-0.75 * r, 0.75 * r, 13)
    if d == 1:
        grid = fine[:, None]
    else:
        grid = np.zeros((13, d))
        grid[:, 0] = fine
    run_cfg = scaled_config(
        phi, big_r, 4 * cfg.paths, cfg.seed,
        epsilon=cfg.epsilon, method=cfg.method,
        batch_size=cfg.batch_size, threads=cfg.threads,
    )
    vals, censored = _family_values(phi, domain, grid, data_family, run_cfg)
    coarse_idx = np.arange(0, 13, 2)
    fine_idx = np.arange(13)
    means_base, _ = _family_means(vals, cfg.paths)
    means_full, _ = _family_means(vals, 4 * cfg.paths)
    r_base = _sup_inf_ratio(means_base, coarse_idx)
    r_paths = _sup_inf_ratio(means_full, coarse_idx)
    r_grid = _sup_inf_ratio(means_base, fine_idx)
    d_paths = abs(r_paths - r_base) / r_base if math.isfinite(r_base) else math.inf
    d_grid = abs(r_grid - r_base) / r_base if math.isfinite(r_base) else math.inf
    passed = (
        math.isfinite(r_base)
        and math.isfinite(r_paths)
        and math.isfinite(r_grid)
        and max(d_paths, d_grid) < stability_tol
    )
    return HarnackReport(
        ratio=r_base,
        ratio_paths_refined=r_paths,
        ratio_grid_refined=r_grid,
        delta_paths=d_paths,
        delta_grid=d_grid,
        censored=censored,
        passed=passed,
    )


@dataclass(frozen=True)
class CarlesonReport:
    floor: float
    floor_sigma: float
    inconclusive: bool
    passed: bool
    corkscrew_value: float


def carleson_check(
    phi: CompleteBernsteinFunction,
    interval: Interval,
    Q: float,
    r: float,
    cfg: PathConfig,
    fatness: FatnessSpec | None = None,
) -> CarlesonReport:
    """Floor of u(A_r(Q))/u(x) over x near Q, for data vanishing on D^c near Q.

    D is the interval, Q one of its endpoints.  Probes vanish on D^c
    intersected with B(Q, 2r): dyadic shells outside Q beyond distance 2r,
    the deepest extended to a full tail so its hit count stays usable.
    Wide confidence intervals (tiny r or few paths) yield
    inconclusive=True rather than a failure.
    """
    if not (Q == interval.lo or Q == interval.hi):
        raise EvaluationDomainError("Q must be an endpoint of the interval")
    inward = 1.0 if Q == interval.lo else -1.0
    if fatness is None:
        fatness = FatnessSpec(kappa=0.5, R=(interval.hi - interval.lo) / 2.0,
                              corkscrew=lambda q, rr: q + inward * rr / 2.0)
    a_pt = fatness.corkscrew(Q, r)

    datas = []
    for lo_m, hi_m in [(2.0, 4.0), (4.0, 8.0), (8.0, 16.0), (16.0, math.inf)]:
        lo, hi = r * lo_m, r * hi_m

        def shell(x, lo=lo, hi=hi):
            y = inward * (x[:, 0] - Q)
            return ((y <= -lo) & (y > -hi)).astype(float)

        datas.append(shell)

    xs = Q + inward * np.linspace(r / 6.0, r, 6)
    grid = np.concatenate([xs, [a_pt]])[:, None]
    run_cfg = scaled_config(
        phi, r, cfg.paths, cfg.seed, step_frac=1e-2,
        epsilon=cfg.epsilon, method=cfg.method,
        batch_size=cfg.batch_size, threads=cfg.threads,
    )
    vals, _ = _family_values(phi, interval, grid, datas, run_cfg)
    means, ses = _family_means(vals, cfg.paths)
    u_a, se_a = means[-1, :], ses[-1, :]
    u_x, se_x = means[:-1, :], ses[:-1, :]
    if np.any(u_x <= 0.0) or np.any(u_a <= 0.0):
        return CarlesonReport(0.0, math.nan, True, False, float(a_pt))
    ratios = u_a[None, :] / u_x
    rel_sig = np.sqrt((se_a[None, :] / u_a[None, :]) ** 2 + (se_x / u_x) ** 2)
    floor_idx = np.unravel_index(np.argmin(ratios), ratios.shape)
    floor = float(ratios[floor_idx])
    sigma = float(floor * rel_sig[floor_idx])
    inconclusive = bool(np.any(rel_sig > 1.0 / 3.0))
    passed = (not inconclusive) and floor - 3.0 * sigma > 0.0
    return CarlesonReport(floor, sigma, inconclusive, passed, float(a_pt))


@dataclass(frozen=True)
class BhpReport:
    spread: float
    spread_paths_refined: float
    delta_paths: float
    censored: int
    passed: bool

    @property
    def refinement_delta(self) -> float:
        return self.delta_paths


def _bhp_from_means(means: np.ndarray) -> float:
    # column 0 is u, column 1 is v; last row is the corkscrew point
    u_a, v_a = means[-1, 0], means[-1, 1]
    u_x, v_x = means[:-1, 0], means[:-1, 1]
    if min(u_a, v_a) <= 0.0 or np.any(u_x <= 0.0) or np.any(v_x <= 0.0):
        return math.inf
    ratio = (u_x / v_x) * (v_a / u_a)
    return float(ratio.max() / ratio.min())


def bhp_ratio_check(
    phi: CompleteBernsteinFunction,
    d: int,
    r: float,
    cfg: PathConfig,
    domain: str = "interval",
    probes=None,
    stability_tol: float = 0.2,
) -> BhpReport:
    """Spread of (u(x)/v(x)) * (v(A)/u(A)) over x in D near the boundary point.

    The interval case takes D = (0, inf) localised to (0, 2r) with Q = 0;
    the halfdisk case takes the upper half-plane localised to the upper
    half-disk of radius 2r.  Default probes are indicators of [2r, 8r) and
    [8r, 32r) on the inward axis, vanishing on D^c near Q as the boundary
    Harnack principle requires.  cfg.paths is the base count; 4x runs and
    the paths-refined spread reuses the same simulation.
    """
    if d == 1 and domain == "interval":
        sim_domain = Interval(0.0, 2.0 * r)

        def u_data(x):
            y = x[:, 0]
            return ((y >= 2.0 * r) & (y < 8.0 * r)).astype(float)

        def v_data(x):
            y = x[:, 0]
            return ((y >= 8.0 * r) & (y < 32.0 * r)).astype(float)

        xs = np.linspace(r / 12.0, r / 2.0, 6)
        grid = np.concatenate([xs, [r / 2.0]])[:, None]
    elif d == 2 and domain == "halfdisk":
        sim_domain = HalfDisk(radius=2.0 * r)

        def u_data(x):
            rad = np.linalg.norm(x, axis=1)
            return ((rad >= 2.0 * r) & (rad < 8.0 * r) & (x[:, 1] > 0.0)).astype(float)

        def v_data(x):
            rad = np.linalg.norm(x, axis=1)
            return ((rad >= 8.0 * r) & (rad < 32.0 * r) & (x[:, 1] > 0.0)).astype(float)

        heights = np.linspace(r / 12.0, r / 2.0, 6)
        grid = np.zeros((7, 2))
        grid[:6, 1] = heights
        grid[6, 1] = r / 2.0
    else:
        raise EvaluationDomainError("domain must be 'interval' (d=1) or 'halfdisk' (d=2)")
    if probes is not None:
        u_data, v_data = probes
    run_cfg = scaled_config(
        phi, 2.0 * r, 4 * cfg.paths, cfg.seed,
        epsilon=cfg.epsilon, method=cfg.method,
        batch_size=cfg.batch_size, threads=cfg.threads,
    )
    vals, censored = _family_values(phi, sim_domain, grid, [u_data, v_data], run_cfg)
    means_base, _ = _family_means(vals, cfg.paths)
    means_full, _ = _family_means(vals, 4 * cfg.paths)
    s_base = _bhp_from_means(means_base)
    s_full = _bhp_from_means(means_full)
    delta = abs(s_full - s_base) / s_base if math.isfinite(s_base) else math.inf
    passed = math.isfinite(s_base) and math.isfinite(s_full) and delta < stability_tol
    return BhpReport(
        spread=s_base,
        spread_paths_refined=s_full,
        delta_paths=delta,
        censored=censored,
        passed=passed,
    )
