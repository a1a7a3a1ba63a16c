"""Path simulation for subordinate Brownian motions and exit-time checks.

The process is X_t = B_{S_t}: run the subordinator S on a deterministic time
skeleton and move the Brownian scaffold by N(0, 2 dS) per increment.  Two
increment samplers are available:

* exact: the stable kind only, via Kanter's representation of the positive
  stable law (one uniform pair per step);
* compound: jumps above the truncation level epsilon arrive at rate
  mu(eps, inf), sizes come from tabulated quantiles of the normalised tail,
  and the mean of the discarded small jumps is restored as a deterministic
  drift int_0^eps s mu(s) ds per unit time.  The neglected small-jump
  variance is the documented bias, checked by epsilon-refinement.

Every random draw is addressed by (seed, channel, step, path id) through a
counter-based generator, so estimates are bit-identical for a given seed and
config no matter how paths are batched or how many worker threads run.
Estimators reduce over arrays assembled in path order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np
from scipy.special import gamma as gamma_fn

from . import rng
from .bernstein import CompleteBernsteinFunction, levy_tail
from .errors import ConstructionError, EvaluationDomainError
from .ladder import renewal_function_V

__all__ = [
    "PathConfig",
    "McEstimate",
    "ExitSample",
    "Interval",
    "Ball",
    "scaled_config",
    "sample_subordinator_increment",
    "sample_exit",
    "simulate_exits",
    "exceedance_probability",
    "ExceedanceReport",
    "exit_time_bounds_check",
    "ExitTimeBoundsReport",
    "exit_distribution_histogram",
    "ExitHistogram",
    "hitting_before_exit",
    "epsilon_refinement_check",
]

_METHODS = ("auto", "exact", "compound")


@dataclass(frozen=True)
class PathConfig:
    """Simulation parameters; validated on construction."""

    paths: int
    seed: int
    horizon: float
    step: float
    epsilon: float = 1e-4
    method: str = "auto"
    batch_size: int = 16384
    threads: int = 0

    def __post_init__(self):
        if self.paths <= 0:
            raise ConstructionError("paths must be positive")
        if self.step <= 0.0 or self.horizon <= 0.0:
            raise ConstructionError("step and horizon must be positive")
        if self.step > self.horizon:
            raise ConstructionError("step must not exceed horizon")
        if not 0.0 < self.epsilon < 1.0:
            raise ConstructionError("epsilon must lie in (0, 1)")
        if self.method not in _METHODS:
            raise ConstructionError(f"method must be one of {_METHODS}")
        if self.batch_size <= 0:
            raise ConstructionError("batch_size must be positive")

    def resolved_threads(self) -> int:
        if self.threads > 0:
            return self.threads
        env = os.environ.get("SBM_THREADS", "")
        return max(int(env), 1) if env.isdigit() else 1


def scaled_config(
    phi: CompleteBernsteinFunction,
    r: float,
    paths: int,
    seed: int,
    step_frac: float = 1e-3,
    horizon_mult: float = 50.0,
    **kw,
) -> PathConfig:
    """Config with step and horizon tied to the exit-time scale 1/phi(r^-2).

    The skeleton step is step_frac of the target tau scale and the horizon a
    large multiple of it, keeping the censoring rate far below 1%.
    """
    scale = 1.0 / float(phi(r**-2))
    return PathConfig(
        paths=paths, seed=seed, horizon=horizon_mult * scale, step=step_frac * scale, **kw
    )


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    n: int
    seed: int

    @staticmethod
    def from_values(vals: np.ndarray, seed: int) -> "McEstimate":
        vals = np.asarray(vals, dtype=float)
        n = vals.size
        if n == 0:
            return McEstimate(math.nan, math.nan, 0, seed)
        se = float(vals.std(ddof=1) / math.sqrt(n)) if n > 1 else math.inf
        return McEstimate(float(vals.mean()), se, n, seed)


@dataclass(frozen=True)
class ExitSample:
    """Batch of first-exit samples (arrays indexed by surviving path).

    ``exited_by_jump`` marks exits at a compound-Poisson jump epoch; the
    exact sampler cannot split an increment into jump and drift parts, so
    there the flag is inferred from strict overshoot past the closed
    boundary.  Censored paths (no exit before the horizon) are excluded
    from the arrays and only counted.
    """

    tau: np.ndarray
    exit_position: np.ndarray
    exited_by_jump: np.ndarray
    censored: int
    requested: int

    def mean_tau(self, seed: int = 0) -> McEstimate:
        return McEstimate.from_values(self.tau, seed)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ConstructionError("interval endpoints must be ordered")

    @property
    def d(self) -> int:
        return 1

    def outside(self, x: np.ndarray) -> np.ndarray:
        x0 = x[:, 0]
        return (x0 <= self.lo) | (x0 >= self.hi)

    def strictly_outside(self, x: np.ndarray) -> np.ndarray:
        x0 = x[:, 0]
        return (x0 < self.lo) | (x0 > self.hi)

    def contains(self, x: np.ndarray) -> np.ndarray:
        x0 = x[:, 0]
        return (x0 > self.lo) & (x0 < self.hi)


@dataclass(frozen=True)
class Ball:
    center: tuple
    radius: float

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ConstructionError("ball radius must be positive")

    @property
    def d(self) -> int:
        return len(self.center)

    def _dist(self, x: np.ndarray) -> np.ndarray:
        return np.linalg.norm(x - np.asarray(self.center)[None, :], axis=1)

    def outside(self, x: np.ndarray) -> np.ndarray:
        return self._dist(x) >= self.radius

    def strictly_outside(self, x: np.ndarray) -> np.ndarray:
        return self._dist(x) > self.radius

    def contains(self, x: np.ndarray) -> np.ndarray:
        return self._dist(x) < self.radius


def _as_points(x0, d: int) -> np.ndarray:
    arr = np.atleast_2d(np.asarray(x0, dtype=float))
    if arr.shape[1] != d:
        arr = arr.reshape(-1, d)
    return arr


# ---------------------------------------------------------------------------
# increment samplers


def _kanter(rho: float, u: np.ndarray, e: np.ndarray) -> np.ndarray:
    """Positive rho-stable variate with E[exp(-lam S)] = exp(-lam^rho)."""
    th = math.pi * u
    a = (np.sin(rho * th) ** rho * np.sin((1.0 - rho) * th) ** (1.0 - rho) / np.sin(th)) ** (
        1.0 / (1.0 - rho)
    )
    return (a / e) ** ((1.0 - rho) / rho)


@lru_cache(maxsize=64)
def _compound_tables(phi: CompleteBernsteinFunction, epsilon: float):
    """Rate, small-jump drift, and tail-quantile table for one (phi, eps).

    The quantile table stores log x against log of the normalised tail
    u = mu(x, inf)/mu(eps, inf) on 1024 knots over twelve decades; draws
    deeper than the table continue along the locally measured power slope.
    """
    if phi.killing > 0.0:
        raise ConstructionError("compound sampler needs an unkilled exponent")
    eps = float(epsilon)
    if phi.kind == "stable":
        e = phi.alpha_param / 2.0
        rate = eps**-e / gamma_fn(1.0 - e)
        # int_0^eps s mu(s) ds for mu = e/Gamma(1-e) s^{-1-e}
        drift = e / gamma_fn(1.0 - e) * eps ** (1.0 - e) / (1.0 - e)
        inv_exp = -1.0 / e
        return rate, drift, None, None, inv_exp

    x = np.geomspace(eps, eps * 1e12, 1024)
    tail = np.asarray(levy_tail(phi, x), dtype=float)
    rate = float(tail[0])
    if not np.all(tail > 0.0):
        cut = int(np.argmax(tail <= 0.0))
        x, tail = x[: max(cut, 8)], tail[: max(cut, 8)]
    tail = np.minimum.accumulate(tail)
    keep = np.concatenate([[True], np.diff(tail) < 0.0])
    log_x = np.log(x[keep])
    log_u = np.log(tail[keep] / rate)

    # drift: int_0^eps s mu = int_0^eps tail - eps*tail(eps), head integral
    # by log-space panels plus a power continuation below the lowest node
    xg, wg = np.polynomial.legendre.leggauss(10)
    edges = np.linspace(math.log(eps) - 30.0, math.log(eps), 121)
    half = np.diff(edges) / 2.0
    mid = (edges[:-1] + edges[1:]) / 2.0
    z = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
    w = (half[:, None] * wg[None, :]).ravel()
    s = np.exp(z)
    tail_s = np.asarray(levy_tail(phi, s), dtype=float)
    head_int = float((tail_s * s) @ w)
    s_lo = math.exp(edges[0])
    t_lo = float(levy_tail(phi, s_lo))
    t_lo2 = float(levy_tail(phi, s_lo * math.e**2))
    q = max(math.log(t_lo / max(t_lo2, 1e-300)) / 2.0, 0.0)
    head_int += t_lo * s_lo / max(1.0 - q, 1e-2) if q < 1.0 else 0.0
    drift = head_int - eps * rate
    return rate, max(drift, 0.0), log_u, log_x, None


def _jump_sizes(tables, u: np.ndarray, epsilon: float, phi) -> np.ndarray:
    rate, _, log_u, log_x, inv_exp = tables
    if inv_exp is not None:
        return epsilon * u**inv_exp
    lu = np.log(u)
    # knots run from log 1 = 0 downwards; interp wants increasing x
    out = np.interp(lu, log_u[::-1], log_x[::-1])
    deep = lu < log_u[-1]
    if np.any(deep):
        slope = (log_x[-1] - log_x[-9]) / (log_u[-1] - log_u[-9])
        out = np.where(deep, log_x[-1] + slope * (lu - log_u[-1]), out)
    return np.exp(out)


def _poisson_cdf(rate: float) -> np.ndarray:
    terms = [math.exp(-rate)]
    while sum(terms) < 1.0 - 1e-15 and len(terms) < 400:
        terms.append(terms[-1] * rate / len(terms))
    return np.cumsum(terms)


def _resolve_method(phi: CompleteBernsteinFunction, cfg: PathConfig) -> str:
    method = cfg.method
    if method == "auto":
        method = "exact" if phi.kind == "stable" else "compound"
    if method == "exact" and phi.kind != "stable":
        raise ConstructionError("exact increments are available for the stable kind only")
    if phi.killing > 0.0:
        raise ConstructionError("path sampling needs an unkilled exponent")
    return method


def sample_subordinator_increment(
    phi: CompleteBernsteinFunction, dt: float, cfg: PathConfig, step: int = 0
) -> np.ndarray:
    """cfg.paths independent samples of S_{t+dt} - S_t.

    ``step`` addresses the RNG stream, so successive skeleton increments of
    the same path come from calls with consecutive step indices.
    """
    if dt < 0.0:
        raise EvaluationDomainError("dt must be nonnegative")
    method = _resolve_method(phi, cfg)
    ids = np.arange(cfg.paths, dtype=np.uint64)
    if dt == 0.0:
        return np.zeros(cfg.paths)
    stream = rng.PhiloxStream(cfg.seed)
    if method == "exact":
        rho = phi.alpha_param / 2.0
        u, w = stream.uniform_pair(rng.CH_SUB, step, ids)
        return dt ** (1.0 / rho) * _kanter(rho, u, -np.log(w))
    tables = _compound_tables(phi, cfg.epsilon)
    rate, drift = tables[0], tables[1]
    cdf = _poisson_cdf(rate * dt)
    u0, _ = stream.uniform_pair(rng.CH_SUB, step, ids)
    counts = np.searchsorted(cdf, u0)
    out = np.full(cfg.paths, drift * dt)
    for slot in range(int(counts.max()) if counts.size else 0):
        has = counts > slot
        ua, _ = stream.uniform_pair(rng.CH_JUMP_BASE + 2 * slot, step, ids[has])
        out[has] += _jump_sizes(tables, ua, cfg.epsilon, phi)
    return out


# ---------------------------------------------------------------------------
# exit simulation engine


def _simulate_batch(phi, domain, starts, ids, cfg, method, observer=None):
    """March one batch of paths to exit; returns per-path records.

    ``starts`` has one row per path.  ``observer(x, ids_alive)`` is called
    after every position update (jump epochs and grid epochs) and may be
    used to track hitting times on the same paths.
    """
    stream = rng.PhiloxStream(cfg.seed)
    d = domain.d
    n = ids.size
    x = np.array(starts, dtype=float, copy=True)
    tau = np.full(n, np.nan)
    pos = np.full((n, d), np.nan)
    byj = np.zeros(n, dtype=bool)
    alive = ~domain.outside(x)
    if not np.all(alive):
        done = ~alive
        tau[done] = 0.0
        pos[done] = x[done]
    nsteps = int(math.ceil(cfg.horizon / cfg.step))
    if method == "exact":
        rho = phi.alpha_param / 2.0
        dt_pow = cfg.step ** (1.0 / rho)
    else:
        tables = _compound_tables(phi, cfg.epsilon)
        rate, drift = tables[0], tables[1]
        cdf = _poisson_cdf(rate * cfg.step)
        sigma_drift = math.sqrt(2.0 * drift * cfg.step)

    def settle(local_idx, t_exit, jump_flag):
        tau[local_idx] = t_exit
        pos[local_idx] = x[local_idx]
        byj[local_idx] = jump_flag
        alive[local_idx] = False

    for k in range(nsteps):
        live = np.nonzero(alive)[0]
        if live.size == 0:
            break
        pid = ids[live]
        if method == "exact":
            u, w = stream.uniform_pair(rng.CH_SUB, k, pid)
            ds = dt_pow * _kanter(rho, u, -np.log(w))
            z = stream.normals(k, pid, d)
            x[live] += np.sqrt(2.0 * ds)[:, None] * z
            if observer is not None:
                observer(x, live)
            out = domain.outside(x[live])
            if out.any():
                hit = live[out]
                strict = domain.strictly_outside(x[hit])
                tau[hit] = (k + 1) * cfg.step
                pos[hit] = x[hit]
                byj[hit] = strict
                alive[hit] = False
        else:
            u0, _ = stream.uniform_pair(rng.CH_SUB, k, pid)
            counts = np.searchsorted(cdf, u0)
            kmax = int(counts.max()) if counts.size else 0
            for slot in range(kmax):
                live_s = np.nonzero(alive)[0]
                sel = live_s[counts[np.searchsorted(live, live_s)] > slot]
                if sel.size == 0:
                    continue
                pid_s = ids[sel]
                ua, _ = stream.uniform_pair(rng.CH_JUMP_BASE + 2 * slot, k, pid_s)
                sizes = _jump_sizes(tables, ua, cfg.epsilon, phi)
                zj = stream.normals(k, pid_s, d, base_channel=rng.CH_JUMP_BASE + 2 * slot + 1)
                x[sel] += np.sqrt(2.0 * sizes)[:, None] * zj
                if observer is not None:
                    observer(x, sel)
                out = domain.outside(x[sel])
                if out.any():
                    hit = sel[out]
                    frac = (slot + 1.0) / (counts[np.searchsorted(live, hit)] + 1.0)
                    settle(hit, k * cfg.step + cfg.step * frac, True)
            live2 = np.nonzero(alive)[0]
            if live2.size == 0:
                continue
            pid2 = ids[live2]
            z = stream.normals(k, pid2, d)
            x[live2] += sigma_drift * z
            if observer is not None:
                observer(x, live2)
            out = domain.outside(x[live2])
            if out.any():
                hit = live2[out]
                settle(hit, (k + 1) * cfg.step, False)
    return tau, pos, byj


def _run_batches(phi, domain, starts_all, cfg, observer_factory=None):
    method = _resolve_method(phi, cfg)
    n = starts_all.shape[0]
    edges = list(range(0, n, cfg.batch_size)) + [n]
    jobs = [(np.arange(lo, hi, dtype=np.uint64), starts_all[lo:hi]) for lo, hi in zip(edges[:-1], edges[1:])]

    def work(job):
        ids, st = job
        obs = observer_factory(ids) if observer_factory is not None else None
        res = _simulate_batch(phi, domain, st, ids, cfg, method, observer=None if obs is None else obs[0])
        return res if obs is None else (res, obs[1]())

    workers = cfg.resolved_threads()
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, jobs))
    else:
        results = [work(j) for j in jobs]
    return results


def simulate_exits(phi, domain, x0, cfg: PathConfig) -> ExitSample:
    """Exit samples for cfg.paths paths all started at x0."""
    d = domain.d
    start = _as_points(x0, d)[0]
    if bool(domain.strictly_outside(start[None, :])[0]):
        raise EvaluationDomainError("start point lies outside the domain")
    starts = np.tile(start, (cfg.paths, 1))
    parts = _run_batches(phi, domain, starts, cfg)
    tau = np.concatenate([p[0] for p in parts])
    pos = np.concatenate([p[1] for p in parts])
    byj = np.concatenate([p[2] for p in parts])
    ok = ~np.isnan(tau)
    return ExitSample(
        tau=tau[ok],
        exit_position=pos[ok],
        exited_by_jump=byj[ok],
        censored=int((~ok).sum()),
        requested=cfg.paths,
    )


def sample_exit(phi, d: int, domain, x0, cfg: PathConfig) -> ExitSample:
    """Spec-shaped wrapper; d must match the domain's dimension."""
    if d != domain.d:
        raise EvaluationDomainError("dimension does not match the domain")
    return simulate_exits(phi, domain, x0, cfg)


# ---------------------------------------------------------------------------
# checks built on the sampler


@dataclass(frozen=True)
class ExceedanceReport:
    estimate: McEstimate
    ratio: float
    t: float
    r: float


def exceedance_probability(phi, d: int, r: float, t: float, cfg: PathConfig) -> ExceedanceReport:
    """P(sup_{s <= t} |X_s - X_0| > r) with the check ratio estimate/(phi(r^-2) t).

    The supremum is evaluated on the skeleton epochs, a documented
    underestimate of the true running supremum.
    """
    if t < 0.0:
        raise EvaluationDomainError("t must be nonnegative")
    if t == 0.0:
        return ExceedanceReport(McEstimate(0.0, 0.0, cfg.paths, cfg.seed), 0.0, t, r)
    domain = Ball(center=(0.0,) * d, radius=r)
    run_cfg = replace(cfg, horizon=t, step=min(cfg.step, t))
    parts = _run_batches(phi, domain, np.zeros((cfg.paths, d)), run_cfg)
    tau = np.concatenate([p[0] for p in parts])
    exceed = (~np.isnan(tau)) & (tau <= t)
    est = McEstimate.from_values(exceed.astype(float), cfg.seed)
    ratio = est.mean / (float(phi(r**-2)) * t)
    return ExceedanceReport(est, float(ratio), t, r)


@dataclass(frozen=True)
class ExitTimeBoundsReport:
    r_grid: np.ndarray
    products: np.ndarray
    window: tuple
    offsets: np.ndarray
    offset_means: np.ndarray
    offset_ses: np.ndarray
    renewal_bounds: np.ndarray
    bound_ok: np.ndarray
    censored: int

    @property
    def window_positive(self) -> bool:
        return math.isfinite(self.window[1]) and self.window[0] > 0.0


def exit_time_bounds_check(
    phi,
    d: int,
    r_grid,
    cfg: PathConfig,
    offsets=(0.0, 0.5, 0.9),
    use_scaled_config: bool = True,
) -> ExitTimeBoundsReport:
    """Exit-time comparisons on centered balls B(0, r).

    For each r the product E_0[tau_B(0,r)] * phi(r^-2) must land in a
    positive window.  At starting offsets x = beta*r the mean must stay
    under the renewal-function bound 2 V(2r) V(r - |x|) plus three standard
    errors (the explicit factor 2 makes this an assertable inequality; the
    window constants are existence-only and therefore only reported).
    """
    r_grid = np.atleast_1d(np.asarray(r_grid, dtype=float))
    offsets = np.atleast_1d(np.asarray(offsets, dtype=float))
    if not np.any(offsets == 0.0):
        offsets = np.concatenate([[0.0], offsets])
    products = np.empty(r_grid.size)
    off_means = np.empty((r_grid.size, offsets.size))
    off_ses = np.empty_like(off_means)
    bounds = np.empty_like(off_means)
    censored = 0
    for i, r in enumerate(r_grid):
        run_cfg = (
            scaled_config(
                phi, r, cfg.paths, cfg.seed,
                epsilon=cfg.epsilon, method=cfg.method,
                batch_size=cfg.batch_size, threads=cfg.threads,
            )
            if use_scaled_config
            else cfg
        )
        domain = Ball(center=(0.0,) * d, radius=float(r))
        for j, beta in enumerate(offsets):
            x0 = np.zeros(d)
            x0[0] = beta * r
            sample = simulate_exits(phi, domain, x0, run_cfg)
            censored += sample.censored
            est = sample.mean_tau(cfg.seed)
            off_means[i, j] = est.mean
            off_ses[i, j] = est.std_error
            bounds[i, j] = 2.0 * float(renewal_function_V(phi, 2.0 * r)) * float(
                renewal_function_V(phi, r - abs(beta * r))
            )
            if beta == 0.0:
                products[i] = est.mean * float(phi(r**-2.0))
    ok = off_means <= bounds + 3.0 * off_ses
    return ExitTimeBoundsReport(
        r_grid=r_grid,
        products=products,
        window=(float(np.min(products)), float(np.max(products))),
        offsets=offsets,
        offset_means=off_means,
        offset_ses=off_ses,
        renewal_bounds=bounds,
        bound_ok=ok,
        censored=censored,
    )


@dataclass(frozen=True)
class ExitHistogram:
    edges: np.ndarray
    prob: np.ndarray
    density: np.ndarray
    n: int
    censored: int
    mass_left: float
    mass_right: float


def exit_distribution_histogram(
    phi, d: int, ball: Ball, x0, edges, cfg: PathConfig
) -> ExitHistogram:
    """Empirical exit-position histogram over radial bins |y - center|.

    ``prob`` is the per-bin exit probability, ``density`` divides by the bin
    width, giving the quantity comparable to a radial Poisson-kernel profile
    (for d = 1 the two boundary sides are folded together; their separate
    masses are reported for symmetry checks).
    """
    if d != ball.d:
        raise EvaluationDomainError("dimension does not match the ball")
    sample = simulate_exits(phi, ball, x0, cfg)
    edges = np.asarray(edges, dtype=float)
    dist = np.linalg.norm(sample.exit_position - np.asarray(ball.center)[None, :], axis=1)
    counts, _ = np.histogram(dist, bins=edges)
    n = sample.tau.size
    prob = counts / max(n, 1)
    width = np.diff(edges)
    side = sample.exit_position[:, 0] - ball.center[0]
    return ExitHistogram(
        edges=edges,
        prob=prob,
        density=prob / width,
        n=n,
        censored=sample.censored,
        mass_left=float(np.mean(side < 0.0)) if n else math.nan,
        mass_right=float(np.mean(side > 0.0)) if n else math.nan,
    )


def hitting_before_exit(phi, d: int, target, start, enclosing, cfg: PathConfig) -> McEstimate:
    """P_start(T_target < tau_enclosing), target checked at every epoch.

    ``target`` is an Interval/Ball inside the enclosing domain, or None for
    the empty set (probability exactly zero).  Monotone in the target on
    matched seeds: the trajectory of each path id is the same, so nested
    targets give nested hitting events.
    """
    if target is None:
        return McEstimate(0.0, 0.0, cfg.paths, cfg.seed)
    if d != enclosing.d:
        raise EvaluationDomainError("dimension does not match the enclosing domain")
    start_pt = _as_points(start, d)
    if bool(target.contains(start_pt)[0]):
        return McEstimate(1.0, 0.0, cfg.paths, cfg.seed)

    def factory(ids):
        hits = np.zeros(ids.size, dtype=bool)

        def observe(x, live_idx):
            inside = target.contains(x[live_idx])
            if inside.any():
                hits[live_idx[inside]] = True

        return observe, lambda: hits

    starts = np.tile(_as_points(start, d)[0], (cfg.paths, 1))
    parts = _run_batches(phi, enclosing, starts, cfg, observer_factory=factory)
    tau = np.concatenate([p[0][0] for p in parts])
    hits = np.concatenate([p[1] for p in parts])
    ok = ~np.isnan(tau) | hits
    return McEstimate.from_values(hits[ok].astype(float), cfg.seed)


def epsilon_refinement_check(phi, domain, x0, cfg: PathConfig) -> dict:
    """Mean exit time at epsilon and epsilon/2; delta must be < 3 combined SE."""
    a = simulate_exits(phi, domain, x0, cfg)
    b = simulate_exits(phi, domain, x0, replace(cfg, epsilon=cfg.epsilon / 2.0))
    ea, eb = a.mean_tau(cfg.seed), b.mean_tau(cfg.seed)
    combined = math.hypot(ea.std_error, eb.std_error)
    return {
        "mean": ea.mean,
        "mean_refined": eb.mean,
        "combined_se": combined,
        "delta": abs(ea.mean - eb.mean),
        "passed": abs(ea.mean - eb.mean) < 3.0 * combined,
    }
