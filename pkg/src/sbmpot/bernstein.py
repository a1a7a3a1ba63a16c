"""Catalog of complete Bernstein functions and their Levy data.

Every entry is the Laplace exponent phi of a (possibly killed) subordinator
with zero drift,

    phi(lam) = a + integral_0^inf (1 - exp(-lam*t)) mu(t) dt,

whose Levy density mu is completely monotone.  All catalog entries satisfy a
power-comparability profile at infinity: phi(lam) is comparable to
lam**(alpha/2) times a slowly varying factor on [1, inf), with alpha stored on
the object.

Evaluation accepts real positive or complex arguments (principal branches,
analytic off the negative real axis), which is what the contour-based Laplace
inversion in :mod:`sbmpot.densities` needs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import gamma as gamma_fn

from . import laplace
from .errors import ConstructionError, EvaluationDomainError, UnsupportedKindError

__all__ = [
    "CompleteBernsteinFunction",
    "stable",
    "relativistic_stable",
    "sum_of_stables",
    "log_perturbed_up",
    "log_perturbed_down",
    "geometric_like",
    "conjugate",
    "killed_shift",
    "eval_phi",
    "eval_levy_density",
    "levy_tail",
    "check_levy_shift_bound",
    "reg_var_profile",
    "RegVarProfile",
    "check_complete_monotonicity",
    "check_bernstein",
    "MonotonicityReport",
    "phi_from_json",
    "phi_to_json",
    "default_catalog",
]

_KINDS = (
    "stable",
    "relativistic",
    "sum",
    "log_up",
    "log_down",
    "geometric_example",
    "conjugate",
    "killed_shift",
)


@dataclass(frozen=True)
class CompleteBernsteinFunction:
    """A catalog Laplace exponent.

    ``alpha`` is the comparability index at infinity (phi(lam) comparable to
    lam**(alpha/2) up to a slowly varying factor).  For the geometric-series
    example the construction parameter ``alpha_param`` differs from the
    profile index: the Stieltjes transform flips it to ``2 - alpha_param``.
    ``killing`` is phi(0+), nonzero only for entries whose subordinator is
    killed.  Drift is zero for every entry, by construction.
    """

    kind: str
    alpha: float
    alpha_param: float
    m: float = 0.0
    beta: float = 0.0
    log_exponent: float = 0.0
    n_terms: int = 0
    killing: float = 0.0
    shift: float = 0.0
    inner: "CompleteBernsteinFunction | None" = None

    # ---- evaluation ----------------------------------------------------

    def __call__(self, lam):
        scalar = np.ndim(lam) == 0
        x = np.asarray(lam)
        if not np.iscomplexobj(x):
            x = np.asarray(lam, dtype=float)
            if np.any(x < 0.0):
                raise EvaluationDomainError("Laplace exponent needs lam >= 0")
        val = self._eval(x)
        return complex(val) if scalar and np.iscomplexobj(val) else (float(val) if scalar else val)

    def _eval(self, x):
        k = self.kind
        if k == "stable":
            return x ** (self.alpha_param / 2.0)
        if k == "relativistic":
            theta = self.m ** (2.0 / self.alpha_param)
            # expm1/log1p keeps precision near 0, where the direct formula
            # cancels catastrophically; complex arguments (inversion contours
            # scale them towards 0 for large t) need the same care
            if np.iscomplexobj(x):
                return self.m * _cexpm1((self.alpha_param / 2.0) * _clog1p(x / theta))
            return self.m * np.expm1((self.alpha_param / 2.0) * np.log1p(x / theta))
        if k == "sum":
            return x ** (self.alpha_param / 2.0) + x ** (self.beta / 2.0)
        if k == "log_up":
            lg = _clog1p(x) if np.iscomplexobj(x) else np.log1p(x)
            return x ** (self.alpha_param / 2.0) * lg ** (self.log_exponent / 2.0)
        if k == "log_down":
            lg = _clog1p(x) if np.iscomplexobj(x) else np.log1p(x)
            with np.errstate(divide="ignore"):
                return x ** (self.alpha_param / 2.0) * lg ** (-self.beta / 2.0)
        if k == "geometric_example":
            w, b = _geometric_terms(self.alpha_param, self.n_terms)
            return 1.0 / np.sum(w / (x[..., None] + b), axis=-1)
        if k == "conjugate":
            return x / self.inner._eval(x)
        if k == "killed_shift":
            return self.inner._eval(x) + self.shift
        raise UnsupportedKindError(f"unknown kind {k!r}")

    # ---- structural data -----------------------------------------------

    @property
    def drift(self) -> float:
        return 0.0

    @property
    def small_exponent(self) -> float | None:
        """Known power behaviour of phi at 0+, or None when unavailable."""
        k = self.kind
        if k == "stable":
            return self.alpha_param / 2.0
        if k == "relativistic":
            return 1.0
        if k == "sum":
            return self.beta / 2.0
        if k == "log_up":
            # log(1+lam) ~ lam at 0, so the log factor adds a full power
            return (self.alpha_param + self.log_exponent) / 2.0
        if k == "log_down":
            return (self.alpha_param - self.beta) / 2.0
        if k == "geometric_example" or self.killing > 0.0:
            return 0.0
        if k == "conjugate":
            e = self.inner.small_exponent
            return None if e is None else 1.0 - e
        if k == "killed_shift":
            return 0.0 if self.shift > 0.0 else self.inner.small_exponent
        return None

    def levy_density_closed(self, t) -> np.ndarray | None:
        """Closed-form Levy density, or None when only numeric is available."""
        t = np.asarray(t, dtype=float)
        k = self.kind
        if k == "stable":
            return _stable_levy(self.alpha_param, t)
        if k == "relativistic":
            theta = self.m ** (2.0 / self.alpha_param)
            return _stable_levy(self.alpha_param, t) * np.exp(-theta * t)
        if k == "sum":
            return _stable_levy(self.alpha_param, t) + _stable_levy(self.beta, t)
        if k == "killed_shift":
            return self.inner.levy_density_closed(t)
        return None

    def levy_tail_closed(self, t) -> np.ndarray | None:
        t = np.asarray(t, dtype=float)
        k = self.kind
        if k == "stable":
            return t ** (-self.alpha_param / 2.0) / gamma_fn(1.0 - self.alpha_param / 2.0)
        if k == "sum":
            return t ** (-self.alpha_param / 2.0) / gamma_fn(1.0 - self.alpha_param / 2.0) + t ** (
                -self.beta / 2.0
            ) / gamma_fn(1.0 - self.beta / 2.0)
        if k == "killed_shift":
            return self.inner.levy_tail_closed(t)
        return None

    def label(self) -> str:
        k = self.kind
        if k == "stable":
            return f"stable(alpha={self.alpha_param:g})"
        if k == "relativistic":
            return f"relativistic(alpha={self.alpha_param:g}, m={self.m:g})"
        if k == "sum":
            return f"sum(alpha={self.alpha_param:g}, beta={self.beta:g})"
        if k == "log_up":
            return f"log_up(alpha={self.alpha_param:g}, gamma={self.log_exponent:g})"
        if k == "log_down":
            return f"log_down(alpha={self.alpha_param:g}, beta={self.beta:g})"
        if k == "geometric_example":
            return f"geometric_example(alpha={self.alpha_param:g}, n={self.n_terms})"
        if k == "conjugate":
            return f"conjugate[{self.inner.label()}]"
        if k == "killed_shift":
            return f"killed_shift[{self.inner.label()}, a={self.shift:g}]"
        return k


def _stable_levy(alpha: float, t):
    c = (alpha / 2.0) / gamma_fn(1.0 - alpha / 2.0)
    return c * t ** (-1.0 - alpha / 2.0)


def _clog1p(z):
    """log(1+z) for complex arrays without the tiny-|z| cancellation."""
    z = np.asarray(z)
    small = np.abs(z) < 1e-3
    zs = np.where(small, z, 0.0)
    # 6-term alternating series; error below |z|^7 at the cutoff
    series = zs * (1 + zs * (-1 / 2 + zs * (1 / 3 + zs * (-1 / 4 + zs * (1 / 5 - zs / 6)))))
    return np.where(small, series, np.log(np.where(small, 1.0, 1.0 + z)))


def _cexpm1(w):
    """exp(w)-1 for complex arrays without the tiny-|w| cancellation."""
    w = np.asarray(w)
    small = np.abs(w) < 1e-3
    ws = np.where(small, w, 0.0)
    series = ws * (1 + ws * (1 / 2 + ws * (1 / 6 + ws * (1 / 24 + ws * (1 / 120 + ws / 720)))))
    return np.where(small, series, np.exp(np.where(small, 0.0, w)) - 1.0)


_GEOM_CACHE: dict[tuple[float, int], tuple[np.ndarray, np.ndarray]] = {}


def _geometric_terms(alpha_param: float, n_terms: int):
    key = (alpha_param, n_terms)
    if key not in _GEOM_CACHE:
        n = np.arange(1, n_terms + 1, dtype=float)
        _GEOM_CACHE[key] = (2.0 ** n, 2.0 ** (2.0 * n / alpha_param))
    return _GEOM_CACHE[key]


# ---- constructors -------------------------------------------------------


def stable(alpha: float) -> CompleteBernsteinFunction:
    """phi(lam) = lam**(alpha/2); the rotationally symmetric alpha-stable case."""
    # alpha = 2 would be pure drift, which the zero-drift catalog excludes
    if not 0.0 < alpha < 2.0:
        raise ConstructionError("stable index must lie in (0, 2)")
    return CompleteBernsteinFunction(kind="stable", alpha=alpha, alpha_param=alpha)


def relativistic_stable(alpha: float, m: float) -> CompleteBernsteinFunction:
    """phi(lam) = (lam + m**(2/alpha))**(alpha/2) - m."""
    if not 0.0 < alpha < 2.0:
        raise ConstructionError("relativistic index must lie in (0, 2)")
    if m < 0.0:
        raise ConstructionError("mass must be nonnegative")
    if m == 0.0:
        return stable(alpha)
    return CompleteBernsteinFunction(kind="relativistic", alpha=alpha, alpha_param=alpha, m=m)


def sum_of_stables(alpha: float, beta: float) -> CompleteBernsteinFunction:
    """phi(lam) = lam**(alpha/2) + lam**(beta/2) with 0 < beta < alpha."""
    if not 0.0 < alpha < 2.0:
        raise ConstructionError("leading index must lie in (0, 2)")
    if not 0.0 < beta < alpha:
        raise ConstructionError("secondary index must lie in (0, alpha)")
    return CompleteBernsteinFunction(kind="sum", alpha=alpha, alpha_param=alpha, beta=beta)


def log_perturbed_up(alpha: float, gamma: float) -> CompleteBernsteinFunction:
    """phi(lam) = lam**(alpha/2) * log(1+lam)**(gamma/2), gamma in (0, 2-alpha)."""
    if not 0.0 < alpha < 2.0:
        raise ConstructionError("index must lie in (0, 2)")
    if not 0.0 < gamma < 2.0 - alpha:
        raise ConstructionError("log exponent must lie in (0, 2-alpha)")
    return CompleteBernsteinFunction(
        kind="log_up", alpha=alpha, alpha_param=alpha, log_exponent=gamma
    )


def log_perturbed_down(alpha: float, beta: float) -> CompleteBernsteinFunction:
    """phi(lam) = lam**(alpha/2) * log(1+lam)**(-beta/2), 0 <= beta < alpha."""
    if not 0.0 < alpha < 2.0:
        raise ConstructionError("index must lie in (0, 2)")
    if not 0.0 <= beta < alpha:
        raise ConstructionError("log exponent must lie in [0, alpha)")
    if beta == 0.0:
        return stable(alpha)
    return CompleteBernsteinFunction(kind="log_down", alpha=alpha, alpha_param=alpha, beta=beta)


def default_truncation(alpha_param: float) -> int:
    """Smallest geometric-series truncation whose dropped tail is negligible.

    The dropped terms sum to about q**(N+1)/(1-q) with q = 2**(1 - 2/alpha);
    pick N so that this is below 1e-12 relative to the leading term, with a
    floor of 64.
    """
    q = 2.0 ** (1.0 - 2.0 / alpha_param)
    n = int(math.ceil(math.log(1e-12 * (1.0 - q)) / math.log(q)))
    return min(max(n, 64), 4096)


def geometric_like(alpha: float, n_terms: int | None = None) -> CompleteBernsteinFunction:
    """Reciprocal of a truncated geometric Stieltjes sum.

    phi(lam) = 1 / sum_{n=1}^{N} 2**n / (lam + 2**(2n/alpha)).  Comparable to
    lam**(1 - alpha/2) at infinity but not regularly varying, so the profile
    index is 2 - alpha.  The full sum stays finite at 0, i.e. the entry
    carries a killing term phi(0+) = 1/g(0) > 0.
    """
    if not 0.0 < alpha < 2.0:
        raise ConstructionError("construction index must lie in (0, 2)")
    n = default_truncation(alpha) if n_terms is None else int(n_terms)
    if n < 1:
        raise ConstructionError("truncation must be positive")
    w, b = _geometric_terms(alpha, n)
    killing = 1.0 / float(np.sum(w / b))
    return CompleteBernsteinFunction(
        kind="geometric_example",
        alpha=2.0 - alpha,
        alpha_param=alpha,
        n_terms=n,
        killing=killing,
    )


def conjugate(phi: CompleteBernsteinFunction) -> CompleteBernsteinFunction:
    """The conjugate exponent psi(lam) = lam / phi(lam).

    Complete Bernstein functions are closed under this map.  When the Levy
    density of phi has a finite first moment the conjugate is killed, with
    rate 1 / integral t*mu(t) dt = lim_{lam->0} lam/phi(lam).
    """
    if phi.kind == "conjugate":
        # unwrap: lam / (lam/phi) = phi
        return phi.inner
    killing = _conjugate_killing(phi)
    return CompleteBernsteinFunction(
        kind="conjugate",
        alpha=2.0 - phi.alpha,
        alpha_param=2.0 - phi.alpha,
        killing=killing,
        inner=phi,
    )


def _conjugate_killing(phi: CompleteBernsteinFunction) -> float:
    if phi.kind == "relativistic":
        # phi'(0) = (alpha/2) * m**((2/alpha)(alpha/2 - 1)) in closed form
        return (2.0 / phi.alpha_param) * phi.m ** ((2.0 / phi.alpha_param) * (1.0 - phi.alpha_param / 2.0))
    e = phi.small_exponent
    if e is not None and e < 1.0:
        return 0.0
    lam = 1e-12
    val = lam / float(phi(lam))
    return val if val > 1e-9 else 0.0


def killed_shift(phi: CompleteBernsteinFunction, a: float) -> CompleteBernsteinFunction:
    """phi(lam) + a: add an independent killing rate a > 0."""
    if a <= 0.0:
        raise ConstructionError("killing rate must be positive")
    return CompleteBernsteinFunction(
        kind="killed_shift",
        alpha=phi.alpha,
        alpha_param=phi.alpha_param,
        killing=phi.killing + a,
        shift=a,
        inner=phi,
    )


def default_catalog() -> list[CompleteBernsteinFunction]:
    """The instances exercised by the check suites."""
    return [
        stable(0.5),
        stable(1.0),
        stable(1.5),
        relativistic_stable(1.0, 1.0),
        sum_of_stables(1.0, 0.5),
        log_perturbed_up(1.0, 0.5),
        log_perturbed_down(1.0, 0.5),
        geometric_like(1.0, 64),
    ]


# ---- pointwise operations ------------------------------------------------


def eval_phi(phi: CompleteBernsteinFunction, lam):
    """Evaluate phi; thin functional wrapper over ``phi(lam)``."""
    out = phi(lam)
    if not np.all(np.isfinite(np.atleast_1d(out))):
        raise EvaluationDomainError(f"non-finite value of {phi.label()}")
    return out


def eval_levy_density(phi: CompleteBernsteinFunction, t, nodes: int = 32):
    """Levy density mu(t) of phi.

    Closed form where the catalog has one.  Otherwise mu(t) is recovered as
    minus the Bromwich integral of phi itself: the Laplace transform of the
    Levy tail is phi(lam)/lam, and differentiating under the contour integral
    kills the killing constant and leaves -mu.  phi is a complete Bernstein
    function, so the integrand is analytic off the negative reals and the
    Talbot contour applies.
    """
    closed = phi.levy_density_closed(t)
    if closed is not None:
        return float(closed) if np.ndim(t) == 0 else closed
    vals = -talbot_safe(phi, t, nodes)
    return vals


def talbot_safe(transform, t, nodes: int = 32):
    vals = laplace.talbot_inversion(transform, t, nodes=nodes)
    return vals


def levy_tail(phi: CompleteBernsteinFunction, t, decades: float = 14.0):
    """Tail mass mu(t, inf): closed form where available, else quadrature of mu.

    The density is integrated over log s with a fixed composite
    Gauss-Legendre rule covering ``decades`` decades past t, evaluated in a
    single vectorised inversion batch.  mu is completely monotone, hence
    decreasing, so a running minimum clamps the round-off noise the
    inversion produces once an exponentially decaying density has died.
    The mass beyond the last node is restored from the locally measured
    power-law slope of mu; the slowest catalog tails lose a few 1e-4 of
    relative mass to truncation and the correction recovers it to ~1e-6.
    """
    closed = phi.levy_tail_closed(t)
    if closed is not None:
        return float(closed) if np.ndim(t) == 0 else closed
    scalar = np.ndim(t) == 0
    ts = np.atleast_1d(np.asarray(t, dtype=float))

    span = decades * math.log(10.0)
    panels = int(round(6 * decades))
    xg, wg = np.polynomial.legendre.leggauss(10)
    edges = np.linspace(0.0, span, panels + 1)
    half = np.diff(edges) / 2.0
    mid = (edges[:-1] + edges[1:]) / 2.0
    z = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
    w = (half[:, None] * wg[None, :]).ravel()
    order = np.argsort(z)
    z, w = z[order], w[order]

    s = ts[:, None] * np.exp(z)[None, :]
    mu = np.asarray(eval_levy_density(phi, s.ravel())).reshape(s.shape)
    mu = np.minimum.accumulate(np.maximum(mu, 0.0), axis=-1)
    out = (mu * s) @ w

    # power-law continuation for the mass past the last node
    tail_t = ts * math.exp(span)
    mu_hi = mu[:, -1]
    mu_lo_idx = np.searchsorted(z, span - 2.0)
    mu_lo = mu[:, min(mu_lo_idx, mu.shape[1] - 1)]
    gap = span - z[min(mu_lo_idx, mu.shape[1] - 1)]
    with np.errstate(divide="ignore", invalid="ignore"):
        p = np.log(mu_lo / mu_hi) / gap
    ok = np.isfinite(p) & (p > 1.05) & (mu_hi > 0.0)
    corr = np.where(ok, mu_hi * tail_t / np.maximum(p - 1.0, 1e-12), 0.0)
    out = out + corr
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class ShiftBoundReport:
    grid: np.ndarray
    ratios: np.ndarray
    max_ratio: float


def check_levy_shift_bound(phi: CompleteBernsteinFunction, t_grid=None) -> ShiftBoundReport:
    """Ratios mu(t)/mu(t+1) on a grid in (1, inf); finite sup is the point."""
    grid = np.asarray(t_grid if t_grid is not None else np.geomspace(2.0, 64.0, 12), dtype=float)
    if np.any(grid <= 1.0):
        raise ValueError("shift-bound grid must lie in (1, inf)")
    num = np.atleast_1d(eval_levy_density(phi, grid))
    den = np.atleast_1d(eval_levy_density(phi, grid + 1.0))
    ratios = num / den
    return ShiftBoundReport(grid=grid, ratios=ratios, max_ratio=float(np.max(ratios)))


@dataclass(frozen=True)
class RegVarProfile:
    """Profile of phi against lam**(alpha/2) times a reference slowly varying factor."""

    alpha: float
    ell: Callable
    c_profile: float


def reg_var_profile(
    phi: CompleteBernsteinFunction,
    ell_ref: Callable | None = None,
    lam_grid=None,
) -> RegVarProfile:
    """Extract (alpha, ell) with ell(lam) = phi(lam)/lam**(alpha/2).

    ``c_profile`` is the smallest constant c with 1/c <= phi/(lam**(a/2) ell_ref)
    <= c over the grid; it is 1 when ell_ref is the extracted ell itself.
    """
    alpha = phi.alpha

    def ell(lam):
        lam = np.asarray(lam, dtype=float)
        return phi(lam) / lam ** (alpha / 2.0)

    if ell_ref is None:
        return RegVarProfile(alpha=alpha, ell=ell, c_profile=1.0)
    grid = np.asarray(lam_grid if lam_grid is not None else np.geomspace(1.0, 1e8, 120), dtype=float)
    ratio = np.atleast_1d(phi(grid)) / (grid ** (alpha / 2.0) * np.asarray(ell_ref(grid), dtype=float))
    c = float(max(np.max(ratio), 1.0 / np.min(ratio)))
    return RegVarProfile(alpha=alpha, ell=ell, c_profile=c)


# ---- complete monotonicity probes -----------------------------------------


@dataclass(frozen=True)
class MonotonicityReport:
    passed: bool
    inconclusive_fraction: float
    worst_violation: float
    order: int


def _divided_difference_signs(f, grid, order, rel_step):
    """Divided-difference table on stencils x*(1+h)^j with error tracking.

    Returns (dd, noise) where dd[k] holds the order-k divided differences at
    every grid point and noise[k] the propagated round-off estimate.
    """
    x = np.asarray(grid, dtype=float)
    j = np.arange(order + 1)
    nodes = x[:, None] * (1.0 + rel_step) ** j[None, :]
    vals = np.asarray(f(nodes), dtype=float)
    eps = np.finfo(float).eps
    dd = [vals]
    noise = [np.full_like(vals, eps) * np.max(np.abs(vals), axis=1, keepdims=True) * 8.0]
    for k in range(1, order + 1):
        span = nodes[:, k:] - nodes[:, :-k]
        dd.append((dd[-1][:, 1:] - dd[-1][:, :-1]) / span)
        noise.append((noise[-1][:, 1:] + noise[-1][:, :-1]) / span)
    return dd, noise


def _check_alternation(f, grid, order, rel_step, sign_of_order) -> MonotonicityReport:
    worst = 0.0
    total = 0
    inconclusive = 0
    for h in (rel_step, rel_step / 2.0):
        dd, noise = _divided_difference_signs(f, grid, order, h)
        for k in range(order + 1):
            want = sign_of_order(k)
            vals = dd[k].ravel()
            cut = 1e3 * noise[k].ravel()
            total += vals.size
            small = np.abs(vals) <= cut
            inconclusive += int(np.sum(small))
            bad = (~small) & (want * vals < 0.0)
            if np.any(bad):
                worst = max(worst, float(np.max(np.abs(vals[bad]))))
    return MonotonicityReport(
        passed=worst == 0.0,
        inconclusive_fraction=inconclusive / max(total, 1),
        worst_violation=worst,
        order=order,
    )


def check_complete_monotonicity(
    f: Callable, order: int = 3, grid=None, rel_step: float = 1e-2
) -> MonotonicityReport:
    """Check the sign alternation (-1)^k dd_k >= 0 of divided differences.

    Conclusive sign violations fail the check; differences below the
    cancellation threshold only raise the inconclusive fraction.  ``order``
    is capped at 4, past which double precision has nothing left to say.
    """
    if not 0 <= order <= 4:
        raise ValueError("order must lie in [0, 4]")
    g = np.asarray(grid if grid is not None else np.geomspace(1e-2, 1e2, 25), dtype=float)
    return _check_alternation(f, g, order, rel_step, lambda k: (-1.0) ** k)


def check_bernstein(f: Callable, order: int = 3, grid=None, rel_step: float = 1e-2) -> MonotonicityReport:
    """Bernstein probe: f >= 0 and f' completely monotone, via (-1)^(k+1) dd_k >= 0 for k >= 1."""
    if not 1 <= order <= 4:
        raise ValueError("order must lie in [1, 4]")
    g = np.asarray(grid if grid is not None else np.geomspace(1e-2, 1e2, 25), dtype=float)
    return _check_alternation(f, g, order, rel_step, lambda k: 1.0 if k <= 1 else (-1.0) ** (k + 1))


# ---- JSON schema -----------------------------------------------------------


def phi_from_json(spec) -> CompleteBernsteinFunction:
    """Build a catalog entry from its JSON description.

    Accepted forms::

        {"kind": "stable", "alpha": 0.5}
        {"kind": "relativistic", "alpha": 1.0, "m": 1.0}
        {"kind": "sum", "alpha": 1.0, "beta": 0.5}
        {"kind": "log_up", "alpha": 1.0, "gamma": 0.5}
        {"kind": "log_down", "alpha": 1.0, "beta": 0.5}
        {"kind": "geometric_example", "alpha": 1.0, "n": 64}
    """
    if isinstance(spec, (str, bytes)):
        spec = json.loads(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConstructionError("catalog JSON must be an object with a 'kind' field")
    kind = spec["kind"]
    try:
        if kind == "stable":
            return stable(float(spec["alpha"]))
        if kind == "relativistic":
            return relativistic_stable(float(spec["alpha"]), float(spec["m"]))
        if kind == "sum":
            return sum_of_stables(float(spec["alpha"]), float(spec["beta"]))
        if kind == "log_up":
            return log_perturbed_up(float(spec["alpha"]), float(spec["gamma"]))
        if kind == "log_down":
            return log_perturbed_down(float(spec["alpha"]), float(spec["beta"]))
        if kind == "geometric_example":
            return geometric_like(float(spec["alpha"]), int(spec["n"]) if "n" in spec else None)
    except KeyError as missing:
        raise ConstructionError(f"kind {kind!r} is missing parameter {missing}") from None
    raise ConstructionError(f"unknown catalog kind {kind!r}")


def phi_to_json(phi: CompleteBernsteinFunction) -> dict:
    k = phi.kind
    if k == "stable":
        return {"kind": "stable", "alpha": phi.alpha_param}
    if k == "relativistic":
        return {"kind": "relativistic", "alpha": phi.alpha_param, "m": phi.m}
    if k == "sum":
        return {"kind": "sum", "alpha": phi.alpha_param, "beta": phi.beta}
    if k == "log_up":
        return {"kind": "log_up", "alpha": phi.alpha_param, "gamma": phi.log_exponent}
    if k == "log_down":
        return {"kind": "log_down", "alpha": phi.alpha_param, "beta": phi.beta}
    if k == "geometric_example":
        return {"kind": "geometric_example", "alpha": phi.alpha_param, "n": phi.n_terms}
    raise UnsupportedKindError(f"kind {k!r} has no JSON form")
