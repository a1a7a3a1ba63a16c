"""Green function and jump kernel of the subordinate Brownian motion.

Both kernels are subordination integrals of the Gaussian heat kernel,

    G(x) = int_0^inf p(t, x) u(t) dt,      j(r) = int_0^inf p(t, x) mu(t) dt,

with u the potential density and mu the Levy density of the subordinator.
The integrand peaks near t of order r**2, so the quadrature splits there:
t = r**2/(4s) on the head (turning the Gaussian factor into exp(-s)) and
t = r**2 * exp(y) on the tail.

The same engine, fed with an external decreasing weight, doubles as the
power-weight limit check: for w(t) = t**(-beta) the integral is exactly
Gamma(d/2 + beta - 1) / (4**(1-beta) * pi**(d/2)) * r**(2 - d - 2*beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma as gamma_fn

from .bernstein import CompleteBernsteinFunction
from .densities import RatioWindow, spline_levy_evaluator, spline_potential_evaluator
from .errors import NotTransientError, NumericAccuracyError, UndecidableError

__all__ = [
    "heat_kernel",
    "transience_check",
    "subordination_integral",
    "power_weight_limit",
    "power_weight_limit_constant",
    "green_function",
    "jump_kernel",
    "g_asymptotic_ratio",
    "j_asymptotic_ratio",
    "j_doubling_and_shift",
    "RadialKernelTable",
    "build_kernel_table",
]


def heat_kernel(d: int, t, r):
    """Gaussian transition density (4*pi*t)**(-d/2) * exp(-r**2/(4t))."""
    t = np.asarray(t, dtype=float)
    r = np.asarray(r, dtype=float)
    out = (4.0 * math.pi * t) ** (-d / 2.0) * np.exp(-(r ** 2) / (4.0 * t))
    return float(out) if out.ndim == 0 else out


def transience_check(phi: CompleteBernsteinFunction, d: int, gamma: float | None = None) -> bool:
    """Whether the subordinate Brownian motion in dimension d is transient.

    d >= 3 is always transient.  In d <= 2 the criterion is a small-lambda
    growth floor: some gamma < d/2 with liminf phi(lam)/lam**gamma > 0.  A
    supplied gamma is validated by the log-log slope of phi(lam)/lam**gamma
    at the bottom of a [1e-8, 1] grid (decay towards 0 means liminf 0);
    without one, the catalog's known small-lambda exponent decides.
    """
    if d < 1:
        raise ValueError("dimension must be a positive integer")
    if d >= 3:
        return True
    if gamma is not None:
        if not 0.0 <= gamma < d / 2.0:
            return False
        lam = np.geomspace(1e-8, 1.0, 33)
        ratio = np.atleast_1d(phi(lam)) / lam ** gamma
        if np.any(~np.isfinite(ratio)) or np.any(ratio <= 0.0):
            return False
        # slope over the lowest decade; positive slope means ratio -> 0
        head = slice(0, 5)
        slope = np.polyfit(np.log(lam[head]), np.log(ratio[head]), 1)[0]
        return slope <= 1e-2
    e = phi.small_exponent
    if e is None:
        raise UndecidableError(
            "transience in d <= 2 needs a growth exponent gamma; none supplied "
            "and the catalog entry has no known small-lambda exponent"
        )
    return e < d / 2.0


def _panel(f, a, b, epsabs, epsrel):
    val, err, info = quad(f, a, b, epsabs=epsabs, epsrel=epsrel, limit=500, full_output=1)[:3]
    if err > max(epsabs, epsrel * abs(val)) * 50.0:
        raise NumericAccuracyError(
            f"subordination quadrature achieved {err:.2e} against target {epsabs:.0e}/{epsrel:.0e}",
            residual=err,
        )
    return val, err


def subordination_integral(
    w: Callable,
    d: int,
    r: float,
    gamma: float | None = None,
    epsabs: float = 1e-9,
    epsrel: float = 1e-7,
) -> float:
    """int_0^inf (4 pi t)**(-d/2) exp(-r**2/(4t)) w(t) dt for decreasing w.

    In d <= 2 the tail only converges under a declared decay w(t) <= c*t**(gamma-1)
    with gamma < d/2, so the caller must state gamma there.
    """
    if r <= 0.0:
        raise ValueError("radius must be positive")
    if d <= 2:
        if gamma is None:
            raise UndecidableError("d <= 2 requires a declared tail exponent gamma < d/2")
        if gamma >= d / 2.0:
            raise ValueError("tail exponent must satisfy gamma < d/2")
    r2 = r * r
    log_r2 = math.log(r2)

    def head(s):
        # t = r^2/(4s), s in [1/4, inf); Gaussian factor becomes e^{-s}.
        # Past s ~ 700 the e^{-s} factor is below 1e-304 and the power factors
        # would overflow first, so the region contributes exactly nothing.
        if s > 700.0:
            return 0.0
        t = r2 / (4.0 * s)
        return (4.0 * math.pi * t) ** (-d / 2.0) * math.exp(-s) * w(t) * r2 / (4.0 * s * s)

    def tail(y):
        # t = r^2 e^y, y in [0, inf); cut where t leaves the float range
        # (the integrand is ~ t^(gamma - d/2) there, far below any tolerance)
        if log_r2 + y > 690.0:
            return 0.0
        t = math.exp(log_r2 + y)
        return (4.0 * math.pi * t) ** (-d / 2.0) * math.exp(-0.25 * math.exp(-y)) * w(t) * t

    head_val, _ = _panel(head, 0.25, np.inf, epsabs, epsrel)
    tail_val, _ = _panel(tail, 0.0, np.inf, epsabs, epsrel)
    return head_val + tail_val


def power_weight_limit_constant(d: int, beta: float) -> float:
    """Closed-form value of I(r) * r**(d + 2*beta - 2) for the weight t**(-beta)."""
    if d / 2.0 + beta <= 1.0:
        raise ValueError("need d/2 + beta > 1 for the integral to converge")
    return gamma_fn(d / 2.0 + beta - 1.0) / (4.0 ** (1.0 - beta) * math.pi ** (d / 2.0))


def power_weight_limit(d: int, beta: float, r: float = 1e-3) -> float:
    """Measured I(r) * r**(d + 2*beta - 2) for w(t) = t**(-beta); exact for pure powers."""
    val = subordination_integral(lambda t: t ** (-beta), d, r, gamma=1.0 - beta)
    return val * r ** (d + 2.0 * beta - 2.0)


def _weight_for_green(phi, r_lo: float, r_hi: float) -> Callable:
    if phi.kind == "stable":
        a = phi.alpha_param
        c = 1.0 / gamma_fn(a / 2.0)
        return lambda t: c * t ** (a / 2.0 - 1.0)
    return spline_potential_evaluator(phi, r_lo ** 2 / 1e4, r_hi ** 2 * 1e12)


def _weight_for_jump(phi, r_lo: float, r_hi: float) -> Callable:
    closed = phi.levy_density_closed(np.asarray(1.0))
    if closed is not None:
        return lambda t: float(phi.levy_density_closed(np.asarray(t)))
    return spline_levy_evaluator(phi, r_lo ** 2 / 1e4, r_hi ** 2 * 1e12)


def green_function(
    phi: CompleteBernsteinFunction,
    d: int,
    r: float,
    gamma: float | None = None,
    u_eval: Callable | None = None,
    epsabs: float = 1e-9,
    epsrel: float = 1e-7,
) -> float:
    """G(x) at |x| = r: subordination integral of the potential density."""
    if not transience_check(phi, d, gamma):
        raise NotTransientError(f"{phi.label()} is not transient in d={d}")
    w = u_eval if u_eval is not None else _weight_for_green(phi, r, r)
    tail_gamma = None
    if d <= 2:
        tail_gamma = gamma if gamma is not None else phi.small_exponent
    return subordination_integral(w, d, r, gamma=tail_gamma, epsabs=epsabs, epsrel=epsrel)


def jump_kernel(
    phi: CompleteBernsteinFunction,
    d: int,
    r: float,
    mu_eval: Callable | None = None,
    epsabs: float = 1e-9,
    epsrel: float = 1e-7,
) -> float:
    """j(r): subordination integral of the Levy density; no transience needed.

    The Levy density is integrable at infinity, so its tail decays faster
    than 1/t and gamma = 0 always works in low dimension.
    """
    w = mu_eval if mu_eval is not None else _weight_for_jump(phi, r, r)
    return subordination_integral(w, d, r, gamma=0.0 if d <= 2 else None, epsabs=epsabs, epsrel=epsrel)


def _ratio_window(grid, values):
    values = np.asarray(values, dtype=float)
    return RatioWindow(grid=grid, ratios=values, lo=float(np.min(values)), hi=float(np.max(values)))


def g_asymptotic_ratio(
    phi: CompleteBernsteinFunction, d: int, r_grid=None, gamma: float | None = None
) -> RatioWindow:
    """G(r) * r**d * phi(r**-2) over a small-r window; bounded spread is the claim."""
    grid = np.asarray(r_grid if r_grid is not None else np.geomspace(1e-3, 1.0, 30), dtype=float)
    if not transience_check(phi, d, gamma):
        raise NotTransientError(f"{phi.label()} is not transient in d={d}")
    w = _weight_for_green(phi, float(grid.min()), float(grid.max()))
    tail_gamma = None
    if d <= 2:
        tail_gamma = gamma if gamma is not None else phi.small_exponent
    vals = [
        subordination_integral(w, d, r, gamma=tail_gamma) * r ** d * float(phi(r ** -2.0))
        for r in grid
    ]
    return _ratio_window(grid, vals)


def j_asymptotic_ratio(phi: CompleteBernsteinFunction, d: int, r_grid=None) -> RatioWindow:
    """j(r) * r**d / phi(r**-2) over a small-r window."""
    grid = np.asarray(r_grid if r_grid is not None else np.geomspace(1e-3, 1.0, 30), dtype=float)
    w = _weight_for_jump(phi, float(grid.min()), float(grid.max()))
    tail_gamma = 0.0 if d <= 2 else None
    vals = [
        subordination_integral(w, d, r, gamma=tail_gamma) * r ** d / float(phi(r ** -2.0))
        for r in grid
    ]
    return _ratio_window(grid, vals)


def j_doubling_and_shift(phi: CompleteBernsteinFunction, d: int, K: float) -> tuple[float, float]:
    """Measured doubling and unit-shift constants of the jump kernel.

    Returns (max of j(r)/j(2r) on (0,K), max of j(r)/j(r+1) on (1, 10K)).
    """
    if K <= 0.0:
        raise ValueError("K must be positive")
    r_small = np.geomspace(K * 1e-3, K * 0.999, 40)
    r_large = np.geomspace(1.001, 10.0 * K if 10.0 * K > 1.1 else 1.1, 40)
    lo = min(float(r_small.min()), float(r_large.min()))
    hi = max(2.0 * float(r_small.max()), float(r_large.max()) + 1.0)
    w = _weight_for_jump(phi, lo, hi)
    tail_gamma = 0.0 if d <= 2 else None

    def j(r):
        return subordination_integral(w, d, float(r), gamma=tail_gamma)

    c4 = max(j(r) / j(2.0 * r) for r in r_small)
    c5 = max(j(r) / j(r + 1.0) for r in r_large)
    return float(c4), float(c5)


@dataclass(frozen=True)
class RadialKernelTable:
    """Tabulated G and j on a log radius grid, ready for CSV export."""

    d: int
    radii: np.ndarray
    g_values: np.ndarray
    j_values: np.ndarray
    phi_id: str

    def __post_init__(self):
        for name, vals in (("g_values", self.g_values), ("j_values", self.j_values)):
            if np.any(np.diff(vals) >= 0.0):
                raise NumericAccuracyError(f"{name} must be strictly decreasing in r")

    def columns(self, phi: CompleteBernsteinFunction) -> dict[str, np.ndarray]:
        phi_r = np.atleast_1d(phi(self.radii ** -2.0))
        return {
            "r": self.radii,
            "G": self.g_values,
            "J": self.j_values,
            "g_ratio": self.g_values * self.radii ** self.d * phi_r,
            "j_ratio": self.j_values * self.radii ** self.d / phi_r,
        }


def build_kernel_table(
    phi: CompleteBernsteinFunction,
    d: int,
    r_min: float,
    r_max: float,
    points: int,
    gamma: float | None = None,
) -> RadialKernelTable:
    if not 0.0 < r_min < r_max:
        raise ValueError("need 0 < r_min < r_max")
    if points < 2:
        raise ValueError("need at least two radii")
    radii = np.geomspace(r_min, r_max, points)
    if not transience_check(phi, d, gamma):
        raise NotTransientError(f"{phi.label()} is not transient in d={d}")
    w_u = _weight_for_green(phi, r_min, r_max)
    w_mu = _weight_for_jump(phi, r_min, r_max)
    green_gamma = None
    if d <= 2:
        green_gamma = gamma if gamma is not None else phi.small_exponent
    jump_gamma = 0.0 if d <= 2 else None
    g_vals = np.array([subordination_integral(w_u, d, float(r), gamma=green_gamma) for r in radii])
    j_vals = np.array([subordination_integral(w_mu, d, float(r), gamma=jump_gamma) for r in radii])
    return RadialKernelTable(d=d, radii=radii, g_values=g_vals, j_values=j_vals, phi_id=phi.label())
