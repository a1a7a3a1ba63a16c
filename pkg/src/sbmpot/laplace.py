"""Numerical inversion of Laplace transforms.

Two classic rules, both specialised to transforms that are analytic off the
negative real axis (Stieltjes-type transforms always are):

* fixed-Talbot (Abate & Valko): deformed Bromwich contour, complex arithmetic,
  roughly one significant digit per 2 nodes in double precision;
* Gaver-Stehfest: real-axis sampling only, useful when the transform cannot
  be continued into the left half-plane.  Accuracy saturates near 1e-7 in
  double precision around 14 terms.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import NumericAccuracyError

__all__ = [
    "talbot_inversion",
    "talbot_with_residual",
    "gaver_stehfest",
    "stehfest_with_residual",
]


@lru_cache(maxsize=16)
def _talbot_weights(m: int):
    # Fixed-Talbot contour s(theta) = (r/t) * theta * (cot(theta) + i),
    # theta_k = k*pi/m, r = 2m/5.  Because t*s_k does not depend on t the
    # exponential factors can be cached once per node count.
    theta = np.arange(m) * np.pi / m
    cot = np.zeros(m)
    cot[1:] = 1.0 / np.tan(theta[1:])
    r = 2.0 * m / 5.0
    base = r * theta * (cot + 1j)  # equals t*s_k
    base[0] = r
    gamma = np.empty(m, dtype=complex)
    gamma[0] = 0.5 * math.exp(r)
    gamma[1:] = np.exp(base[1:]) * (1.0 + 1j * theta[1:] * (1.0 + cot[1:] ** 2) - 1j * cot[1:])
    return base, gamma


def talbot_inversion(transform: Callable, t, nodes: int = 32) -> np.ndarray:
    """Evaluate the inverse Laplace transform of ``transform`` at times ``t``.

    ``transform`` must accept a complex ndarray.  ``t`` may be a scalar or an
    array of positive times; the result matches its shape.
    """
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t_arr <= 0.0):
        raise ValueError("inversion times must be positive")
    base, gamma = _talbot_weights(nodes)
    s = base[None, :] / t_arr[:, None]
    vals = np.real(transform(s) @ gamma) * (2.0 / (5.0 * t_arr))
    return vals if np.ndim(t) else float(vals[0])


def talbot_with_residual(
    transform: Callable,
    t,
    nodes: int = 32,
    check_nodes: int = 24,
    rtol: float = 1e-6,
    raise_on_fail: bool = True,
):
    """Talbot inversion with an internal accuracy estimate.

    The residual is the relative difference between the ``nodes``- and
    ``check_nodes``-point rules.  The cross-check rule is *smaller*: the
    contour weights grow like exp(2m/5), so past the double-precision sweet
    spot adding nodes amplifies round-off instead of reducing truncation (a
    48-node rule can sit 1e-5 off while 24/32-node rules agree with each
    other and with Gaver-Stehfest to 1e-8).  If the residual exceeds
    ``rtol`` a :class:`NumericAccuracyError` carrying it is raised (or the
    values are returned anyway when ``raise_on_fail`` is false).

    The absolute round-off floor of the rule is about 1e-12 times the peak
    magnitude in the batch, so relative accuracy ``rtol`` is only attainable
    where |f(t)| >= 1e-12/rtol * peak.  Points in the exponentially dead
    tail below that floor are returned but excluded from certification.
    """
    vals_main = np.atleast_1d(talbot_inversion(transform, t, nodes))
    vals_check = np.atleast_1d(talbot_inversion(transform, t, check_nodes))
    mags = np.abs(vals_main)
    vmax = float(np.max(mags)) if mags.size else 0.0
    floor = min(1e-12 / max(rtol, 1e-300), 1e-3) * vmax
    live = mags >= max(floor, np.finfo(float).tiny)
    if np.any(live):
        residual = float(np.max(np.abs(vals_main - vals_check)[live] / mags[live]))
    else:
        residual = 0.0
    if residual > rtol and raise_on_fail:
        raise NumericAccuracyError(
            f"Laplace inversion residual {residual:.3e} exceeds tolerance {rtol:.1e}",
            residual=residual,
        )
    vals = vals_main if np.ndim(t) else float(vals_main[0])
    return vals, residual


@lru_cache(maxsize=8)
def _stehfest_weights(n: int) -> np.ndarray:
    if n % 2 != 0:
        raise ValueError("Gaver-Stehfest term count must be even")
    half = n // 2
    fact = [math.factorial(k) for k in range(2 * half + 1)]
    w = np.zeros(n)
    for k in range(1, n + 1):
        acc = 0.0
        for j in range((k + 1) // 2, min(k, half) + 1):
            acc += (
                j ** half
                * fact[2 * j]
                / (fact[half - j] * fact[j] * fact[j - 1] * fact[k - j] * fact[2 * j - k])
            )
        w[k - 1] = (-1) ** (k + half) * acc
    return w


def gaver_stehfest(transform: Callable, t, terms: int = 14) -> np.ndarray:
    """Gaver-Stehfest inversion using real-axis samples only."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t_arr <= 0.0):
        raise ValueError("inversion times must be positive")
    w = _stehfest_weights(terms)
    ln2 = math.log(2.0)
    lam = np.arange(1, terms + 1)[None, :] * (ln2 / t_arr[:, None])
    vals = (transform(lam) @ w) * (ln2 / t_arr)
    return vals if np.ndim(t) else float(vals[0])


def stehfest_with_residual(
    transform: Callable,
    t,
    terms: int = 14,
    check_terms: int = 12,
    rtol: float = 1e-4,
    raise_on_fail: bool = True,
):
    """Gaver-Stehfest with a two-rule residual estimate.

    Going above ~16 terms amplifies round-off, so the cross-check uses a
    *smaller* rule; the residual mixes truncation of the small rule with
    round-off of the large one, which is the honest resolution limit.
    """
    a = np.atleast_1d(gaver_stehfest(transform, t, terms))
    b = np.atleast_1d(gaver_stehfest(transform, t, check_terms))
    scale = np.maximum(np.abs(a), np.finfo(float).tiny)
    residual = float(np.max(np.abs(a - b) / scale))
    if residual > rtol and raise_on_fail:
        raise NumericAccuracyError(
            f"Gaver-Stehfest residual {residual:.3e} exceeds tolerance {rtol:.1e}",
            residual=residual,
        )
    vals = a if np.ndim(t) else float(a[0])
    return vals, residual
