"""Command-line interface: evaluate, tabulate, check, simulate.

Every command is a pure function of (flags, seed): outputs are bit-identical
across re-runs and thread counts.  When --output is given a manifest JSON
(command, flags, seed, artifact_version, timestamp) is written alongside the
artifact, and --from-manifest replays the stored flags verbatim.

Exit codes: 0 pass, 1 check failed, 2 usage or configuration error,
3 numeric-accuracy failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .bernstein import (
    eval_levy_density,
    geometric_like,
    log_perturbed_down,
    log_perturbed_up,
    phi_from_json,
    relativistic_stable,
    stable,
    sum_of_stables,
)
from .densities import (
    ZAHLE_BOUND,
    density_table,
    mu_asymptotic_ratio,
    u_asymptotic_ratio,
    zahle_upper_check,
)
from .errors import (
    ConstructionError,
    EvaluationDomainError,
    NotTransientError,
    NumericAccuracyError,
    UndecidableError,
    UnsupportedKindError,
)
from .harnack import bhp_ratio_check, harnack_ratio
from .kernels import (
    build_kernel_table,
    g_asymptotic_ratio,
    green_function,
    j_asymptotic_ratio,
    j_doubling_and_shift,
    jump_kernel,
)
from .ladder import (
    SANDWICH_HI,
    SANDWICH_LO,
    chi_sandwich_check,
    halfline_green,
    ladder_density_v,
    ladder_exponent_chi,
    renewal_function_V,
)
from .montecarlo import Ball, PathConfig, scaled_config, simulate_exits

_USAGE_ERRORS = (
    ConstructionError,
    UnsupportedKindError,
    EvaluationDomainError,
    UndecidableError,
    NotTransientError,
    json.JSONDecodeError,
)


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def _jsonable(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return float(x)
    return x


def _render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        clean = [{k: _jsonable(v) for k, v in rec.items()} for rec in records]
        return json.dumps(clean, indent=2) + "\n"
    if not records:
        return "\n"
    keys = list(records[0].keys())
    lines = [",".join(keys)]
    for rec in records:
        lines.append(",".join(_fmt(rec[k]) for k in keys))
    return "\n".join(lines) + "\n"


def _emit(records: list[dict], args, argv: list[str]) -> None:
    text = _render(records, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        manifest = {
            "command": argv[0],
            "flags": argv,
            "seed": getattr(args, "seed", None),
            "artifact_version": __version__,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        with open(args.output + ".manifest.json", "w") as fh:
            json.dump(manifest, fh, indent=2)
            fh.write("\n")
    else:
        sys.stdout.write(text)


def _phi_from_args(args):
    if getattr(args, "phi", None):
        return phi_from_json(json.loads(args.phi))
    kind = getattr(args, "kind", None)
    if kind is None:
        raise ConstructionError("provide --kind or --phi <json>")
    if args.alpha is None:
        raise ConstructionError("--alpha is required with --kind")
    a = args.alpha
    if kind == "stable":
        return stable(a)
    if kind == "relativistic":
        return relativistic_stable(a, args.m)
    if kind == "sum":
        return sum_of_stables(a, args.beta)
    if kind == "log_up":
        return log_perturbed_up(a, args.gamma)
    if kind == "log_down":
        return log_perturbed_down(a, args.beta)
    if kind == "geometric_example":
        return geometric_like(a, args.n)
    raise UnsupportedKindError(f"unknown kind {kind!r}")


def _add_phi_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=["stable", "relativistic", "sum", "log_up",
                                      "log_down", "geometric_example"])
    p.add_argument("--phi", help="JSON catalog entry, alternative to --kind")
    p.add_argument("--alpha", type=float)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.5)
    p.add_argument("--gamma", type=float, default=0.5)
    p.add_argument("--n", type=int, default=None)


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", default=None)
    p.add_argument("--threads", type=int, default=0)


def _grid(args, lo_name, hi_name, single_name, default_lo, default_hi):
    single = getattr(args, single_name, None)
    if single is not None:
        return np.array([single])
    lo = getattr(args, lo_name) or default_lo
    hi = getattr(args, hi_name) or default_hi
    return np.geomspace(lo, hi, args.points)


def _cmd_phi(args, argv) -> int:
    phi = _phi_from_args(args)
    grid = _grid(args, "lmin", "lmax", "lam", 1e-2, 1e2)
    vals = np.atleast_1d(phi(grid))
    records = [
        {
            "lambda": float(lam),
            "phi": float(v),
            "psi": float(lam / v),
            "ell": float(v / lam ** (phi.alpha / 2.0)),
        }
        for lam, v in zip(grid, vals)
    ]
    _emit(records, args, argv)
    return 0


def _cmd_density(args, argv) -> int:
    phi = _phi_from_args(args)
    grid = _grid(args, "tmin", "tmax", "t", 1e-3, 1.0)
    cols = density_table(phi, grid)
    records = [
        {k: float(cols[k][i]) for k in ("t", "u", "mu", "tail", "u_ratio", "mu_ratio")}
        for i in range(grid.size)
    ]
    _emit(records, args, argv)
    return 0


def _cmd_kernel(args, argv) -> int:
    phi = _phi_from_args(args)
    d = args.dim
    if args.r is not None:
        r = args.r
        g = green_function(phi, d, r)
        j = jump_kernel(phi, d, r)
        pr = float(phi(r**-2.0))
        records = [{"r": r, "G": g, "J": j,
                    "g_ratio": g * r**d * pr, "j_ratio": j * r**d / pr}]
    else:
        table = build_kernel_table(phi, d, args.rmin or 1e-2, args.rmax or 1.0, args.points)
        cols = table.columns(phi)
        records = [
            {k: float(cols[k][i]) for k in ("r", "G", "J", "g_ratio", "j_ratio")}
            for i in range(len(cols["r"]))
        ]
    _emit(records, args, argv)
    return 0


def _cmd_ladder(args, argv) -> int:
    phi = _phi_from_args(args)
    if args.which == "chi":
        grid = _grid(args, "lmin", "lmax", "lam", 1e-2, 1e2)
        chi = np.atleast_1d(ladder_exponent_chi(phi, grid))
        ref = np.sqrt(np.atleast_1d(phi(grid**2)))
        records = [
            {"lambda": float(l), "chi": float(c),
             "sqrt_phi_lambda2": float(s), "ratio": float(c / s)}
            for l, c, s in zip(grid, chi, ref)
        ]
    elif args.which == "v":
        grid = _grid(args, "tmin", "tmax", "t", 1e-2, 1.0)
        v = np.atleast_1d(ladder_density_v(phi, grid))
        big_v = np.atleast_1d(renewal_function_V(phi, grid))
        records = [
            {"t": float(t), "v_ladder": float(a), "V": float(b)}
            for t, a, b in zip(grid, v, big_v)
        ]
    else:
        if args.x is None or args.y is None:
            raise ConstructionError("halfline needs --x and --y")
        ys = (np.geomspace(args.ymin, args.ymax, args.points)
              if args.ymin is not None and args.ymax is not None
              else np.array([args.y]))
        records = [
            {"x": args.x, "y": float(y), "G_halfline": halfline_green(phi, args.x, float(y))}
            for y in ys
        ]
    _emit(records, args, argv)
    return 0


def _cmd_check(args, argv) -> int:
    phi = _phi_from_args(args)
    which = args.which
    if which == "sandwich":
        mn, mx = chi_sandwich_check(phi)
        passed = SANDWICH_LO - 1e-9 <= mn and mx <= SANDWICH_HI + 1e-9
        records = [{"check": "sandwich", "min": mn, "max": mx,
                    "lo_bound": SANDWICH_LO, "hi_bound": SANDWICH_HI, "pass": passed}]
    elif which == "zahle":
        rep = zahle_upper_check(phi)
        passed = rep.passed
        records = [{"check": "zahle", "max_product": rep.max_product,
                    "min_product": rep.min_product, "bound": ZAHLE_BOUND, "pass": passed}]
    elif which == "doubling":
        doubling, shift = j_doubling_and_shift(phi, args.dim, args.K)
        passed = bool(np.isfinite(doubling) and np.isfinite(shift) and doubling > 0.0)
        records = [{"check": "doubling", "dim": args.dim, "K": args.K,
                    "doubling": doubling, "shift": shift, "pass": passed}]
    elif which == "asym":
        return _cmd_check_asym(args, argv)
    elif which == "harnack":
        cfg = PathConfig(paths=args.paths, seed=args.seed, horizon=1.0, step=1e-3,
                         epsilon=args.eps, threads=args.threads)
        rep = harnack_ratio(phi, args.dim, args.r, cfg)
        passed = rep.passed
        records = [{"check": "harnack", "dim": args.dim, "r": args.r,
                    "ratio": rep.ratio, "refinement_delta": rep.refinement_delta,
                    "delta_paths": rep.delta_paths, "delta_grid": rep.delta_grid,
                    "pass": passed}]
    else:
        d = 1 if args.domain == "interval" else 2
        cfg = PathConfig(paths=args.paths, seed=args.seed, horizon=1.0, step=1e-3,
                         epsilon=args.eps, threads=args.threads)
        rep = bhp_ratio_check(phi, d, args.r, cfg, domain=args.domain)
        passed = rep.passed
        records = [{"check": "bhp", "domain": args.domain, "r": args.r,
                    "ratio": rep.spread, "refinement_delta": rep.refinement_delta,
                    "pass": passed}]
    _emit(records, args, argv)
    return 0 if passed else 1


def _cmd_check_asym(args, argv) -> int:
    phi = _phi_from_args(args)
    windows = {
        "u": u_asymptotic_ratio(phi),
        "mu": mu_asymptotic_ratio(phi),
        "G": g_asymptotic_ratio(phi, args.dim),
        "j": j_asymptotic_ratio(phi, args.dim),
    }
    records = []
    passed = True
    for name, win in windows.items():
        spread = win.hi / win.lo if win.lo > 0.0 else float("inf")
        ok = bool(np.isfinite(spread) and spread < 1e3)
        passed = passed and ok
        records.append({"check": "asym", "quantity": name, "lo": win.lo,
                        "hi": win.hi, "spread": spread, "pass": ok})
    _emit(records, args, argv)
    return 0 if passed else 1


def _cmd_simulate(args, argv) -> int:
    phi = _phi_from_args(args)
    d = args.dim
    x0 = [float(s) for s in str(args.x0).split(",")]
    if len(x0) != d:
        raise ConstructionError("--x0 must supply one coordinate per dimension")
    base = scaled_config(phi, args.radius, args.paths, args.seed,
                         epsilon=args.eps, method=args.method, threads=args.threads)
    step = args.step if args.step is not None else base.step
    horizon = args.horizon if args.horizon is not None else base.horizon
    cfg = PathConfig(paths=args.paths, seed=args.seed, horizon=horizon, step=step,
                     epsilon=args.eps, method=args.method, threads=args.threads)
    domain = Ball(center=(0.0,) * d, radius=args.radius)
    sample = simulate_exits(phi, domain, x0, cfg)
    if args.format == "csv":
        records = []
        for i in range(sample.tau.size):
            rec = {"path": i, "tau": float(sample.tau[i])}
            for k in range(d):
                rec[f"x{k + 1}"] = float(sample.exit_position[i, k])
            rec["exited_by_jump"] = bool(sample.exited_by_jump[i])
            records.append(rec)
    else:
        est = sample.mean_tau()
        records = [{"mean": est.mean, "std_error": est.std_error,
                    "n": est.n, "censored": sample.censored}]
    _emit(records, args, argv)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbmpot",
        description="Potential-theoretic quantities of subordinate Brownian motion",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="tabulate (lambda, phi, psi, ell)")
    _add_phi_flags(p)
    _add_common_flags(p)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--lmin", type=float, default=None)
    p.add_argument("--lmax", type=float, default=None)
    p.add_argument("--points", type=int, default=25)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("density", help="tabulate (t, u, mu, tail, ratios)")
    _add_phi_flags(p)
    _add_common_flags(p)
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--tmin", type=float, default=None)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--points", type=int, default=25)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("kernel", help="tabulate (r, G, J, ratios)")
    _add_phi_flags(p)
    _add_common_flags(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--rmin", type=float, default=None)
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--points", type=int, default=20)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("ladder", help="ladder-height tables")
    p.add_argument("which", choices=["chi", "v", "halfline"])
    _add_phi_flags(p)
    _add_common_flags(p)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--lmin", type=float, default=None)
    p.add_argument("--lmax", type=float, default=None)
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--tmin", type=float, default=None)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--y", type=float, default=None)
    p.add_argument("--ymin", type=float, default=None)
    p.add_argument("--ymax", type=float, default=None)
    p.add_argument("--points", type=int, default=25)
    p.set_defaults(func=_cmd_ladder)

    p = sub.add_parser("check", help="pass/fail property checks")
    p.add_argument("which", choices=["sandwich", "zahle", "doubling", "asym",
                                     "harnack", "bhp"])
    _add_phi_flags(p)
    _add_common_flags(p)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--K", type=float, default=2.0)
    p.add_argument("--r", type=float, default=0.05)
    p.add_argument("--paths", type=int, default=1200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--domain", choices=["interval", "halfdisk"], default="interval")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("simulate", help="Monte Carlo first-exit sampling")
    p.add_argument("what", choices=["exit"])
    _add_phi_flags(p)
    _add_common_flags(p)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--x0", default="0")
    p.add_argument("--paths", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--horizon", type=float, default=None)
    p.add_argument("--method", choices=["auto", "exact", "compound"], default="auto")
    p.set_defaults(func=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] == ["--from-manifest"]:
        if len(argv) != 2:
            sys.stderr.write("usage: sbmpot --from-manifest <path>\n")
            return 2
        try:
            with open(argv[1]) as fh:
                manifest = json.load(fh)
            argv = [str(f) for f in manifest["flags"]]
        except (OSError, KeyError, json.JSONDecodeError) as exc:
            sys.stderr.write(f"error: cannot replay manifest: {exc}\n")
            return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, argv)
    except _USAGE_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except NumericAccuracyError as exc:
        sys.stderr.write(f"numeric accuracy failure: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
