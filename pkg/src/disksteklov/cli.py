"""Command-line front end: CSV curve tables and JSON check reports.

Commands
--------
curves        CSV ``b,n,lambda`` over a field grid and mode window
groundstate   CSV ``b,n_min,lambda,asym,residual`` over a field grid
crossings     CSV ``n,nu,z,lambda,g_residual,defining_residual``
weakfield     JSON pass/fail report for the weak-field laws at one flux
strongfield   JSON pass/fail report for the strong-field ground-state law
norms         JSON pass/fail report for the operator-norm decay rates
oracle-check  CSV closed-form vs Riccati-shooting comparison on a grid
alpha         print the ground-state constant alpha

Exit codes: 0 success, 1 a check failed, 2 bad configuration, 3 numerical
failure.  All numeric output is formatted to 12 significant digits, so a
fixed configuration yields byte-identical files.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import asympt, intersect, oracle, specfun, steklov
from .errors import DiskSteklovError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

ORACLE_GRID_B = (0.5, 1.0, 5.0, 20.0)
ORACLE_GRID_N = range(-10, 11)
ORACLE_MIXED_TOL = 1e-6


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one command, one flux value, optional grids."""

    command: str
    nu: float = 0.0
    b_grid: tuple | None = None      # (min, max, count, "linear" | "log")
    n_range: tuple | None = None     # (lo, hi)
    out_path: str = "-"
    format: str = "csv"


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _b_values(cfg: RunConfig):
    lo, hi, count, spacing = cfg.b_grid
    if spacing == "log":
        return np.logspace(math.log10(lo), math.log10(hi), count)
    return np.linspace(lo, hi, count)


def _write_text(cfg: RunConfig, text: str) -> None:
    if cfg.out_path == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _write_checks(cfg: RunConfig, checks: list) -> int:
    _write_text(cfg, json.dumps(checks, indent=2) + "\n")
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_CHECK_FAILED


def _check(name: str, anchor: str, value: float, bound) -> dict:
    if isinstance(bound, (tuple, list)):
        ok = bound[0] <= value <= bound[1]
        bound = list(bound)
    else:
        ok = abs(value) <= bound
    return {"check": name, "anchor": anchor, "value": value, "bound": bound, "pass": bool(ok)}


def _cmd_alpha(cfg: RunConfig) -> int:
    alpha = specfun.alpha_root()
    # truncate, not round: the canonical first 10 decimals appear verbatim
    print(f"alpha = {math.floor(alpha * 1e10) / 1e10:.10f}")
    return EXIT_OK


def _cmd_curves(cfg: RunConfig) -> int:
    n_lo, n_hi = cfg.n_range
    table = steklov.sample_curves(cfg.nu, _b_values(cfg), n_lo, n_hi)
    lines = ["b,n,lambda"]
    for b, entries in table.rows:
        for n, lam in entries:
            lines.append(f"{_fmt(b)},{n},{_fmt(lam)}")
    _write_text(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_groundstate(cfg: RunConfig) -> int:
    alpha = specfun.alpha_root()
    shift = (alpha * alpha + 2.0) / 6.0
    lines = ["b,n_min,lambda,asym,residual"]
    for b in _b_values(cfg):
        if b <= 0.0:
            continue
        gs = steklov.ground_state(b, cfg.nu)
        asym = alpha * math.sqrt(b) + shift
        residual = (gs.value - asym) * math.sqrt(b)
        lines.append(f"{_fmt(b)},{gs.n_min},{_fmt(gs.value)},{_fmt(asym)},{_fmt(residual)}")
    _write_text(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_crossings(cfg: RunConfig) -> int:
    n_lo, n_hi = cfg.n_range
    lines = ["n,nu,z,lambda,g_residual,defining_residual"]
    for n in range(n_lo, n_hi + 1):
        cp = intersect.crossing(n, cfg.nu)
        lines.append(
            f"{n},{_fmt(cfg.nu)},{_fmt(cp.z)},{_fmt(cp.lambda_at_z)},"
            f"{_fmt(cp.g_residual)},{_fmt(cp.defining_residual)}"
        )
    _write_text(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_weakfield(cfg: RunConfig) -> int:
    nu = cfg.nu
    checks = []
    if nu == 0.0:
        lam = lambda n, b: steklov.exterior_eigenvalue(steklov.SpectralParams(n, b, 0.0))
        checks.append(_check(
            "lambda0-log-law", "lambda_0(b)*log(b) -> -2",
            lam(0, 1e-8) * math.log(1e-8), (-2.1, -1.9)))
        checks.append(_check(
            "lambda1-bloglaw", "(lambda_1(b)-1)/(b*log b) -> 1",
            (lam(1, 1e-8) - 1.0) / (1e-8 * math.log(1e-8)), (0.9, 1.1)))
        checks.append(_check(
            "lambda3-linear", "(lambda_3(b)-3)/b -> -3/2",
            (lam(3, 1e-6) - 3.0) / 1e-6, (-1.51, -1.49)))
    else:
        model = asympt.model_weakfield(0, nu)
        checks.append(_check(
            "flux-power-coefficient",
            f"(lambda_0(b,nu)-|nu|)/b^|nu| -> 2*G(1-|nu|)G(|nu|+1/2)/(sqrt(pi)G(|nu|))",
            model.residual(1e-8), 1e-2))
        checks.append(_check(
            "flux-rate-exponent", "loglog slope of gap(b) -> |nu|",
            asympt.fit_gap_exponent(nu) - abs(nu), 0.05))
        for n in (1, -1):
            m1 = asympt.model_weakfield(n, nu)
            worst = max(abs(m1.residual(b)) for b in (1e-4, 1e-6, 1e-8))
            checks.append(_check(
                f"flux-mode{n}-bounded",
                f"(lambda_{n}(b,nu)-(1{'-' if n == 1 else '+'}nu))/b^(1-|nu|) bounded",
                worst, 10.0))
    return _write_checks(cfg, checks)


def _cmd_strongfield(cfg: RunConfig) -> int:
    model = asympt.model_groundstate_strongfield()
    checks = [
        _check("groundstate-residual",
               "(gs(b,nu) - alpha*sqrt(b) - (alpha^2+2)/6)*sqrt(b) bounded",
               model.residual(b, cfg.nu), 10.0)
        for b in (1e2, 1e3, 1e4)
    ]
    return _write_checks(cfg, checks)


def _cmd_norms(cfg: RunConfig) -> int:
    nu, n_max = cfg.nu, 40
    checks = []
    if nu == 0.0:
        norm = steklov.dtn_diff_norm(1e-6, 0.0, n_max)
        checks.append(_check("norm-log-rate", "norm*|log b| in [1.5, 2.5] at b=1e-6",
                             norm * abs(math.log(1e-6)), (1.5, 2.5)))
    else:
        for b in (1e-4, 1e-6, 1e-8):
            norm = steklov.dtn_diff_norm(b, nu, n_max)
            checks.append(_check(f"norm-power-rate-b{b:g}",
                                 "norm/b^|nu| bounded by 5",
                                 norm / b ** abs(nu), 5.0))
    for b in (1e-4, 1e-6):
        gaps = dict(steklov.dtn_gaps(b, nu, n_max))
        checks.append(_check(f"tail-gap-b{b:g}",
                             "gap at |n|=n_max below gap at n=0",
                             gaps[n_max] - gaps[0], (-math.inf, 0.0)))
    return _write_checks(cfg, checks)


def _cmd_oracle_check(cfg: RunConfig) -> int:
    lines = ["n,b,nu,closed,shoot,mixed_err"]
    worst = 0.0
    for n in ORACLE_GRID_N:
        for b in ORACLE_GRID_B:
            p = steklov.SpectralParams(n=n, b=b, nu=cfg.nu)
            closed = steklov.exterior_eigenvalue(p)
            shot = oracle.exterior_shoot(p)
            err = abs(closed - shot) / (1.0 + abs(closed))
            worst = max(worst, err)
            lines.append(f"{n},{_fmt(b)},{_fmt(cfg.nu)},{_fmt(closed)},{_fmt(shot)},{_fmt(err)}")
    _write_text(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if worst <= ORACLE_MIXED_TOL else EXIT_CHECK_FAILED


_COMMANDS = {
    "curves": _cmd_curves,
    "groundstate": _cmd_groundstate,
    "crossings": _cmd_crossings,
    "weakfield": _cmd_weakfield,
    "strongfield": _cmd_strongfield,
    "norms": _cmd_norms,
    "oracle-check": _cmd_oracle_check,
    "alpha": _cmd_alpha,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disksteklov",
        description="Magnetic Steklov eigenvalues of the disk: tables and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, b_grid=False, n_range=False):
        p.add_argument("--nu", type=float, default=0.0,
                       help="flux parameter in (-1/2, 1/2] (default 0)")
        p.add_argument("--out", default="-", help="output path ('-' = stdout)")
        p.add_argument("--format", choices=("csv", "json"), default=None,
                       help="output format (fixed per command; kept for explicitness)")
        if b_grid:
            p.add_argument("--b-grid", nargs=3, type=float, required=True,
                           metavar=("MIN", "MAX", "COUNT"),
                           help="field grid: min max count")
            p.add_argument("--log", action="store_true", help="log-spaced field grid")
        if n_range:
            p.add_argument("--n-range", nargs=2, type=int, required=True,
                           metavar=("LO", "HI"), help="mode window: lo hi")

    common(sub.add_parser("curves", help="eigenvalue curves as CSV"),
           b_grid=True, n_range=True)
    common(sub.add_parser("groundstate", help="ground-state table as CSV"), b_grid=True)
    common(sub.add_parser("crossings", help="crossing points as CSV"), n_range=True)
    common(sub.add_parser("weakfield", help="weak-field law checks as JSON"))
    common(sub.add_parser("strongfield", help="strong-field law checks as JSON"))
    common(sub.add_parser("norms", help="operator-norm decay checks as JSON"))
    common(sub.add_parser("oracle-check", help="closed form vs shooting as CSV"))
    common(sub.add_parser("alpha", help="print the ground-state constant"))
    return parser


def _to_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    b_grid = None
    if getattr(args, "b_grid", None) is not None:
        lo, hi, count = args.b_grid
        count = int(count)
        spacing = "log" if getattr(args, "log", False) else "linear"
        if count < 1:
            parser.error("--b-grid count must be >= 1")
        if spacing == "log" and lo <= 0.0:
            parser.error("--b-grid with --log requires min > 0")
        if hi < lo:
            parser.error("--b-grid requires max >= min")
        b_grid = (lo, hi, count, spacing)
    n_range = None
    if getattr(args, "n_range", None) is not None:
        n_lo, n_hi = args.n_range
        if n_lo > n_hi:
            parser.error("--n-range requires lo <= hi")
        n_range = (n_lo, n_hi)
    if not -0.5 < args.nu <= 0.5:
        parser.error("--nu must lie in (-1/2, 1/2]")
    fmt = args.format or ("json" if args.command in ("weakfield", "strongfield", "norms")
                          else "csv")
    return RunConfig(command=args.command, nu=args.nu, b_grid=b_grid,
                     n_range=n_range, out_path=args.out, format=fmt)


def run(cfg: RunConfig) -> int:
    """Execute one parsed configuration; returns the process exit code."""
    return _COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)  # exits with code 2 on a parse error
    cfg = _to_config(args, parser)
    try:
        return run(cfg)
    except DiskSteklovError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
