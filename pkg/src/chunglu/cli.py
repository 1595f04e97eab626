"""Command-line front end: experiment drivers over the library.

Subcommands: solve, gen, components, sweep, fit, explore.  Every command is
deterministic given its full flag set including --seed.  Exit codes:
0 success, 1 usage error, 2 numeric failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import _kernels as kernels
from .analytics import erdos_renyi_giant_fraction, solve_fixed_point
from .components import components
from .errors import (
    BracketError,
    EdgeListIntegrityError,
    EdgeListParseError,
    FitError,
    QuadratureError,
    UnsupportedRegimeError,
)
from .exploration import SIZE_BIASED, explore_batch
from .fitting import FIT_MODES, fit_rows
from .graph import read_edge_list, write_edge_list
from .params import ModelParams
from .sampler import sample_graph
from .sweep import SweepSpec, read_sweep_csv, run_sweep, write_sweep_csv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_IO = 3

_NUMERIC_ERRORS = (
    QuadratureError,
    BracketError,
    UnsupportedRegimeError,
    FitError,
    ValueError,
    ArithmeticError,
)
_IO_ERRORS = (EdgeListParseError, EdgeListIntegrityError, OSError)


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _IO_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def _build_parser() -> _Parser:
    parser = _Parser(prog="chunglu", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="fixed point and giant fraction for one parameter point")
    _add_model_flags(p)
    p.add_argument("--root-tol", type=float, default=1e-12)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="sample one instance to an edge-list file")
    _add_model_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("components", help="component census of an edge-list file")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--sizes", action="store_true", help="include the full size list")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("sweep", help="simulation vs theory over a parameter grid")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument(
        "--thetas",
        required=True,
        help="comma list '0.4,0.5' or grid 'log:<lo>:<hi>:<k>' / 'lin:<lo>:<hi>:<k>'",
    )
    p.add_argument(
        "--n",
        default="",
        help="comma list of instance sizes; empty for an analytic-only sweep",
    )
    p.add_argument("--seeds-per-point", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="base seed of the sweep")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fit", help="scaling fit over a sweep CSV")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--mode", choices=FIT_MODES, required=True)
    p.add_argument("--out", default="", help="write the fit JSON here as well")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("explore", help="branching exploration walk statistics")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--runs", type=int, required=True)
    p.add_argument("--step-cap", type=int, default=100_000)
    p.add_argument("--root", default=SIZE_BIASED, help="'size-biased' or 'fixed:<a>'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="", help="write the statistics JSON here as well")
    p.set_defaults(func=cmd_explore)

    return parser


def _add_model_flags(p) -> None:
    p.add_argument("--gamma", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument(
        "--lambda",
        dest="lam",
        type=float,
        help="constant-kernel strength; selects the Erdos-Renyi variant",
    )


def _model_from_args(args) -> ModelParams:
    if args.lam is not None:
        if args.gamma is not None or args.theta is not None:
            raise ValueError("--lambda excludes --gamma/--theta")
        return ModelParams.erdos_renyi(args.lam)
    if args.gamma is None or args.theta is None:
        raise ValueError("need --gamma and --theta (or --lambda)")
    return ModelParams.chung_lu(args.gamma, args.theta)


def cmd_solve(args) -> int:
    params = _model_from_args(args)
    if params.is_chung_lu:
        sol = solve_fixed_point(params, root_tol=args.root_tol)
        payload = {
            "variant": params.variant,
            "gamma": params.gamma,
            "theta": params.theta,
            "theta_c": sol.theta_c,
            "a_theta": sol.a_theta,
            "rho_bar": sol.rho_bar,
            "residual": sol.residual,
            "iterations": sol.iterations,
            "converged": sol.converged,
        }
        _emit(payload, args.format)
        if not sol.converged:
            print("error: fixed-point solve did not converge", file=sys.stderr)
            return EXIT_NUMERIC
        return EXIT_OK
    rho = erdos_renyi_giant_fraction(args.lam, tol=args.root_tol)
    _emit(
        {
            "variant": params.variant,
            "lam": args.lam,
            "rho_bar": rho,
            "residual": abs(1.0 - rho - np.exp(-args.lam * rho)),
        },
        args.format,
    )
    return EXIT_OK


def cmd_gen(args) -> int:
    params = _model_from_args(args)
    graph, report = sample_graph(params, args.n, args.seed)
    write_edge_list(graph, args.out)
    if report.capping_occurred:
        print(
            f"warning: {report.capped_pairs} pair probabilities were clamped to 1",
            file=sys.stderr,
        )
    _emit(
        {
            "n": report.n,
            "m": report.m,
            "variant": report.variant,
            "gamma": report.gamma,
            "theta": report.theta,
            "lam": report.lam,
            "seed": report.seed,
            "capped_pairs": report.capped_pairs,
            "candidates": report.candidates,
            "elapsed": report.elapsed,
            "backend": report.backend,
            "out": str(args.out),
        },
        "json",
    )
    return EXIT_OK


def cmd_components(args) -> int:
    graph = read_edge_list(args.in_path)
    stats = components(graph)
    payload = {
        "n": stats.n,
        "m": graph.m,
        "num_components": stats.num_components,
        "c1": stats.c1,
        "c2": stats.c2,
        "giant_fraction": stats.giant_fraction,
    }
    if args.sizes:
        payload["sizes"] = stats.sizes.tolist()
    _emit(payload, args.format)
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = SweepSpec(
        gamma=args.gamma,
        theta_values=_parse_theta_grid(args.thetas),
        n_values=_parse_int_list(args.n),
        seeds_per_point=args.seeds_per_point,
        base_seed=args.seed,
    )
    rows = run_sweep(spec, workers=args.workers)
    write_sweep_csv(rows, args.out)
    failures = [row for row in rows if row.status != "ok"]
    print(
        json.dumps(
            {
                "out": str(args.out),
                "rows": len(rows),
                "failed": len(failures),
                "backend": kernels.BACKEND,
            }
        )
    )
    if failures:
        for row in failures[:10]:
            print(
                f"error: point theta={row.theta} n={row.n}: {row.error}",
                file=sys.stderr,
            )
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_fit(args) -> int:
    rows = read_sweep_csv(args.in_path)
    report = fit_rows(rows, args.mode)
    payload = report.to_dict()
    text = json.dumps(payload, indent=2)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text + "\n")
    return EXIT_OK


def cmd_explore(args) -> int:
    params = ModelParams.chung_lu(args.gamma, args.theta)
    root = _parse_root(args.root)
    batch = explore_batch(
        params, n_walks=args.runs, step_cap=args.step_cap, seed=args.seed, root=root
    )
    finite = batch.cluster_sizes[batch.survived == 0]
    histogram = {}
    if len(finite):
        values, counts = np.unique(finite, return_counts=True)
        for v, c in zip(values.tolist(), counts.tolist()):
            if v <= 100:
                histogram[str(v)] = c
            else:
                histogram[">100"] = histogram.get(">100", 0) + c
    tail = _offspring_tail_fit(batch.offspring_hist, batch.offspring_draws)
    payload = {
        "gamma": args.gamma,
        "theta": args.theta,
        "runs": args.runs,
        "step_cap": args.step_cap,
        "root": args.root,
        "seed": args.seed,
        "backend": kernels.BACKEND,
        "survived": int(batch.survived.sum()),
        "survival_frequency": batch.survival_frequency,
        "survival_se": batch.survival_se,
        "offspring_draws": batch.offspring_draws,
        "cluster_size_histogram": histogram,
        "offspring_tail": tail,
    }
    text = json.dumps(payload, indent=2)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text + "\n")
    return EXIT_OK


def _offspring_tail_fit(hist, draws, x_lo=10, x_hi=1000, min_exceedances=10):
    """Log-log fit of the offspring exceedance curve on [x_lo, x_hi].

    Grid points with fewer than min_exceedances observations are dropped;
    returns None when fewer than 3 points remain.  The standard error is
    the plain OLS one (exceedance points share draws, so it understates).
    """
    from .fitting import _least_squares

    exceed = np.cumsum(hist[::-1])[::-1]
    xs, ys = [], []
    grid = np.unique(np.round(np.logspace(np.log10(x_lo), np.log10(x_hi), 25)))
    for x in grid.astype(int):
        if x >= len(exceed):
            break
        count = int(exceed[x])
        if count >= min_exceedances:
            xs.append(float(x))
            ys.append(count / draws)
    if len(xs) < 3:
        return None
    slope, stderr, _ = _least_squares(
        [np.log(x) for x in xs], [np.log(y) for y in ys]
    )
    return {
        "slope": slope,
        "stderr": stderr,
        "n_points": len(xs),
        "x_min": xs[0],
        "x_max": xs[-1],
    }


def _parse_root(text: str):
    if text == SIZE_BIASED:
        return SIZE_BIASED
    if text.startswith("fixed:"):
        return float(text.split(":", 1)[1])
    raise ValueError(f"--root must be 'size-biased' or 'fixed:<a>', got {text!r}")


def _parse_theta_grid(text: str) -> tuple:
    parts = text.split(":")
    if parts[0] in ("log", "lin"):
        if len(parts) != 4:
            raise ValueError(f"grid spec must be '{parts[0]}:<lo>:<hi>:<k>', got {text!r}")
        lo, hi, k = float(parts[1]), float(parts[2]), int(parts[3])
        if k < 1:
            raise ValueError("grid needs at least one point")
        if parts[0] == "log":
            return tuple(np.logspace(np.log10(lo), np.log10(hi), k).tolist())
        return tuple(np.linspace(lo, hi, k).tolist())
    return tuple(float(x) for x in text.split(","))


def _parse_int_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(float(x)) for x in text.split(","))


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
        return
    scalar = {k: v for k, v in payload.items() if not isinstance(v, (dict, list))}
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(scalar.keys())
    writer.writerow(["" if v is None else v for v in scalar.values()])


if __name__ == "__main__":
    sys.exit(main())
