"""Parameter sweeps: simulation vs theory over (theta, n, seed) grids.

Every grid point gets its own seed derived as a pure function of
(base_seed, gamma bits, theta bits, n, replicate index), so results do not
depend on how the grid is partitioned across workers.  Rows are emitted in
grid order regardless of worker scheduling, and a failing point yields a
flagged row instead of voiding the sweep.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analytics import critical_theta, solve_fixed_point
from .components import components
from .params import ModelParams
from .rng import derive_seed, double_bits
from .sampler import sample_graph

SWEEP_SCHEMA = "cl-sweep-1"

SWEEP_COLUMNS = [
    "schema",
    "gamma",
    "theta",
    "n",
    "seed",
    "m",
    "c1",
    "c2",
    "giant_fraction",
    "rho_bar_analytic",
    "a_theta",
    "max_cluster_normalized",
    "elapsed",
    "status",
    "error",
]

_REAL_COLUMNS = {
    "gamma",
    "theta",
    "giant_fraction",
    "rho_bar_analytic",
    "a_theta",
    "max_cluster_normalized",
    "elapsed",
}


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a gamma, a theta grid, instance sizes, and replication.

    An empty n_values list requests an analytic-only sweep (fixed point and
    giant fraction per theta, no graphs).
    """

    gamma: float
    theta_values: tuple
    n_values: tuple = ()
    seeds_per_point: int = 1
    base_seed: int = 0
    root_tol: float = 1e-12

    def __post_init__(self):
        if len(self.theta_values) == 0:
            raise ValueError("theta grid must be nonempty")
        if self.n_values and self.seeds_per_point < 1:
            raise ValueError("seeds_per_point must be >= 1")


@dataclass
class SweepRow:
    """One CSV row; graph fields are None on analytic-only rows."""

    gamma: float
    theta: float
    n: int | None = None
    seed: int | None = None
    m: int | None = None
    c1: int | None = None
    c2: int | None = None
    giant_fraction: float | None = None
    rho_bar_analytic: float | None = None
    a_theta: float | None = None
    max_cluster_normalized: float | None = None
    elapsed: float | None = None
    status: str = "ok"
    error: str = ""
    schema: str = field(default=SWEEP_SCHEMA)


def point_seed(base_seed: int, gamma: float, theta: float, n: int, replicate: int) -> int:
    """Seed of one grid point; stable under grid repartitioning."""
    return derive_seed(
        base_seed, double_bits(gamma), double_bits(theta), n, replicate
    )


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[SweepRow]:
    """Execute the sweep; one row per (theta, n, replicate) in grid order."""
    tasks = _grid(spec)
    if workers <= 1:
        return [_run_point(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_point, tasks, chunksize=1))


def _grid(spec: SweepSpec) -> list:
    tasks = []
    for theta in spec.theta_values:
        if not spec.n_values:
            tasks.append((spec, float(theta), None, 0))
            continue
        for n in spec.n_values:
            for rep in range(spec.seeds_per_point):
                tasks.append((spec, float(theta), int(n), rep))
    return tasks


def _run_point(task) -> SweepRow:
    spec, theta, n, rep = task
    row = SweepRow(gamma=spec.gamma, theta=theta, n=n)
    try:
        params = ModelParams.chung_lu(spec.gamma, theta)
        solution = solve_fixed_point(params, root_tol=spec.root_tol)
        row.rho_bar_analytic = solution.rho_bar
        row.a_theta = solution.a_theta
        if n is None:
            return row
        seed = point_seed(spec.base_seed, spec.gamma, theta, n, rep)
        row.seed = seed
        start = time.perf_counter()
        graph, report = sample_graph(params, n, seed)
        stats = components(graph)
        row.elapsed = time.perf_counter() - start
        row.m = graph.m
        row.c1 = stats.c1
        row.c2 = stats.c2
        row.giant_fraction = stats.giant_fraction
        row.max_cluster_normalized = stats.c1 / n ** (1.0 / (spec.gamma - 1.0))
    except Exception as exc:  # failure isolation per point
        row.status = "error"
        row.error = f"{type(exc).__name__}: {exc}"
    return row


def write_sweep_csv(rows, path) -> None:
    """UTF-8, LF-terminated CSV; reals carry full round-trip precision."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow(
                [_format_cell(getattr(row, col)) for col in SWEEP_COLUMNS]
            )


def read_sweep_csv(path):
    """Parse a sweep CSV back into dict rows; validates the schema column."""
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty CSV") from None
        if header != SWEEP_COLUMNS:
            raise ValueError(
                f"{path}: unexpected header {header!r}; this tool reads schema "
                f"{SWEEP_SCHEMA!r} columns {SWEEP_COLUMNS!r}"
            )
        rows = []
        for record in reader:
            if not record:
                continue
            row = dict(zip(SWEEP_COLUMNS, record))
            if row["schema"] != SWEEP_SCHEMA:
                raise ValueError(
                    f"{path}: unknown schema id {row['schema']!r} "
                    f"(expected {SWEEP_SCHEMA!r})"
                )
            for col in ("gamma", "theta", "giant_fraction", "rho_bar_analytic",
                        "a_theta", "max_cluster_normalized", "elapsed"):
                row[col] = float(row[col]) if row[col] != "" else None
            for col in ("n", "seed", "m", "c1", "c2"):
                row[col] = int(row[col]) if row[col] != "" else None
            rows.append(row)
    return rows


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)
