#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the three hot loops on both backends with the same seeds, checks the
outputs are bit-identical, and prints wall times with speedups.  Sizes are
chosen so the Python fallback finishes in seconds.

Usage: python benchmarks/bench_backends.py [--scale N]
"""

import argparse
import time

import numpy as np

from chunglu._kernels import pykern

try:
    from chunglu._kernels import _ckern
except ImportError:
    _ckern = None


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - start, out


def same(a, b):
    for x, y in zip(a, b):
        if isinstance(x, np.ndarray):
            if not np.array_equal(x, y):
                return False
        elif x != y:
            return False
    return True


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--scale", type=float, default=1.0,
                        help="multiply all problem sizes")
    args = parser.parse_args()
    s = args.scale

    if _ckern is None:
        print("compiled kernels are not built; nothing to compare")
        return 1

    n_sample = int(200_000 * s)
    n_walks = int(20_000 * s)
    n_draws = int(100_000 * s)

    cases = [
        (
            f"sample_chunglu_edges(n={n_sample}, gamma=4, theta=0.5)",
            lambda mod: (mod.sample_chunglu_edges, (n_sample, 4.0, 0.5, 1)),
        ),
        (
            f"sample_er_edges(n={n_sample}, lam=2)",
            lambda mod: (mod.sample_er_edges, (n_sample, 2.0, 2)),
        ),
        (
            f"explore_batch({n_walks} subcritical walks)",
            lambda mod: (mod.explore_batch, (4.0, 1.0 / 6.0, 1.5, n_walks, 10**5, 3, 0.0)),
        ),
        (
            f"offspring_batch({n_draws} draws)",
            lambda mod: (mod.offspring_batch, (4.0, 1.0 / 6.0, 1.5, n_draws, 4)),
        ),
    ]

    u, v, _, _ = _ckern.sample_chunglu_edges(n_sample, 4.0, 0.5, 5)
    cases.append(
        (
            f"union_find_labels(n={n_sample}, m={len(u)})",
            lambda mod: (mod.union_find_labels, (n_sample, u, v)),
        )
    )

    width = max(len(name) for name, _ in cases)
    print(f"{'kernel':<{width}}  {'cython':>9}  {'python':>9}  {'speedup':>8}  match")
    for name, select in cases:
        fn_c, args_c = select(_ckern)
        fn_p, args_p = select(pykern)
        t_c, out_c = timed(fn_c, *args_c)
        t_p, out_p = timed(fn_p, *args_p)
        ok = same(out_c, out_p)
        print(
            f"{name:<{width}}  {t_c:>8.3f}s  {t_p:>8.3f}s  {t_p / t_c:>7.1f}x  {ok}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
