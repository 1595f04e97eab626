"""Graph instance generation.

Edges appear independently with probability min(1, kernel/n); the sampler
walks each source row with geometric skips so the expected work is
O(n + m), not O(n^2).  Identical (params, n, seed) reproduce the identical
edge set bit for bit, on either kernel backend.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import _kernels as kernels
from .analytics import weight
from .graph import SparseGraph
from .params import ModelParams

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SamplerReport:
    """Provenance and accounting for one sampled instance.

    capped_pairs counts vertex pairs whose raw kernel probability reached 1
    before clamping (the regime where the sparse heuristics degrade);
    candidates counts accept tests, the O(n + m) work certificate.
    """

    n: int
    m: int
    variant: str
    gamma: float | None
    theta: float | None
    lam: float | None
    seed: int
    capped_pairs: int
    candidates: int
    elapsed: float
    backend: str

    @property
    def capping_occurred(self) -> bool:
        return self.capped_pairs > 0


def edge_probability(i: int, j: int, params: ModelParams, n: int) -> float:
    """Probability of the edge between 1-based vertices i and j.

    min(1, theta*w(i/n)*w(j/n)/n) for the product kernel, min(1, lam/n)
    for the constant kernel; symmetric in (i, j).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"vertex indices must lie in 1..{n}, got ({i}, {j})")
    if i == j:
        raise IndexError("self-pairs have no edge probability")
    if params.is_chung_lu:
        p = params.theta * weight(i / n, params.gamma) * weight(j / n, params.gamma) / n
    else:
        p = params.lam / n
    return min(1.0, p)


def sample_edges(params: ModelParams, n: int, seed: int):
    """Sample one instance; returns (u, v, report) with edges u[k] < v[k]."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    seed = int(seed) & _MASK64
    start = time.perf_counter()
    if params.is_chung_lu:
        u, v, capped, candidates = kernels.sample_chunglu_edges(
            n, params.gamma, params.theta, seed
        )
    else:
        u, v, capped, candidates = kernels.sample_er_edges(n, params.lam, seed)
    elapsed = time.perf_counter() - start
    report = SamplerReport(
        n=n,
        m=int(len(u)),
        variant=params.variant,
        gamma=params.gamma,
        theta=params.theta,
        lam=params.lam,
        seed=seed,
        capped_pairs=int(capped),
        candidates=int(candidates),
        elapsed=elapsed,
        backend=kernels.BACKEND,
    )
    return u, v, report


def sample_graph(params: ModelParams, n: int, seed: int):
    """Sample one instance as a SparseGraph; returns (graph, report)."""
    u, v, report = sample_edges(params, n, seed)
    return SparseGraph.from_edges(n, u, v), report
