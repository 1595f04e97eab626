"""Connected-component census of sampled graphs.

Union-find over the edge array is the production path (it streams edges
without touching adjacency); an independent breadth-first search is kept
alongside as the cross-checking oracle and as the engine of cluster_of.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as kernels
from .graph import SparseGraph


@dataclass(frozen=True)
class ComponentStats:
    """Component sizes in descending order plus the headline numbers.

    c2 is 0 when the graph has a single component.  c1/n is reported as
    giant_fraction; the c2/c1 collapse across a parameter sweep is the
    empirical signature of the phase transition.
    """

    sizes: np.ndarray = field(repr=False)
    c1: int
    c2: int
    giant_fraction: float
    n: int

    @property
    def num_components(self) -> int:
        return int(len(self.sizes))


def component_labels(g: SparseGraph) -> np.ndarray:
    """Root label per vertex (equal labels = same component)."""
    return kernels.union_find_labels(g.n, g.edges_u, g.edges_v)


def components(g: SparseGraph) -> ComponentStats:
    """Exact component census via union by size with path compression."""
    labels = component_labels(g)
    return _stats_from_labels(labels, g.n)


def bfs_components(g: SparseGraph) -> ComponentStats:
    """Same census via breadth-first search; the dual-algorithm oracle."""
    visited = np.zeros(g.n, dtype=bool)
    sizes = []
    for start in range(g.n):
        if visited[start]:
            continue
        visited[start] = True
        count = 1
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in g.neighbors(x).tolist():
                if not visited[y]:
                    visited[y] = True
                    count += 1
                    frontier.append(y)
        sizes.append(count)
    sizes = np.sort(np.array(sizes, dtype=np.int64))[::-1]
    return _stats_from_sizes(sizes, g.n)


def cluster_of(g: SparseGraph, v: int) -> int:
    """Size of the component containing v, by search from v only."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    visited = np.zeros(g.n, dtype=bool)
    visited[v] = True
    count = 1
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for y in g.neighbors(x).tolist():
            if not visited[y]:
                visited[y] = True
                count += 1
                frontier.append(y)
    return count


def _stats_from_labels(labels: np.ndarray, n: int) -> ComponentStats:
    counts = np.bincount(labels, minlength=n)
    sizes = np.sort(counts[counts > 0])[::-1].astype(np.int64)
    return _stats_from_sizes(sizes, n)


def _stats_from_sizes(sizes: np.ndarray, n: int) -> ComponentStats:
    c1 = int(sizes[0]) if len(sizes) else 0
    c2 = int(sizes[1]) if len(sizes) > 1 else 0
    return ComponentStats(
        sizes=sizes,
        c1=c1,
        c2=c2,
        giant_fraction=(c1 / n) if n else 0.0,
        n=n,
    )
