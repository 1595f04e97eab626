"""Branching exploration of clusters in the infinite-size limit.

The walk reveals one cluster member per step: with A_t active vertices,
step t draws a vertex type from the size-biased density, adds its Poisson
offspring count and retires the vertex, A_{t+1} = A_t - 1 + N.  Absorption
at zero actives after t steps means the cluster has exactly t members;
a walk still active at the step cap is declared surviving.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as kernels
from ._kernels import pykern
from .analytics import weight_integral
from .params import ModelParams
from .rng import Stream

_MASK64 = (1 << 64) - 1

SIZE_BIASED = "size-biased"


@dataclass(frozen=True)
class OffspringSample:
    """One (vertex type, offspring count) draw."""

    type_x: float
    count: int


@dataclass(frozen=True)
class ExplorationOutcome:
    """Result of one walk.

    cluster_size is the absorption time (members found); None when the walk
    survived past the cap.  steps counts the steps actually executed, which
    may stop short of the cap once absorption is provably impossible
    (actives exceed the remaining budget).
    """

    cluster_size: int | None
    survived: bool
    steps: int


@dataclass(frozen=True)
class ExplorationBatch:
    """Aggregate of many independent walks.

    cluster_sizes holds -1 for surviving walks.  offspring_hist[k] counts
    size-biased offspring draws equal to k across all walks (last bucket
    aggregates overflow); offspring_draws is their total.
    """

    cluster_sizes: np.ndarray = field(repr=False)
    steps: np.ndarray = field(repr=False)
    survived: np.ndarray = field(repr=False)
    offspring_hist: np.ndarray = field(repr=False)
    offspring_draws: int
    n_walks: int
    step_cap: int

    @property
    def survival_frequency(self) -> float:
        return float(self.survived.sum()) / self.n_walks

    @property
    def survival_se(self) -> float:
        p = self.survival_frequency
        return math.sqrt(p * (1.0 - p) / self.n_walks)


def sample_size_biased_type(gamma: float, u: float) -> float:
    """Inverse-CDF transform of a uniform u into a size-biased vertex type.

    The size-biased density is the weight profile normalized by its mean;
    its CDF is z**((gamma-2)/(gamma-1)), so the inverse is
    u**((gamma-1)/(gamma-2)).
    """
    if not gamma > 2.0:
        raise ValueError(f"gamma must be > 2, got {gamma}")
    if not 0.0 < u <= 1.0:
        raise ValueError(f"u must lie in (0, 1], got {u}")
    return u ** ((gamma - 1.0) / (gamma - 2.0))


def sample_offspring(params: ModelParams, rng: Stream) -> OffspringSample:
    """Draw a size-biased type X, then a Poisson(theta * w(X) * B) count."""
    _require_chung_lu(params)
    gamma, theta = params.gamma, params.theta
    x = sample_size_biased_type(gamma, rng.uniform())
    lam = theta * weight_integral(gamma) * x ** (-1.0 / (gamma - 1.0))
    return OffspringSample(type_x=x, count=rng.poisson(lam))


def explore(
    params: ModelParams,
    root=SIZE_BIASED,
    step_cap: int = 100_000,
    rng: Stream | None = None,
) -> ExplorationOutcome:
    """Run one walk; root is SIZE_BIASED or a fixed type in (0, 1]."""
    _require_chung_lu(params)
    if step_cap < 1:
        raise ValueError(f"step_cap must be >= 1, got {step_cap}")
    if rng is None:
        raise ValueError("explore needs an explicit rng Stream")
    root_a = _root_value(root)
    cluster, steps, survived, _ = pykern.walk(
        rng,
        params.gamma,
        params.theta,
        weight_integral(params.gamma),
        step_cap,
        root_a,
    )
    return ExplorationOutcome(
        cluster_size=None if survived else int(cluster),
        survived=bool(survived),
        steps=int(steps),
    )


def explore_batch(
    params: ModelParams,
    n_walks: int,
    step_cap: int,
    seed: int,
    root=SIZE_BIASED,
) -> ExplorationBatch:
    """n_walks independent walks on substreams (seed, walk_index)."""
    _require_chung_lu(params)
    if n_walks < 1:
        raise ValueError(f"n_walks must be >= 1, got {n_walks}")
    if step_cap < 1:
        raise ValueError(f"step_cap must be >= 1, got {step_cap}")
    root_a = _root_value(root)
    seed = int(seed) & _MASK64
    cluster, steps, survived, hist, draws = kernels.explore_batch(
        params.gamma,
        params.theta,
        weight_integral(params.gamma),
        n_walks,
        step_cap,
        seed,
        root_a,
    )
    return ExplorationBatch(
        cluster_sizes=cluster,
        steps=steps,
        survived=survived,
        offspring_hist=hist,
        offspring_draws=int(draws),
        n_walks=n_walks,
        step_cap=step_cap,
    )


def offspring_batch(params: ModelParams, n_draws: int, seed: int):
    """n_draws independent offspring samples; returns (types, counts) arrays."""
    _require_chung_lu(params)
    if n_draws < 1:
        raise ValueError(f"n_draws must be >= 1, got {n_draws}")
    seed = int(seed) & _MASK64
    return kernels.offspring_batch(
        params.gamma, params.theta, weight_integral(params.gamma), n_draws, seed
    )


def _root_value(root) -> float:
    """0.0 encodes the size-biased root; a fixed type passes through."""
    if isinstance(root, str):
        if root != SIZE_BIASED:
            raise ValueError(f"unknown root kind {root!r}")
        return 0.0
    a = float(root)
    if not 0.0 < a <= 1.0:
        raise ValueError(f"fixed root type must lie in (0, 1], got {a}")
    return a


def _require_chung_lu(params: ModelParams) -> None:
    if not params.is_chung_lu:
        raise ValueError("exploration applies to the chung-lu variant only")
