"""Chung-Lu and Erdos-Renyi random graphs.

Fast seeded sampling of sparse instances, exact numerics for the
giant-component fixed point and its near-critical asymptotics, component
census, branching exploration walks, and an experiment CLI that confronts
simulation with theory.
"""

from ._kernels import BACKEND as kernel_backend
from .analytics import (
    FixedPointSolution,
    asymptotic_giant_fraction,
    critical_theta,
    erdos_renyi_giant_fraction,
    giant_fraction_from_intensity,
    solve_fixed_point,
    survival_mass,
    survival_mass_prefactor,
    survival_mass_raw,
    survival_profile,
    weight,
    weight_integral,
    weight_moment_quadrature,
)
from .components import ComponentStats, bfs_components, cluster_of, components
from .exploration import (
    SIZE_BIASED,
    ExplorationBatch,
    ExplorationOutcome,
    OffspringSample,
    explore,
    explore_batch,
    offspring_batch,
    sample_offspring,
    sample_size_biased_type,
)
from .graph import SparseGraph, degree_sequence, read_edge_list, write_edge_list
from .params import CHUNG_LU, ERDOS_RENYI, ModelParams, QuadratureConfig
from .rng import Stream, derive_seed
from .sampler import SamplerReport, edge_probability, sample_edges, sample_graph
from .sweep import SweepSpec, SweepRow, point_seed, run_sweep, write_sweep_csv

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CHUNG_LU",
    "ComponentStats",
    "ERDOS_RENYI",
    "ExplorationBatch",
    "ExplorationOutcome",
    "FixedPointSolution",
    "ModelParams",
    "OffspringSample",
    "QuadratureConfig",
    "SIZE_BIASED",
    "SamplerReport",
    "SparseGraph",
    "Stream",
    "SweepRow",
    "SweepSpec",
    "asymptotic_giant_fraction",
    "bfs_components",
    "cluster_of",
    "components",
    "critical_theta",
    "degree_sequence",
    "derive_seed",
    "edge_probability",
    "erdos_renyi_giant_fraction",
    "explore",
    "explore_batch",
    "giant_fraction_from_intensity",
    "kernel_backend",
    "offspring_batch",
    "point_seed",
    "read_edge_list",
    "run_sweep",
    "sample_edges",
    "sample_graph",
    "sample_offspring",
    "sample_size_biased_type",
    "solve_fixed_point",
    "survival_mass",
    "survival_mass_prefactor",
    "survival_mass_raw",
    "survival_profile",
    "weight",
    "weight_integral",
    "weight_moment_quadrature",
    "write_edge_list",
]
