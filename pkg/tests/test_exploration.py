"""Branching exploration: samplers, identities, and the graph local limit."""

import math

import numpy as np
import pytest
from scipy import stats
from scipy.integrate import quad

from chunglu import analytics as an
from chunglu.components import cluster_of
from chunglu.exploration import (
    SIZE_BIASED,
    explore,
    explore_batch,
    offspring_batch,
    sample_offspring,
    sample_size_biased_type,
)
from chunglu.params import ModelParams
from chunglu.rng import Stream
from chunglu.sampler import sample_graph

CL = ModelParams.chung_lu


class TestSizeBiasedType:
    def test_endpoint(self):
        assert sample_size_biased_type(4.0, 1.0) == 1.0

    def test_inverse_cdf_value(self):
        # F(z) = z**((gamma-2)/(gamma-1)); at gamma=3, F(0.25) = 0.5
        x = sample_size_biased_type(3.0, 0.5)
        assert x == pytest.approx(0.25, rel=1e-12)
        assert 0.25 ** (1.0 / 2.0) == pytest.approx(0.5)

    def test_domain(self):
        with pytest.raises(ValueError):
            sample_size_biased_type(2.0, 0.5)
        with pytest.raises(ValueError):
            sample_size_biased_type(4.0, 0.0)

    def test_empirical_mean_matches_quadrature(self):
        gamma, n = 4.0, 10**6
        rng = Stream(31, 0)
        total = 0.0
        for _ in range(n):
            total += sample_size_biased_type(gamma, rng.uniform())
        mean = total / n
        b = an.weight_integral(gamma)
        want, _ = quad(
            lambda z: z * z ** (-1.0 / (gamma - 1.0)) / b, 0.0, 1.0,
            epsabs=1e-12, epsrel=1e-10,
        )
        # var of the size-biased type is finite and below 1/12-ish
        se = math.sqrt(0.1 / n)
        assert abs(mean - want) <= 3.0 * se

    @pytest.mark.parametrize("gamma", [2.5, 3.0, 4.0])
    def test_kolmogorov_smirnov(self, gamma):
        n = 10**5
        rng = Stream(77, int(gamma * 10))
        xs = np.array([sample_size_biased_type(gamma, rng.uniform()) for _ in range(n)])
        e = (gamma - 2.0) / (gamma - 1.0)
        d = stats.kstest(xs, lambda z: np.asarray(z) ** e).statistic
        assert d < 1.628 / math.sqrt(n)  # 1% critical value


class TestOffspring:
    def test_zero_theta_zero_count(self):
        rng = Stream(1, 0)
        for _ in range(50):
            assert sample_offspring(CL(4.0, 0.0), rng).count == 0

    def test_type_in_range(self):
        rng = Stream(2, 0)
        for _ in range(200):
            s = sample_offspring(CL(2.5, 0.3), rng)
            assert 0.0 < s.type_x <= 1.0
            assert s.count >= 0

    @pytest.mark.parametrize(
        "gamma,theta,seed",
        [
            (4.0, 1.0 / 6.0, 41),   # subcritical (theta_c = 1/3)
            (4.0, 0.5, 42),         # supercritical
            (5.0, 0.25, 43),        # subcritical (theta_c = 1/2)
            (5.0, 0.8, 44),         # supercritical
        ],
    )
    def test_mean_identity(self, gamma, theta, seed):
        # mixture mean is theta * (second weight moment) = theta / theta_c
        n = 10**6
        _, counts = offspring_batch(CL(gamma, theta), n, seed)
        want = theta * an.weight_moment_quadrature(gamma, 2)
        assert want == pytest.approx(theta / an.critical_theta(gamma), rel=1e-9)
        se = counts.std() / math.sqrt(n)
        assert abs(counts.mean() - want) <= 3.0 * se

    def test_tail_exponent(self):
        # exceedance curve of the offspring count decays with exponent
        # -(gamma-2); regression over the populated part of [10, 1000]
        n = 2 * 10**6
        _, counts = offspring_batch(CL(4.0, 1.0 / 6.0), n, 5025)
        hist = np.bincount(np.minimum(counts, 2000))
        exceed = np.cumsum(hist[::-1])[::-1]
        xs, ys = [], []
        for x in np.unique(np.round(np.logspace(1, 3, 25)).astype(int)):
            if x < len(exceed) and exceed[x] >= 10:
                xs.append(math.log(x))
                ys.append(math.log(exceed[x] / n))
        assert len(xs) >= 5
        x = np.array(xs)
        y = np.array(ys)
        slope = float(((x - x.mean()) * (y - y.mean())).sum() / ((x - x.mean()) ** 2).sum())
        assert slope == pytest.approx(-2.0, abs=0.15)


class TestWalk:
    def test_zero_theta_cluster_one(self):
        rng = Stream(3, 0)
        for _ in range(20):
            out = explore(CL(4.0, 0.0), SIZE_BIASED, 1000, rng)
            assert out.cluster_size == 1
            assert not out.survived
            assert out.steps == 1

    def test_absorbed_outcome_invariant(self):
        batch = explore_batch(CL(4.0, 0.25), 2000, 10**4, 7)
        dead = batch.survived == 0
        assert (batch.cluster_sizes[dead] == batch.steps[dead]).all()
        assert (batch.cluster_sizes[dead] >= 1).all()
        assert (batch.cluster_sizes[batch.survived == 1] == -1).all()

    def test_single_walk_matches_batch_stream(self):
        params = CL(4.0, 0.3)
        batch = explore_batch(params, 50, 10**4, 99)
        for k in range(50):
            out = explore(params, SIZE_BIASED, 10**4, Stream(99, k))
            want = batch.cluster_sizes[k]
            if out.survived:
                assert batch.survived[k] == 1
            else:
                assert out.cluster_size == want

    def test_subcritical_never_hits_cap(self):
        batch = explore_batch(CL(4.0, 1.0 / 6.0), 10**4, 10**6, 17)
        assert int(batch.survived.sum()) == 0

    def test_root_validation(self):
        with pytest.raises(ValueError):
            explore_batch(CL(4.0, 0.2), 10, 100, 1, root="typed")
        with pytest.raises(ValueError):
            explore_batch(CL(4.0, 0.2), 10, 100, 1, root=1.5)
        with pytest.raises(ValueError):
            explore_batch(CL(4.0, 0.2), 10, 100, 1, root=0.0)


class TestSurvivalIdentities:
    def test_size_biased_survival_frequency(self):
        # survival probability of the size-biased walk is a_theta/(theta*B):
        # the fixed point integral divided by the offspring normalization
        params = CL(4.0, 0.5)
        sol = an.solve_fixed_point(params)
        target = sol.a_theta / (0.5 * an.weight_integral(4.0))
        # cross-check the identity by quadrature before trusting it:
        # integral of (density) * survival_profile over types
        b = an.weight_integral(4.0)
        val, _ = quad(
            lambda z: z ** (-1.0 / 3.0) / b * an.survival_profile(z, sol, params),
            0.0, 1.0, epsabs=1e-11, epsrel=1e-9, limit=200,
        )
        assert val == pytest.approx(target, abs=1e-7)
        batch = explore_batch(params, 2 * 10**4, 2 * 10**4, 2026)
        se = batch.survival_se
        assert abs(batch.survival_frequency - target) <= 3.0 * se

    def test_fixed_type_survival_frequency(self):
        params = CL(4.0, 0.5)
        sol = an.solve_fixed_point(params)
        a = 0.5
        target = an.survival_profile(a, sol, params)
        batch = explore_batch(params, 2 * 10**4, 2 * 10**4, 31, root=a)
        se = max(batch.survival_se, 1e-9)
        assert abs(batch.survival_frequency - target) <= 3.0 * se

    def test_step_cap_doubling_shift_within_noise(self):
        params = CL(4.0, 0.5)
        a = explore_batch(params, 10**4, 10**4, 55)
        b = explore_batch(params, 10**4, 2 * 10**4, 55)
        se = math.sqrt(a.survival_se**2 + b.survival_se**2)
        assert abs(a.survival_frequency - b.survival_frequency) <= 3.0 * se


class TestGraphConsistency:
    def test_small_cluster_distribution_matches_graph(self):
        # the walk is the infinite-size local limit: cluster-size
        # frequencies on {1..5} from walks match those of size-biased
        # vertices on one large sampled instance
        gamma, theta, n = 4.0, 0.2, 10**6
        params = CL(gamma, theta)
        g, _ = sample_graph(params, n, 404)
        w = (np.arange(1, n + 1) / n) ** (-1.0 / (gamma - 1.0))
        cdf = np.cumsum(w)
        cdf /= cdf[-1]
        rng = Stream(405, 0)
        draws = 20_000
        us = np.array([rng.uniform() for _ in range(draws)])
        vertices = np.searchsorted(cdf, us)
        graph_sizes = np.array([cluster_of(g, int(v)) for v in vertices])
        batch = explore_batch(params, draws, 10**5, 406)
        walk_sizes = batch.cluster_sizes[batch.survived == 0]
        assert len(walk_sizes) == draws  # subcritical: all absorbed
        for size in range(1, 6):
            p_graph = float((graph_sizes == size).mean())
            p_walk = float((walk_sizes == size).mean())
            se = math.sqrt(
                p_graph * (1 - p_graph) / draws + p_walk * (1 - p_walk) / draws
            )
            assert abs(p_graph - p_walk) <= 3.0 * se, size
