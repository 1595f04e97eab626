"""Sampler correctness: formula, distribution, determinism, accounting."""

import math

import numpy as np
import pytest

from chunglu.graph import degree_sequence
from chunglu.params import ModelParams
from chunglu.sampler import edge_probability, sample_edges, sample_graph

CL = ModelParams.chung_lu
ER = ModelParams.erdos_renyi


class TestEdgeProbability:
    def test_zero_kernel(self):
        p = CL(4.0, 0.0)
        assert edge_probability(100, 99, p, 100) == 0.0

    def test_direct_formula(self):
        p = CL(3.0, 1.0)
        want = math.sqrt(2.0) / 100.0
        assert edge_probability(100, 50, p, 100) == pytest.approx(want, rel=1e-12)

    def test_symmetry(self):
        p = CL(2.7, 0.8)
        assert edge_probability(3, 70, p, 100) == edge_probability(70, 3, p, 100)

    def test_erdos_renyi_constant(self):
        p = ER(2.0)
        for i, j in ((1, 2), (500, 999), (1000, 1)):
            assert edge_probability(i, j, p, 1000) == pytest.approx(0.002, rel=1e-12)

    def test_clamping(self):
        p = CL(4.0, 1e6)
        assert edge_probability(1, 2, p, 100) == 1.0

    def test_index_errors(self):
        p = CL(4.0, 0.5)
        with pytest.raises(IndexError):
            edge_probability(0, 1, p, 10)
        with pytest.raises(IndexError):
            edge_probability(1, 11, p, 10)
        with pytest.raises(IndexError):
            edge_probability(3, 3, p, 10)


class TestDeterminism:
    def test_same_seed_same_edges(self):
        p = CL(4.0, 0.5)
        a = sample_edges(p, 500, 42)
        b = sample_edges(p, 500, 42)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])

    def test_different_seed_differs(self):
        p = CL(4.0, 0.5)
        a = sample_edges(p, 500, 42)
        b = sample_edges(p, 500, 43)
        assert not (
            len(a[0]) == len(b[0])
            and np.array_equal(a[0], b[0])
            and np.array_equal(a[1], b[1])
        )


class TestGraphInvariants:
    @pytest.mark.parametrize(
        "params,n,seed",
        [
            (CL(4.0, 0.5), 2000, 1),
            (CL(2.5, 0.05), 2000, 2),
            (CL(3.0, 30.0), 300, 3),
            (ER(2.0), 2000, 4),
        ],
    )
    def test_sorted_unique_symmetric(self, params, n, seed):
        g, report = sample_graph(params, n, seed)
        u, v = g.edges_u, g.edges_v
        assert (u < v).all()
        if g.m > 1:
            key = u * np.int64(n) + v
            assert (np.diff(key) > 0).all()
        # symmetry of the CSR: j in adj(i) <=> i in adj(j); row-sorted
        for x in range(0, n, max(1, n // 37)):
            nb = g.neighbors(x)
            assert (np.diff(nb) > 0).all() if len(nb) > 1 else True
            for y in nb.tolist():
                assert x in g.neighbors(y).tolist()
        assert degree_sequence(g).sum() == 2 * g.m
        assert report.m == g.m

    def test_zero_kernel_empty(self):
        g, report = sample_graph(CL(4.0, 0.0), 100, 9)
        assert g.m == 0 and report.capped_pairs == 0
        g, _ = sample_graph(ER(0.0), 100, 9)
        assert g.m == 0

    def test_single_vertex(self):
        g, _ = sample_graph(CL(4.0, 0.5), 1, 0)
        assert g.n == 1 and g.m == 0


class TestExpectedEdges:
    def test_mc_mean_matches_double_sum_oracle(self):
        # brute-force expectation at n=1000: sum over all pairs
        n, params = 1000, CL(4.0, 0.5)
        w = ((np.arange(1, n + 1) / n) ** (-1.0 / 3.0))
        pm = np.minimum(1.0, 0.5 * np.outer(w, w) / n)
        expected_m = np.triu(pm, 1).sum()
        ms = []
        for seed in range(25):
            _, _, report = sample_edges(params, n, seed)
            ms.append(report.m)
        assert np.mean(ms) == pytest.approx(expected_m, rel=0.05)

    def test_er_expected_edges(self):
        n = 30_000
        ms = [sample_edges(ER(2.0), n, s)[2].m for s in range(10)]
        assert np.mean(ms) == pytest.approx(2.0 * (n - 1) / 2.0, rel=0.05)

    def test_extrapolated_scaling_at_larger_n(self):
        # for the uncapped kernel, E[m] ~ theta * B^2 * n / 2
        n, theta, b = 100_000, 0.5, 1.5
        _, _, report = sample_edges(CL(4.0, theta), n, 12)
        assert report.m == pytest.approx(theta * b * b * n / 2.0, rel=0.05)


class TestDistributionalExactness:
    def test_tiny_n_edge_frequencies(self):
        # brute-force oracle: every pair's empirical frequency within 3
        # binomial standard errors of edge_probability
        n, params, runs = 6, CL(4.0, 1.0), 40_000
        counts = np.zeros((n, n))
        for seed in range(runs):
            u, v, _ = sample_edges(params, n, seed)
            for a, b in zip(u.tolist(), v.tolist()):
                counts[a, b] += 1
        for i in range(n):
            for j in range(i + 1, n):
                p = edge_probability(i + 1, j + 1, params, n)
                se = math.sqrt(p * (1.0 - p) / runs)
                assert abs(counts[i, j] / runs - p) <= 3.0 * se, (i, j)

    def test_edge_indicator_independence(self):
        # joint frequency of two fixed edges factorizes (3 se, delta method)
        n, params, runs = 6, CL(4.0, 1.0), 60_000
        pairs = (((0, 1), (2, 3)), ((0, 5), (1, 2)), ((0, 1), (0, 2)))
        tallies = {pair: [0, 0, 0] for pair in pairs}
        for seed in range(runs):
            u, v, _ = sample_edges(params, n, seed)
            edges = set(zip(u.tolist(), v.tolist()))
            for pair in pairs:
                e1, e2 = pair
                a, b = e1 in edges, e2 in edges
                tallies[pair][0] += a
                tallies[pair][1] += b
                tallies[pair][2] += a and b
        for pair, (n1, n2, n12) in tallies.items():
            p1, p2, p12 = n1 / runs, n2 / runs, n12 / runs
            diff = p12 - p1 * p2
            # variance of the plug-in covariance estimate, delta method
            var = (
                p12 * (1 - p12)
                + p2 * p2 * p1 * (1 - p1)
                + p1 * p1 * p2 * (1 - p2)
                - 2 * p2 * (p12 - p1 * p12)
                - 2 * p1 * (p12 - p2 * p12)
                + 2 * p1 * p2 * (p12 - p1 * p2)
            ) / runs
            se = math.sqrt(max(var, 1e-12))
            assert abs(diff) <= 3.0 * se, pair


class TestCapping:
    def test_no_capping_in_sparse_regime(self):
        # theta * w(1/n)^2 < n guarantees every pair stays below 1
        n, gamma, theta = 100, 4.0, 1.0
        assert theta * (n ** (2.0 / 3.0)) < n
        _, _, report = sample_edges(CL(gamma, theta), n, 5)
        assert report.capped_pairs == 0
        assert not report.capping_occurred

    def test_capping_counted_exactly(self):
        n, gamma, theta = 50, 3.0, 40.0
        params = CL(gamma, theta)
        want = sum(
            1
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if theta * (i / n) ** -0.5 * (j / n) ** -0.5 / n >= 1.0
        )
        assert want > 0
        _, _, report = sample_edges(params, n, 8)
        assert report.capped_pairs == want
        assert report.capping_occurred

    def test_er_fully_capped(self):
        n = 20
        _, _, report = sample_edges(ER(25.0), n, 1)
        assert report.capped_pairs == n * (n - 1) // 2
        assert report.m == n * (n - 1) // 2


class TestDegreeScaling:
    def test_max_degree_concentrates_at_power_of_n(self):
        # max degree grows like n**(1/(gamma-1)); the normalized ratio
        # stays in one band across sizes
        params = CL(4.0, 0.5)
        ratios = {}
        for n in (10_000, 100_000):
            vals = []
            for seed in range(8):
                g, _ = sample_graph(params, n, 1000 + seed)
                vals.append(degree_sequence(g).max() / n ** (1.0 / 3.0))
            ratios[n] = np.mean(vals)
        assert 1.0 / 3.0 < ratios[10_000] / ratios[100_000] < 3.0


class TestWorkCertificate:
    def test_candidates_linear_in_output(self):
        for params, n in ((CL(4.0, 0.5), 100_000), (CL(2.5, 0.05), 100_000)):
            _, _, report = sample_edges(params, n, 3)
            assert report.candidates <= 4 * (n + report.m)
