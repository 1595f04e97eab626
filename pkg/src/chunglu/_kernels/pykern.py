"""Pure-Python kernels for the hot loops.

Reference implementation of the routines the compiled extension (_ckern)
accelerates: the skip-based edge sampler, union-find, and the exploration
walks.  The extension mirrors these loops operation for operation, drawing
from the same SplitMix64 substreams, so both backends produce bit-identical
edge sets and walk outcomes for a given seed.
"""

from __future__ import annotations

import numpy as np

from ..rng import Stream

BACKEND_NAME = "python"

XI_HIST_SIZE = 1 << 20


def sample_chunglu_edges(n, gamma, theta, seed):
    """Edge list of one product-kernel graph, in O(n + m) expected time.

    Vertex i (0-based) carries weight w((i+1)/n); weights decrease in i, so
    for a fixed row i the edge probability is nonincreasing in j.  The row
    walk keeps an upper bound phat equal to the probability at the current
    position, jumps ahead by a geometric number of misses, then accepts the
    candidate with ratio p/phat and refreshes the bound there.

    Returns (u, v, capped_pairs, candidates): edges in ascending
    lexicographic order with u < v, the count of pairs whose raw
    probability needed clamping to 1, and the number of accept tests
    performed (the O(n + m) work certificate).
    """
    expo = -1.0 / (gamma - 1.0)
    inv_n = 1.0 / n
    w = [((i + 1) * inv_n) ** expo for i in range(n)]
    us = []
    vs = []
    capped = 0
    candidates = 0
    for i in range(n - 1):
        s = Stream(seed, i)
        row = theta * w[i] * inv_n
        j = i + 1
        while j < n:
            praw = row * w[j]
            phat = praw if praw < 1.0 else 1.0
            if phat <= 0.0:
                break
            j += s.geometric_skip(phat)
            if j >= n:
                break
            candidates += 1
            pc = row * w[j]
            if pc >= 1.0:
                capped += 1
                pc = 1.0
            if s.uniform() * phat <= pc:
                us.append(i)
                vs.append(j)
            j += 1
    return (
        np.array(us, dtype=np.int64),
        np.array(vs, dtype=np.int64),
        capped,
        candidates,
    )


def sample_er_edges(n, lam, seed):
    """Edge list of one constant-kernel graph; same contract as above.

    The bound equals the probability, so every candidate is an edge and no
    accept draw is spent.
    """
    inv_n = 1.0 / n
    praw = lam * inv_n
    p = praw if praw < 1.0 else 1.0
    us = []
    vs = []
    capped = 0
    candidates = 0
    if p > 0.0:
        for i in range(n - 1):
            s = Stream(seed, i)
            j = i + 1
            while j < n:
                j += s.geometric_skip(p)
                if j >= n:
                    break
                candidates += 1
                if praw >= 1.0:
                    capped += 1
                us.append(i)
                vs.append(j)
                j += 1
    return (
        np.array(us, dtype=np.int64),
        np.array(vs, dtype=np.int64),
        capped,
        candidates,
    )


def union_find_labels(n, us, vs):
    """Root label per vertex via union by size with full path compression."""
    parent = list(range(n))
    size = [1] * n
    u_list = us.tolist() if hasattr(us, "tolist") else list(us)
    v_list = vs.tolist() if hasattr(vs, "tolist") else list(vs)
    for a, b in zip(u_list, v_list):
        ra = _find(parent, a)
        rb = _find(parent, b)
        if ra == rb:
            continue
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
    labels = np.empty(n, dtype=np.int64)
    for i in range(n):
        labels[i] = _find(parent, i)
    return labels


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def walk(stream, gamma, theta, b_mean, step_cap, root_a, hist=None):
    """One exploration walk from a single root; absorbing at zero actives.

    root_a = 0.0 draws the root type from the size-biased density like
    every later step; root_a in (0, 1] pins the root type.  Records every
    size-biased offspring draw into hist (counts clamped into the last
    bucket).  A walk whose active count exceeds the remaining step budget
    can no longer absorb (actives drop by at most one per step), so it is
    declared surviving without spending the remaining steps.

    Returns (cluster_size, steps, survived, recorded_draws) with
    cluster_size = -1 when the walk survived.
    """
    # for a size-biased type X = u**((gamma-1)/(gamma-2)) the offspring mean
    # theta*B*w(X) collapses to theta*B * u**(-1/(gamma-2)): one pow per step
    expo_lam = -1.0 / (gamma - 2.0)
    expo_w = -1.0 / (gamma - 1.0)
    tb = theta * b_mean
    active = 1
    t = 0
    draws = 0
    while True:
        if active == 0:
            return t, t, False, draws
        if t >= step_cap or active > step_cap - t:
            return -1, t, True, draws
        if t == 0 and root_a > 0.0:
            lam = tb * root_a**expo_w
            record = False
        else:
            lam = tb * stream.uniform() ** expo_lam
            record = True
        count = stream.poisson(lam)
        if record:
            draws += 1
            if hist is not None:
                if count < XI_HIST_SIZE:
                    hist[count] += 1
                else:
                    hist[XI_HIST_SIZE] += 1
        active += count - 1
        t += 1


def explore_batch(gamma, theta, b_mean, n_walks, step_cap, seed, root_a):
    """Run n_walks independent walks on substreams (seed, walk_index).

    Returns (cluster_sizes, steps, survived, offspring_hist, draws).
    """
    cluster = np.empty(n_walks, dtype=np.int64)
    steps = np.empty(n_walks, dtype=np.int64)
    survived = np.zeros(n_walks, dtype=np.uint8)
    hist = np.zeros(XI_HIST_SIZE + 1, dtype=np.int64)
    total_draws = 0
    for k in range(n_walks):
        s = Stream(seed, k)
        c, t, surv, d = walk(s, gamma, theta, b_mean, step_cap, root_a, hist)
        cluster[k] = c
        steps[k] = t
        survived[k] = 1 if surv else 0
        total_draws += d
    return cluster, steps, survived, hist, total_draws


def offspring_batch(gamma, theta, b_mean, n_draws, seed):
    """n_draws independent (type, offspring count) pairs, one substream each."""
    expo_sb = (gamma - 1.0) / (gamma - 2.0)
    expo_w = -1.0 / (gamma - 1.0)
    tb = theta * b_mean
    types = np.empty(n_draws, dtype=np.float64)
    counts = np.empty(n_draws, dtype=np.int64)
    for k in range(n_draws):
        s = Stream(seed, k)
        x = s.uniform() ** expo_sb
        types[k] = x
        counts[k] = s.poisson(tb * x**expo_w)
    return types, counts


def uniform_block(seed, sub, k):
    """k uniforms from one substream (parity checks)."""
    s = Stream(seed, sub)
    return np.array([s.uniform() for _ in range(k)], dtype=np.float64)


def poisson_block(seed, sub, lam, k):
    """k Poisson draws from one substream (parity checks)."""
    s = Stream(seed, sub)
    return np.array([s.poisson(lam) for _ in range(k)], dtype=np.int64)
