# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: operation-for-operation mirror of pykern.

Same SplitMix64 substreams, same samplers, same expression grouping, so a
given seed yields bit-identical output on either backend.  Compiled with
-ffp-contract=off to keep every multiply and add separately rounded, the
way the interpreter evaluates them.
"""

from libc.math cimport exp, fabs, floor, log, log1p, pow, sqrt
from libc.stdint cimport int64_t, uint64_t, uint8_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy

import numpy as np

BACKEND_NAME = "cython"

XI_HIST_SIZE = 1 << 20

cdef int64_t _XI_HIST_SIZE = XI_HIST_SIZE
cdef int64_t _COUNT_CLAMP = (<int64_t>1) << 62

cdef uint64_t _GOLDEN = <uint64_t>0x9E3779B97F4A7C15
cdef uint64_t _SEED_MULT = <uint64_t>0xC2B2AE3D27D4EB4F
cdef uint64_t _SEED_OFFSET = <uint64_t>0x165667B19E3779F9

cdef double _INV_2_53 = 1.0 / 9007199254740992.0
cdef double _LS2PI = 0.9189385332046727

cdef double _LOGFACT[126]
_LOGFACT[0] = 0.0
cdef double _lf_acc = 0.0
cdef int _lf_k
for _lf_k in range(1, 126):
    _lf_acc += log(<double>_lf_k)
    _LOGFACT[_lf_k] = _lf_acc


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline uint64_t stream_state(uint64_t seed, uint64_t sub) noexcept nogil:
    return mix64(seed * _SEED_MULT + sub * _GOLDEN + _SEED_OFFSET)


cdef inline uint64_t next_u64(uint64_t* s) noexcept nogil:
    s[0] = s[0] + _GOLDEN
    return mix64(s[0])


cdef inline double next_uniform(uint64_t* s) noexcept nogil:
    return <double>((next_u64(s) >> 11) + 1) * _INV_2_53


cdef inline int64_t geometric_skip(uint64_t* s, double p) noexcept nogil:
    if p >= 1.0:
        return 0
    cdef double u = next_uniform(s)
    cdef double r = log(u) / log1p(-p)
    if r >= 9.0e18:
        return _COUNT_CLAMP
    return <int64_t>floor(r)


cdef inline double log_factorial(int64_t k) noexcept nogil:
    if k < 126:
        return _LOGFACT[k]
    cdef double x = k + 1.0
    cdef double inv = 1.0 / x
    cdef double inv2 = inv * inv
    return (
        (x - 0.5) * log(x)
        - x
        + _LS2PI
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0)))
    )


cdef inline int64_t poisson(uint64_t* s, double lam) noexcept nogil:
    cdef double limit, prod, slam, loglam, b, a, invalpha, vr, u, v, us, kf
    cdef int64_t k
    if lam <= 0.0:
        return 0
    if lam < 10.0:
        limit = exp(-lam)
        k = 0
        prod = next_uniform(s)
        while prod > limit:
            k += 1
            prod *= next_uniform(s)
        return k
    if lam >= 4.0e18:
        return _COUNT_CLAMP
    slam = sqrt(lam)
    loglam = log(lam)
    b = 0.931 + 2.53 * slam
    a = -0.059 + 0.02483 * b
    invalpha = 1.1239 + 1.1328 / (b - 3.4)
    vr = 0.9277 - 3.6224 / (b - 2.0)
    while True:
        u = next_uniform(s) - 0.5
        v = next_uniform(s)
        us = 0.5 - fabs(u)
        if us < 1e-15:
            continue
        kf = floor((2.0 * a / us + b) * u + lam + 0.43)
        if us >= 0.07 and v <= vr:
            return <int64_t>kf
        if kf < 0.0 or (us < 0.013 and v > us):
            continue
        if log(v) + log(invalpha) - log(a / (us * us) + b) <= (
            kf * loglam - lam - log_factorial(<int64_t>kf)
        ):
            return <int64_t>kf


cdef int _push(int64_t** buf, int64_t* cap, int64_t k, int64_t value) except -1:
    cdef int64_t* grown
    if k >= cap[0]:
        cap[0] = cap[0] * 2
        grown = <int64_t*>realloc(buf[0], cap[0] * sizeof(int64_t))
        if grown == NULL:
            raise MemoryError("edge buffer reallocation failed")
        buf[0] = grown
    buf[0][k] = value
    return 0


cdef object _as_array(int64_t* buf, int64_t k):
    out = np.empty(k, dtype=np.int64)
    cdef int64_t[::1] view = out
    if k > 0:
        memcpy(&view[0], buf, k * sizeof(int64_t))
    return out


def sample_chunglu_edges(n_py, gamma_py, theta_py, seed_py):
    """Mirror of pykern.sample_chunglu_edges."""
    cdef int64_t n = n_py
    cdef double gamma = gamma_py
    cdef double theta = theta_py
    cdef uint64_t seed = seed_py
    cdef double expo = -1.0 / (gamma - 1.0)
    cdef double inv_n = 1.0 / n
    w_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] w = w_arr
    cdef int64_t i, j
    for i in range(n):
        w[i] = pow((i + 1) * inv_n, expo)
    cdef int64_t cap = 4096
    cdef int64_t* bu = <int64_t*>malloc(cap * sizeof(int64_t))
    cdef int64_t* bv = <int64_t*>malloc(cap * sizeof(int64_t))
    if bu == NULL or bv == NULL:
        free(bu)
        free(bv)
        raise MemoryError("edge buffer allocation failed")
    cdef int64_t cap_u = cap, cap_v = cap
    cdef int64_t m = 0
    cdef int64_t capped = 0, candidates = 0
    cdef uint64_t s
    cdef double row, praw, phat, pc
    try:
        for i in range(n - 1):
            s = stream_state(seed, <uint64_t>i)
            row = theta * w[i] * inv_n
            j = i + 1
            while j < n:
                praw = row * w[j]
                phat = praw if praw < 1.0 else 1.0
                if phat <= 0.0:
                    break
                j += geometric_skip(&s, phat)
                if j >= n:
                    break
                candidates += 1
                pc = row * w[j]
                if pc >= 1.0:
                    capped += 1
                    pc = 1.0
                if next_uniform(&s) * phat <= pc:
                    _push(&bu, &cap_u, m, i)
                    _push(&bv, &cap_v, m, j)
                    m += 1
                j += 1
        return _as_array(bu, m), _as_array(bv, m), capped, candidates
    finally:
        free(bu)
        free(bv)


def sample_er_edges(n_py, lam_py, seed_py):
    """Mirror of pykern.sample_er_edges."""
    cdef int64_t n = n_py
    cdef double lam = lam_py
    cdef uint64_t seed = seed_py
    cdef double inv_n = 1.0 / n
    cdef double praw = lam * inv_n
    cdef double p = praw if praw < 1.0 else 1.0
    cdef int64_t cap = 4096
    cdef int64_t* bu = <int64_t*>malloc(cap * sizeof(int64_t))
    cdef int64_t* bv = <int64_t*>malloc(cap * sizeof(int64_t))
    if bu == NULL or bv == NULL:
        free(bu)
        free(bv)
        raise MemoryError("edge buffer allocation failed")
    cdef int64_t cap_u = cap, cap_v = cap
    cdef int64_t m = 0
    cdef int64_t capped = 0, candidates = 0
    cdef int64_t i, j
    cdef uint64_t s
    try:
        if p > 0.0:
            for i in range(n - 1):
                s = stream_state(seed, <uint64_t>i)
                j = i + 1
                while j < n:
                    j += geometric_skip(&s, p)
                    if j >= n:
                        break
                    candidates += 1
                    if praw >= 1.0:
                        capped += 1
                    _push(&bu, &cap_u, m, i)
                    _push(&bv, &cap_v, m, j)
                    m += 1
                    j += 1
        return _as_array(bu, m), _as_array(bv, m), capped, candidates
    finally:
        free(bu)
        free(bv)


def union_find_labels(n_py, us, vs):
    """Mirror of pykern.union_find_labels."""
    cdef int64_t n = n_py
    labels_arr = np.empty(n, dtype=np.int64)
    if n == 0:
        return labels_arr
    us_arr = np.ascontiguousarray(us, dtype=np.int64)
    vs_arr = np.ascontiguousarray(vs, dtype=np.int64)
    cdef const int64_t[::1] u = us_arr
    cdef const int64_t[::1] v = vs_arr
    cdef int64_t m = us_arr.shape[0]
    cdef int64_t[::1] labels = labels_arr
    cdef int64_t* parent = <int64_t*>malloc(n * sizeof(int64_t))
    cdef int64_t* size = <int64_t*>malloc(n * sizeof(int64_t))
    if parent == NULL or size == NULL:
        free(parent)
        free(size)
        raise MemoryError("union-find allocation failed")
    cdef int64_t i, k, ra, rb, tmp
    try:
        for i in range(n):
            parent[i] = i
            size[i] = 1
        for k in range(m):
            ra = _find(parent, u[k])
            rb = _find(parent, v[k])
            if ra == rb:
                continue
            if size[ra] < size[rb]:
                tmp = ra
                ra = rb
                rb = tmp
            parent[rb] = ra
            size[ra] += size[rb]
        for i in range(n):
            labels[i] = _find(parent, i)
        return labels_arr
    finally:
        free(parent)
        free(size)


cdef inline int64_t _find(int64_t* parent, int64_t x) noexcept nogil:
    cdef int64_t root = x
    cdef int64_t nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


cdef inline int64_t _walk_one(
    uint64_t* s,
    double gamma,
    double theta,
    double b_mean,
    int64_t step_cap,
    double root_a,
    int64_t* hist,
    int64_t* out_steps,
    uint8_t* out_survived,
    int64_t* out_draws,
) noexcept nogil:
    """Mirror of pykern.walk; returns cluster size or -1 when surviving."""
    cdef double expo_lam = -1.0 / (gamma - 2.0)
    cdef double expo_w = -1.0 / (gamma - 1.0)
    cdef double tb = theta * b_mean
    cdef int64_t active = 1
    cdef int64_t t = 0
    cdef int64_t draws = 0
    cdef int64_t count
    cdef double lam
    cdef bint record
    while True:
        if active == 0:
            out_steps[0] = t
            out_survived[0] = 0
            out_draws[0] = draws
            return t
        if t >= step_cap or active > step_cap - t:
            out_steps[0] = t
            out_survived[0] = 1
            out_draws[0] = draws
            return -1
        if t == 0 and root_a > 0.0:
            lam = tb * pow(root_a, expo_w)
            record = False
        else:
            lam = tb * pow(next_uniform(s), expo_lam)
            record = True
        count = poisson(s, lam)
        if record:
            draws += 1
            if count < _XI_HIST_SIZE:
                hist[count] += 1
            else:
                hist[_XI_HIST_SIZE] += 1
        active += count - 1
        t += 1


def explore_batch(gamma_py, theta_py, b_mean_py, n_walks_py, step_cap_py, seed_py, root_a_py):
    """Mirror of pykern.explore_batch."""
    cdef double gamma = gamma_py
    cdef double theta = theta_py
    cdef double b_mean = b_mean_py
    cdef int64_t n_walks = n_walks_py
    cdef int64_t step_cap = step_cap_py
    cdef uint64_t seed = seed_py
    cdef double root_a = root_a_py
    cluster_arr = np.empty(n_walks, dtype=np.int64)
    steps_arr = np.empty(n_walks, dtype=np.int64)
    survived_arr = np.zeros(n_walks, dtype=np.uint8)
    hist_arr = np.zeros(XI_HIST_SIZE + 1, dtype=np.int64)
    cdef int64_t[::1] cluster = cluster_arr
    cdef int64_t[::1] steps = steps_arr
    cdef uint8_t[::1] survived = survived_arr
    cdef int64_t[::1] hist = hist_arr
    cdef int64_t total_draws = 0
    cdef int64_t k, t, d
    cdef uint8_t surv
    cdef uint64_t s
    with nogil:
        for k in range(n_walks):
            s = stream_state(seed, <uint64_t>k)
            cluster[k] = _walk_one(
                &s, gamma, theta, b_mean, step_cap, root_a, &hist[0], &t, &surv, &d
            )
            steps[k] = t
            survived[k] = surv
            total_draws += d
    return cluster_arr, steps_arr, survived_arr, hist_arr, total_draws


def offspring_batch(gamma_py, theta_py, b_mean_py, n_draws_py, seed_py):
    """Mirror of pykern.offspring_batch."""
    cdef double gamma = gamma_py
    cdef double theta = theta_py
    cdef double b_mean = b_mean_py
    cdef int64_t n_draws = n_draws_py
    cdef uint64_t seed = seed_py
    cdef double expo_sb = (gamma - 1.0) / (gamma - 2.0)
    cdef double expo_w = -1.0 / (gamma - 1.0)
    cdef double tb = theta * b_mean
    types_arr = np.empty(n_draws, dtype=np.float64)
    counts_arr = np.empty(n_draws, dtype=np.int64)
    cdef double[::1] types = types_arr
    cdef int64_t[::1] counts = counts_arr
    cdef int64_t k
    cdef double x
    cdef uint64_t s
    with nogil:
        for k in range(n_draws):
            s = stream_state(seed, <uint64_t>k)
            x = pow(next_uniform(&s), expo_sb)
            types[k] = x
            counts[k] = poisson(&s, tb * pow(x, expo_w))
    return types_arr, counts_arr


def uniform_block(seed_py, sub_py, k_py):
    """k uniforms from one substream (parity checks)."""
    cdef uint64_t seed = seed_py
    cdef uint64_t sub = sub_py
    cdef int64_t k = k_py
    out_arr = np.empty(k, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef uint64_t s = stream_state(seed, sub)
    cdef int64_t i
    for i in range(k):
        out[i] = next_uniform(&s)
    return out_arr


def poisson_block(seed_py, sub_py, lam_py, k_py):
    """k Poisson draws from one substream (parity checks)."""
    cdef uint64_t seed = seed_py
    cdef uint64_t sub = sub_py
    cdef double lam = lam_py
    cdef int64_t k = k_py
    out_arr = np.empty(k, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef uint64_t s = stream_state(seed, sub)
    cdef int64_t i
    for i in range(k):
        out[i] = poisson(&s, lam)
    return out_arr
