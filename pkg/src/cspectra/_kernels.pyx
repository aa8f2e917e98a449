# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: colex canonical ordering and all-permutation weight sums."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef cnp.int64_t i64

cnp.import_array()


cdef struct Search:
    int n
    int m
    const i64 *M
    int *twin
    i64 *best
    i64 *seg
    int *placed
    int *used
    int *order
    int dirty
    int found


cdef int _cmp(const i64 *a, const i64 *b, int k) noexcept nogil:
    cdef int i
    for i in range(k):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef void _dfs(Search *s, int k, i64 inf) noexcept nogil:
    cdef int n = s.n
    cdef int off, u, i, c, ncand = 0
    cdef i64 *low
    cdef int *cand
    cdef int *seen
    if k == n:
        if s.dirty:
            memcpy(s.order, s.placed, n * sizeof(int))
            s.dirty = 0
            s.found = 1
        return
    off = k * (k - 1) // 2
    cand = <int *> malloc(n * sizeof(int))
    seen = <int *> malloc(n * sizeof(int))
    low = <i64 *> malloc((k + 1) * sizeof(i64))
    for u in range(n):
        seen[u] = 0
    # low = minimal segment among twin-pruned candidates
    for u in range(n):
        if s.used[u] or seen[s.twin[u]]:
            continue
        seen[s.twin[u]] = 1
        cand[ncand] = u
        ncand += 1
        for i in range(k):
            s.seg[i] = s.M[s.placed[i] * n + u]
        if ncand == 1 or _cmp(s.seg, low, k) < 0:
            for i in range(k):
                low[i] = s.seg[i]
    c = _cmp(low, s.best + off, k)
    if c > 0:
        free(cand); free(seen); free(low)
        return
    if c < 0:
        for i in range(k):
            s.best[off + i] = low[i]
        for i in range(off + k, s.m):
            s.best[i] = inf
        s.dirty = 1
    for c in range(ncand):
        u = cand[c]
        for i in range(k):
            s.seg[i] = s.M[s.placed[i] * n + u]
        if _cmp(s.seg, low, k) != 0:
            continue
        s.placed[k] = u
        s.used[u] = 1
        _dfs(s, k + 1, inf)
        s.used[u] = 0
    free(cand); free(seen); free(low)


def twin_classes(cnp.int64_t[:, ::1] M, int n):
    cdef int u, v, x, ok
    cls = list(range(n))
    for u in range(n):
        if cls[u] != u:
            continue
        for v in range(u + 1, n):
            if cls[v] != v:
                continue
            ok = 1
            for x in range(n):
                if x != u and x != v and M[u, x] != M[v, x]:
                    ok = 0
                    break
            if ok:
                cls[v] = u
    return cls


def canonical_order(cnp.int64_t[:, ::1] M, int n):
    cdef Search s
    cdef int i
    cdef i64 inf
    if n <= 1:
        return list(range(n))
    twin = twin_classes(M, n)
    inf = np.asarray(M).max() + 1
    s.n = n
    s.m = n * (n - 1) // 2
    s.M = &M[0, 0]
    s.twin = <int *> malloc(n * sizeof(int))
    s.best = <i64 *> malloc(s.m * sizeof(i64))
    s.seg = <i64 *> malloc(n * sizeof(i64))
    s.placed = <int *> malloc(n * sizeof(int))
    s.used = <int *> malloc(n * sizeof(int))
    s.order = <int *> malloc(n * sizeof(int))
    for i in range(n):
        s.twin[i] = twin[i]
        s.used[i] = 0
    for i in range(s.m):
        s.best[i] = inf
    s.dirty = 1
    s.found = 0
    with nogil:
        _dfs(&s, 0, inf)
    out = [s.order[i] for i in range(n)]
    free(s.twin); free(s.best); free(s.seg); free(s.placed); free(s.used); free(s.order)
    return out


cdef inline void _reverse(int *p, int a, int b) noexcept nogil:
    cdef int t
    while a < b:
        t = p[a]; p[a] = p[b]; p[b] = t
        a += 1
        b -= 1


def permutation_sums(cnp.int64_t[:, ::1] H, cnp.int64_t[:, ::1] G, int n):
    """Distinct ``sum_{i<j} H[i,j] * G[p[i], p[j]]`` over all ``n!`` permutations.

    Caller guarantees the sums fit in int64.
    """
    cdef int i, j, t, nt = 0
    cdef long long total = 1, idx = 0
    cdef i64 acc
    for i in range(2, n + 1):
        total *= i
    ti = np.zeros(n * n, dtype=np.int32)
    tj = np.zeros(n * n, dtype=np.int32)
    th = np.zeros(n * n, dtype=np.int64)
    cdef int[::1] vi = ti
    cdef int[::1] vj = tj
    cdef i64[::1] vh = th
    for j in range(n):
        for i in range(j):
            if H[i, j] != 0:
                vi[nt] = i; vj[nt] = j; vh[nt] = H[i, j]
                nt += 1
    sums = np.empty(total, dtype=np.int64)
    cdef i64[::1] out = sums
    cdef int *p = <int *> malloc(max(n, 1) * sizeof(int))
    for i in range(n):
        p[i] = i
    with nogil:
        while True:
            acc = 0
            for t in range(nt):
                acc += vh[t] * G[p[vi[t]], p[vj[t]]]
            out[idx] = acc
            idx += 1
            # next lexicographic permutation
            i = n - 2
            while i >= 0 and p[i] > p[i + 1]:
                i -= 1
            if i < 0:
                break
            j = n - 1
            while p[j] < p[i]:
                j -= 1
            t = p[i]; p[i] = p[j]; p[j] = t
            _reverse(p, i + 1, n - 1)
    free(p)
    return [int(x) for x in np.unique(sums)]
