"""Pure-Python kernels.  ``_kernels.pyx`` implements the same algorithms in C."""

from itertools import permutations


def twin_classes(M, n):
    """``cls[u]`` = smallest ``v`` whose row agrees with ``u``'s off ``{u, v}``."""
    cls = list(range(n))
    for u in range(n):
        if cls[u] != u:
            continue
        ru = M[u]
        for v in range(u + 1, n):
            if cls[v] != v:
                continue
            rv = M[v]
            if all(ru[x] == rv[x] for x in range(n) if x != u and x != v):
                cls[v] = u
    return cls


def canonical_order(M, n):
    """Vertex order minimising the colex pair sequence of rank matrix ``M``.

    Depth ``k`` appends the segment ``M[p0][pk], ..., M[p(k-1)][pk]``, so a
    prefix-minimal branch and bound is exact.  Twins (rows equal off the pair)
    are interchangeable by an automorphism, so only the first unused twin of
    each class is branched on.
    """
    if n <= 1:
        return list(range(n))
    twin = twin_classes(M, n)
    inf = max(max(row) for row in M) + 1
    best = [inf] * (n * (n - 1) // 2)
    placed = [0] * n
    used = [False] * n
    state = {"order": None, "dirty": True}

    def dfs(k):
        if k == n:
            if state["dirty"]:
                state["order"] = placed[:]
                state["dirty"] = False
            return
        off = k * (k - 1) // 2
        seen = set()
        cands = []
        for u in range(n):
            if used[u] or twin[u] in seen:
                continue
            seen.add(twin[u])
            cands.append((tuple(M[placed[i]][u] for i in range(k)), u))
        low = min(c[0] for c in cands)
        cur = tuple(best[off:off + k])
        if low > cur:
            return
        if low < cur:
            best[off:off + k] = low
            for i in range(off + k, len(best)):
                best[i] = inf
            state["dirty"] = True
        for seg, u in cands:
            if seg != low:
                continue
            placed[k] = u
            used[u] = True
            dfs(k + 1)
            used[u] = False

    dfs(0)
    return state["order"]


def permutation_sums(H, G, n):
    """Distinct ``sum_{i<j} H[i][j] * G[p[i]][p[j]]`` over all ``n!`` permutations."""
    terms = [(i, j, H[i][j]) for j in range(n) for i in range(j) if H[i][j]]
    out = set()
    for p in permutations(range(n)):
        out.add(sum(h * G[p[i]][p[j]] for i, j, h in terms))
    return sorted(out)
