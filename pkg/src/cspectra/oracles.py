"""Classical brute-force answers used to cross-check the spectral predicates.

Nothing here goes through the spectrum machinery: distances come from
Floyd-Warshall, connectivity from a plain depth-first search, and every
property is decided by exhaustive enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def _adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def connected(vertices, edges) -> bool:
    vertices = list(vertices)
    if len(vertices) <= 1:
        return True
    allowed = set(vertices)
    adj = {v: set() for v in vertices}
    for u, v in edges:
        if u in allowed and v in allowed:
            adj[u].add(v)
            adj[v].add(u)
    seen, stack = {vertices[0]}, [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def floyd_warshall(n, edges):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def hamiltonian_spectrum(H, G) -> set:
    """``{sum over edges xy of H of dist_G(f(x), f(y))}`` over all bijections ``f``."""
    d = floyd_warshall(G.n, G.edges)
    return {sum(d[f[u]][f[v]] for u, v in H.edges) for f in permutations(range(G.n))}


def product_spectrum(H, G) -> set:
    """``{sum_e v_H(e) v_G(f(e))}`` over all bijections, straight from the definition."""
    hm, gm = H.matrix, G.matrix
    n = H.n
    return {
        sum((hm[i][j] * gm[f[i]][f[j]] for i in range(n) for j in range(i + 1, n)), Fraction(0))
        for f in permutations(range(n))
    }


def matching_sizes(G) -> set:
    edges = sorted(G.edges)
    sizes = set()
    for r in range(len(edges) + 1):
        for subset in combinations(edges, r):
            ends = [x for e in subset for x in e]
            if len(ends) == len(set(ends)):
                sizes.add(r)
    return sizes


def degrees(G) -> set:
    adj = _adjacency(G.n, G.edges)
    return {len(a) for a in adj}


def vertex_colorable(G, k) -> bool:
    for colors in product(range(k), repeat=G.n):
        if all(colors[u] != colors[v] for u, v in G.edges):
            return True
    return False


def edge_colorable(G, k) -> bool:
    edges = sorted(G.edges)
    for colors in product(range(k), repeat=len(edges)):
        seen = set()
        ok = True
        for (u, v), c in zip(edges, colors):
            if (u, c) in seen or (v, c) in seen:
                ok = False
                break
            seen.add((u, c))
            seen.add((v, c))
        if ok:
            return True
    return False


def friendly_bisection(G) -> bool:
    n = G.n
    adj = _adjacency(n, G.edges)
    for half in combinations(range(n), n // 2):
        side = set(half)
        if all(
            sum(1 for w in adj[v] if (w in side) == (v in side))
            >= sum(1 for w in adj[v] if (w in side) != (v in side))
            for v in range(n)
        ):
            return True
    return False


def edge_connected(G, k_plus_1) -> bool:
    edges = sorted(G.edges)
    for r in range(min(k_plus_1 - 1, len(edges)) + 1):
        for removed in combinations(edges, r):
            rest = set(edges) - set(removed)
            if not connected(range(G.n), rest):
                return False
    return True


def vertex_connected(G, k_plus_1) -> bool:
    for r in range(min(k_plus_1 - 1, G.n) + 1):
        for removed in combinations(range(G.n), r):
            keep = [v for v in range(G.n) if v not in removed]
            if not connected(keep, G.edges):
                return False
    return True


def is_complete(G) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


def ramsey_avoider(n, k) -> bool:
    """Whether some red/blue colouring of ``K_n`` has no monochromatic ``K_k``."""
    edges = list(combinations(range(n), 2))
    bit = {e: 1 << i for i, e in enumerate(edges)}
    masks = [sum(bit[e] for e in combinations(sub, 2)) for sub in combinations(range(n), k)]
    for coloring in range(1 << len(edges)):
        if all(0 != coloring & m != m for m in masks):
            return True
    return False


def subset_sums(weights) -> set:
    sums = {Fraction(0)}
    for w in weights:
        sums |= {s + w for s in sums}
    return sums


def is_regular(G) -> bool:
    return len(degrees(G)) <= 1


def even_degrees(G) -> bool:
    return all(d % 2 == 0 for d in degrees(G))


def diameter(G):
    d = floyd_warshall(G.n, G.edges)
    return max((max(row) for row in d), default=0)
