"""Exact-rational weighted complete graphs and their pointwise operations.

Vertices are always ``0..n-1``.  Pair weights are stored in *colex* order::

    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...

so the pair ``{i, j}`` with ``i < j`` lives at index ``j*(j-1)//2 + i`` and a
graph on ``n`` vertices is a prefix of the layout for ``n + 1``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

import networkx as nx

RationalWeight = Fraction


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


def pair_index(u: int, v: int) -> int:
    if u == v:
        raise DomainError(f"no pair for a self-loop at {u}")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pairs(n: int) -> Iterator[tuple[int, int]]:
    """Unordered pairs of ``0..n-1`` in colex order."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point weights are not allowed; use Fraction or 'p/q' strings")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    return str(x)


# --------------------------------------------------------------------------
# graph types


@dataclass(frozen=True)
class UnweightedGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "UnweightedGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges, key=lambda e: (e[1], e[0]))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_complete(self) -> bool:
        return len(self.edges) == num_pairs(self.n)

    def __repr__(self):
        return f"UnweightedGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class WeightedCompleteGraph:
    """Complete graph with an exact rational weight on every vertex pair."""

    n: int
    weights: tuple

    def __post_init__(self):
        w = tuple(as_rational(x) for x in self.weights)
        if len(w) != num_pairs(self.n):
            raise DomainError(
                f"a complete graph on {self.n} vertices needs {num_pairs(self.n)} weights, got {len(w)}"
            )
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], object]) -> "WeightedCompleteGraph":
        return cls(n, tuple(fn(i, j) for i, j in pairs(n)))

    @classmethod
    def constant(cls, n: int, value=0) -> "WeightedCompleteGraph":
        return cls(n, (as_rational(value),) * num_pairs(n))

    @classmethod
    def zero(cls, n: int) -> "WeightedCompleteGraph":
        return cls.constant(n, 0)

    def weight(self, u: int, v: int) -> Fraction:
        return self.weights[pair_index(u, v)]

    @cached_property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        zero = Fraction(0)
        rows = [[zero] * self.n for _ in range(self.n)]
        for (i, j), w in zip(pairs(self.n), self.weights):
            rows[i][j] = rows[j][i] = w
        return tuple(tuple(r) for r in rows)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return zip(pairs(self.n), self.weights)

    def is_constant(self) -> bool:
        return len(set(self.weights)) <= 1

    def __repr__(self):
        body = ", ".join(f"{i}{j}:{w}" for (i, j), w in self.items())
        return f"WeightedCompleteGraph(n={self.n}, {{{body}}})"


@dataclass(frozen=True)
class VertexBijection:
    """A permutation of ``0..n-1``; ``image[v]`` is where ``v`` goes."""

    image: tuple

    def __post_init__(self):
        img = tuple(int(x) for x in self.image)
        if sorted(img) != list(range(len(img))):
            raise DomainError(f"{img} is not a permutation of 0..{len(img) - 1}")
        object.__setattr__(self, "image", img)

    @classmethod
    def identity(cls, n: int) -> "VertexBijection":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def on_pair(self, u: int, v: int) -> tuple[int, int]:
        return self.image[u], self.image[v]

    def compose(self, other: "VertexBijection") -> "VertexBijection":
        """``self ∘ other``: apply ``other`` first."""
        return VertexBijection(tuple(self.image[x] for x in other.image))

    def inverse(self) -> "VertexBijection":
        inv = [0] * self.n
        for i, x in enumerate(self.image):
            inv[x] = i
        return VertexBijection(tuple(inv))


# --------------------------------------------------------------------------
# named graphs


def _clique_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def disjoint_union(*graphs: UnweightedGraph) -> UnweightedGraph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return UnweightedGraph.from_edges(offset, edges)


def petersen_graph() -> UnweightedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UnweightedGraph.from_edges(10, outer + spokes + inner)


def cubic_bridge_graph() -> UnweightedGraph:
    """Cubic graph on 10 vertices: two 5-vertex blocks joined by the bridge {3, 8}.

    Each block is a pentagon with two chords; vertices 3 and 8 are the bridge ends.
    """
    left = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1), (0, 2)]
    right = [(5, 6), (6, 7), (7, 8), (8, 9), (9, 5), (7, 5), (6, 9)]
    return UnweightedGraph.from_edges(10, left + right + [(3, 8)])


def make_named_graph(kind: str, *params) -> UnweightedGraph:
    """Build a standard graph.

    ``complete(n)``, ``empty(n)``, ``path(n)`` (n vertices), ``cycle(n)``,
    ``star(n)`` = K_{1,n-1} centred at 0, ``complete_bipartite(a, b)``,
    ``partial_matching(n, k)`` (k disjoint edges, n-2k isolated vertices),
    ``disjoint_cliques(n_1, ..., n_k)`` (parts may be empty),
    ``disjoint_union(G_1, ..., G_k)``, ``petersen()``, ``cubic_bridge()``.
    """
    def need(count):
        if len(params) != count:
            raise DomainError(f"{kind} takes {count} parameter(s), got {len(params)}")
        for p in params:
            if not isinstance(p, int) or p < 0:
                raise DomainError(f"{kind}: parameters must be non-negative integers, got {params}")

    if kind == "complete":
        need(1)
        n, = params
        return UnweightedGraph.from_edges(n, _clique_edges(range(n)))
    if kind == "empty":
        need(1)
        return UnweightedGraph(params[0], frozenset())
    if kind == "path":
        need(1)
        n, = params
        return UnweightedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        need(1)
        n, = params
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return UnweightedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        need(1)
        n, = params
        if n < 1:
            raise DomainError("a star needs at least one vertex")
        return UnweightedGraph.from_edges(n, [(0, i) for i in range(1, n)])
    if kind == "complete_bipartite":
        need(2)
        a, b = params
        return UnweightedGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "partial_matching":
        need(2)
        n, k = params
        if 2 * k > n:
            raise DomainError(f"partial_matching({n}, {k}) needs 2k <= n")
        return UnweightedGraph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(k)])
    if kind == "disjoint_cliques":
        if not all(isinstance(p, int) and p >= 0 for p in params):
            raise DomainError("disjoint_cliques takes non-negative clique sizes")
        edges, offset = [], 0
        for size in params:
            edges.extend(_clique_edges(range(offset, offset + size)))
            offset += size
        return UnweightedGraph.from_edges(offset, edges)
    if kind == "disjoint_union":
        if not all(isinstance(p, UnweightedGraph) for p in params):
            raise DomainError("disjoint_union takes UnweightedGraph arguments")
        return disjoint_union(*params)
    if kind == "petersen":
        need(0)
        return petersen_graph()
    if kind == "cubic_bridge":
        need(0)
        return cubic_bridge_graph()
    raise DomainError(f"unknown graph kind {kind!r}")


# --------------------------------------------------------------------------
# operations


def complement(G: UnweightedGraph) -> UnweightedGraph:
    return UnweightedGraph.from_edges(G.n, [e for e in pairs(G.n) if e not in G.edges])


def indicator(G: UnweightedGraph) -> WeightedCompleteGraph:
    return WeightedCompleteGraph(G.n, tuple(1 if e in G.edges else 0 for e in pairs(G.n)))


def bfs_distances(G: UnweightedGraph, source: int) -> list:
    dist = [None] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_graph(G: UnweightedGraph) -> WeightedCompleteGraph:
    rows = [bfs_distances(G, s) for s in range(G.n)]
    if any(d is None for row in rows for d in row):
        raise DomainError("distance undefined: graph is disconnected")
    return WeightedCompleteGraph(G.n, tuple(rows[i][j] for i, j in pairs(G.n)))


def level_set(G: WeightedCompleteGraph, a) -> UnweightedGraph:
    a = as_rational(a)
    return UnweightedGraph.from_edges(G.n, [e for e, w in G.items() if w == a])


def _check_same_n(*graphs):
    ns = {g.n for g in graphs}
    if len(ns) > 1:
        raise DomainError(f"vertex counts differ: {sorted(ns)}")


def graph_add(H1: WeightedCompleteGraph, H2: WeightedCompleteGraph) -> WeightedCompleteGraph:
    _check_same_n(H1, H2)
    return WeightedCompleteGraph(H1.n, tuple(a + b for a, b in zip(H1.weights, H2.weights)))


def scalar_mul(r, H: WeightedCompleteGraph) -> WeightedCompleteGraph:
    r = as_rational(r)
    return WeightedCompleteGraph(H.n, tuple(r * w for w in H.weights))


def pullback(G: WeightedCompleteGraph, f) -> WeightedCompleteGraph:
    """Graph on ``G``'s vertex count whose pair ``{i, j}`` carries ``v_G({f(i), f(j)})``."""
    img = f.image if isinstance(f, VertexBijection) else tuple(f)
    if len(img) != G.n:
        raise DomainError("bijection size does not match the graph")
    m = G.matrix
    return WeightedCompleteGraph(G.n, tuple(m[img[i]][img[j]] for i, j in pairs(G.n)))


def edgewise_product(H: WeightedCompleteGraph, G: WeightedCompleteGraph, f: VertexBijection) -> WeightedCompleteGraph:
    """``H *_f G``: weight of ``e`` is ``v_H(e) * v_G(f(e))``."""
    _check_same_n(H, G, f)
    g = pullback(G, f).weights
    return WeightedCompleteGraph(H.n, tuple(a * b for a, b in zip(H.weights, g)))


def weight_sum(G: WeightedCompleteGraph) -> Fraction:
    return sum(G.weights, Fraction(0))


# --------------------------------------------------------------------------
# serialization


def to_graph6(G: UnweightedGraph) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def parse_graph6(text: str) -> UnweightedGraph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    try:
        g = nx.from_graph6_bytes(text.encode("ascii"))
    except (ValueError, nx.NetworkXError) as exc:
        raise DomainError(f"invalid graph6 string {text!r}: {exc}") from None
    return UnweightedGraph.from_edges(g.number_of_nodes(), g.edges())


def unweighted_to_dict(G: UnweightedGraph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in sorted(G.edges)]}


def weighted_to_dict(G: WeightedCompleteGraph) -> dict:
    return {
        "n": G.n,
        "weights": [{"u": i, "v": j, "w": format_rational(w)} for (i, j), w in G.items()],
    }


def graph_from_dict(obj: dict):
    """Decode either JSON schema; returns an UnweightedGraph or a WeightedCompleteGraph."""
    if not isinstance(obj, dict) or "n" not in obj:
        raise DomainError("graph JSON needs an 'n' field")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise DomainError("'n' must be a non-negative integer")
    if "edges" in obj:
        return UnweightedGraph.from_edges(n, [tuple(e) for e in obj["edges"]])
    if "weights" in obj:
        table = {}
        for item in obj["weights"]:
            u, v, w = item["u"], item["v"], item["w"]
            if not isinstance(w, (str, int)):
                raise DomainError(f"weight {w!r} must be a 'p/q' string or integer")
            try:
                w = Fraction(w)
            except (ValueError, ZeroDivisionError):
                raise DomainError(f"bad rational {item['w']!r}") from None
            idx = pair_index(u, v)
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"pair {u},{v} outside 0..{n - 1}")
            if idx in table:
                raise DomainError(f"pair {u},{v} listed twice")
            table[idx] = w
        if len(table) != num_pairs(n):
            raise DomainError(f"weighted graph on {n} vertices must list all {num_pairs(n)} pairs")
        return WeightedCompleteGraph(n, tuple(table[i] for i in range(num_pairs(n))))
    raise DomainError("graph JSON needs 'edges' or 'weights'")


def parse_graph(text: str):
    """Parse inline JSON or graph6 text."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid JSON: {exc}") from None
        return graph_from_dict(obj)
    return parse_graph6(stripped)
