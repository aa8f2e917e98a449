"""Canonical forms, isomorphism, automorphism groups and pseudoordering classes.

The canonical form of a weighted complete graph is the lexicographically
least colex pair sequence over all ``n!`` relabelings (weights compared
numerically).  It is found by the prefix branch and bound in
:mod:`cspectra.kernels`.  Automorphisms and isomorphisms are searched by
individualization and colour refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

from . import kernels
from .core import (
    DomainError,
    VertexBijection,
    WeightedCompleteGraph,
    format_rational,
    num_pairs,
    pairs,
)

# --------------------------------------------------------------------------
# value graphs: n plus a colex tuple of mutually comparable values


def _rank_matrix(n: int, values: Sequence, table=None) -> list[list[int]]:
    if table is None:
        table = {v: i for i, v in enumerate(sorted(set(values)))}
    M = [[0] * n for _ in range(n)]
    for (i, j), v in zip(pairs(n), values):
        M[i][j] = M[j][i] = table[v]
    return M


def _pull(n: int, values: Sequence, order: Sequence[int]) -> tuple:
    """Values of the relabeled graph whose position ``i`` holds vertex ``order[i]``."""
    idx = lambda a, b: b * (b - 1) // 2 + a if a < b else a * (a - 1) // 2 + b
    return tuple(values[idx(order[i], order[j])] for i, j in pairs(n))


def _canon_values(n: int, values: tuple) -> tuple[list[int], tuple]:
    order = kernels.canonical_order(_rank_matrix(n, values), n)
    return order, _pull(n, values, order)


def _brute_force_canon(n: int, values: tuple) -> tuple:
    return min(_pull(n, values, p) for p in permutations(range(n)))


# --------------------------------------------------------------------------
# canonical keys


@dataclass(frozen=True, order=True)
class CanonicalKey:
    n: int
    weights: tuple

    def __str__(self):
        return f"{self.n}:" + ",".join(format_rational(w) for w in self.weights)

    @classmethod
    def parse(cls, text: str) -> "CanonicalKey":
        from fractions import Fraction

        head, _, body = text.partition(":")
        try:
            n = int(head)
            weights = tuple(Fraction(x) for x in body.split(",")) if body else ()
        except ValueError:
            raise DomainError(f"malformed canonical key {text!r}") from None
        if len(weights) != num_pairs(n):
            raise DomainError(f"canonical key for n={n} needs {num_pairs(n)} weights")
        return cls(n, weights)

    def graph(self) -> WeightedCompleteGraph:
        return WeightedCompleteGraph(self.n, self.weights)


@lru_cache(maxsize=1 << 16)
def _canonical(G: WeightedCompleteGraph) -> tuple[tuple, tuple]:
    order, seq = _canon_values(G.n, G.weights)
    return tuple(order), seq


def canonical_labeling(G: WeightedCompleteGraph) -> VertexBijection:
    """``f`` with ``pullback(G, f)`` equal to the canonical graph."""
    return VertexBijection(_canonical(G)[0])


def canonical_form(G: WeightedCompleteGraph) -> CanonicalKey:
    return CanonicalKey(G.n, _canonical(G)[1])


def canonical_graph(G: WeightedCompleteGraph) -> WeightedCompleteGraph:
    return WeightedCompleteGraph(G.n, _canonical(G)[1])


def brute_force_canonical_form(G: WeightedCompleteGraph) -> CanonicalKey:
    """Minimum over all ``n!`` relabelings; an oracle for small ``n``."""
    return CanonicalKey(G.n, _brute_force_canon(G.n, G.weights))


def is_isomorphic(G: WeightedCompleteGraph, H: WeightedCompleteGraph) -> bool:
    if G.n != H.n:
        return False
    return canonical_form(G) == canonical_form(H)


# --------------------------------------------------------------------------
# individualization / refinement search


def _refine(A, B, ca, cb, n):
    """Jointly refine colourings of two rank matrices; ``None`` if they diverge."""
    while True:
        sa = [(ca[v], tuple(sorted((A[v][u], ca[u]) for u in range(n) if u != v))) for v in range(n)]
        sb = [(cb[v], tuple(sorted((B[v][u], cb[u]) for u in range(n) if u != v))) for v in range(n)]
        if sorted(sa) != sorted(sb):
            return None
        table = {s: i for i, s in enumerate(sorted(set(sa)))}
        na = [table[s] for s in sa]
        nb = [table[s] for s in sb]
        if len(table) == len(set(ca)):
            return na, nb
        ca, cb = na, nb


def _individualized(seq, n):
    c = [0] * n
    for i, v in enumerate(seq):
        c[v] = i + 1
    return c


def _cells(colors):
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return cells


def _extend(A, B, seqA, seqB, n):
    """An isomorphism ``A -> B`` mapping ``seqA[i]`` to ``seqB[i]``, or ``None``."""
    r = _refine(A, B, _individualized(seqA, n), _individualized(seqB, n), n)
    if r is None:
        return None
    ca, cb = r
    cellsA, cellsB = _cells(ca), _cells(cb)
    if len(cellsA) == n:
        phi = [0] * n
        for c, (a,) in cellsA.items():
            phi[a] = cellsB[c][0]
        if all(A[i][j] == B[phi[i]][phi[j]] for i, j in pairs(n)):
            return phi
        return None
    c = min((len(v), c) for c, v in cellsA.items() if len(v) > 1)[1]
    a = cellsA[c][0]
    for b in cellsB[c]:
        phi = _extend(A, B, seqA + [a], seqB + [b], n)
        if phi is not None:
            return phi
    return None


def find_isomorphism(G: WeightedCompleteGraph, H: WeightedCompleteGraph):
    """``f`` with ``v_H(f(e)) = v_G(e)`` for every pair, or ``None``."""
    if G.n != H.n:
        return None
    table = {v: i for i, v in enumerate(sorted(set(G.weights) | set(H.weights)))}
    n = G.n
    phi = _extend(_rank_matrix(n, G.weights, table), _rank_matrix(n, H.weights, table), [], [], n)
    return None if phi is None else VertexBijection(tuple(phi))


# --------------------------------------------------------------------------
# automorphism groups


def _compose(f, g):
    """``f ∘ g`` on permutation tuples."""
    return tuple(f[x] for x in g)


def _inverse(f):
    inv = [0] * len(f)
    for i, x in enumerate(f):
        inv[x] = i
    return tuple(inv)


@dataclass(frozen=True)
class AutomorphismGroup:
    """Permutation group held as a stabilizer chain.

    Level ``i`` has base point ``base[i]`` and a transversal mapping each
    point of its orbit (under the pointwise stabilizer of ``base[:i]``) to a
    group element carrying ``base[i]`` there.  Base points are ``0, 1, ...``
    in order, so the chain also yields lexicographically least coset
    representatives.
    """

    n: int
    base: tuple
    transversals: tuple

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def __len__(self):
        return self.order

    def orbits(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(t)) for t in self.transversals]

    def generators(self) -> list[VertexBijection]:
        ident = tuple(range(self.n))
        gens = {g for t in self.transversals for g in t.values() if g != ident}
        return [VertexBijection(g) for g in sorted(gens)]

    def __contains__(self, perm) -> bool:
        g = tuple(perm.image if isinstance(perm, VertexBijection) else perm)
        if len(g) != self.n:
            return False
        for b, t in zip(self.base, self.transversals):
            u = g[b]
            if u not in t:
                return False
            g = _compose(_inverse(t[u]), g)
        return g == tuple(range(self.n))

    def elements(self) -> Iterator[VertexBijection]:
        def rec(level, acc):
            if level == len(self.transversals):
                yield VertexBijection(acc)
                return
            for t in self.transversals[level].values():
                yield from rec(level + 1, _compose(acc, t))

        yield from rec(0, tuple(range(self.n)))

    def coset_representatives(self) -> Iterator[tuple[int, ...]]:
        """Lexicographically least member of each coset ``g ∘ Aut``.

        ``g`` is least in its coset iff ``g(base[i]) < g(u)`` for every other
        ``u`` in orbit ``i``; these are enumerated as linear extensions, one
        leaf per coset and no dead ends.
        """
        n = self.n
        preds = [set() for _ in range(n)]
        for b, t in zip(self.base, self.transversals):
            for u in t:
                if u != b:
                    preds[u].add(b)
        g = [None] * n
        assigned = set()

        def rec(value):
            if value == n:
                yield tuple(g)
                return
            for p in range(n):
                if g[p] is None and preds[p] <= assigned:
                    g[p] = value
                    assigned.add(p)
                    yield from rec(value + 1)
                    assigned.discard(p)
                    g[p] = None

        yield from rec(0)


def _automorphisms(n: int, values: tuple) -> AutomorphismGroup:
    M = _rank_matrix(n, values)
    base, transversals = [], []
    ident = tuple(range(n))
    for b in range(n):
        r = _refine(M, M, _individualized(base, n), _individualized(base, n), n)
        colors = r[0]
        if len(set(colors)) == n:
            break
        trans = {b: ident}
        for u in range(n):
            if u != b and colors[u] == colors[b]:
                phi = _extend(M, M, base + [b], base + [u], n)
                if phi is not None:
                    trans[u] = tuple(phi)
        base.append(b)
        transversals.append(trans)
    return AutomorphismGroup(n, tuple(base), tuple(transversals))


@lru_cache(maxsize=4096)
def automorphism_group(G: WeightedCompleteGraph) -> AutomorphismGroup:
    return _automorphisms(G.n, G.weights)


def brute_force_automorphisms(G: WeightedCompleteGraph) -> set[tuple[int, ...]]:
    m = G.matrix
    return {
        p for p in permutations(range(G.n))
        if all(m[p[i]][p[j]] == m[i][j] for i, j in pairs(G.n))
    }


# --------------------------------------------------------------------------
# pseudoordering classes


def _pair_values(H: WeightedCompleteGraph, G: WeightedCompleteGraph, f) -> tuple:
    gm = G.matrix
    return tuple((h, gm[f[i]][f[j]]) for (i, j), h in zip(pairs(H.n), H.weights))


@dataclass(frozen=True)
class PsoClasses:
    """Double cosets ``Aut(G) ∘ f ∘ Aut(H)`` of the bijections ``V(H) -> V(G)``.

    ``representatives`` pairs each class's representative with the class
    size; ``examined`` counts the bijections that were actually generated.
    """

    representatives: tuple
    examined: int

    def __len__(self):
        return len(self.representatives)


def _check_sizes(H, G):
    if H.n != G.n:
        raise DomainError(f"vertex counts differ: {H.n} vs {G.n}")


@lru_cache(maxsize=4096)
def pso_classes(H: WeightedCompleteGraph, G: WeightedCompleteGraph) -> PsoClasses:
    """Enumerate pseudoordering classes via coset representatives of the larger group.

    ``f ~ g`` iff the paired graphs ``(H, f^*G)`` and ``(H, g^*G)`` are
    isomorphic, so each class is keyed by a canonical form of the pair graph.
    """
    _check_sizes(H, G)
    n = H.n
    autH, autG = automorphism_group(H), automorphism_group(G)
    if autH.order >= autG.order:
        candidates = autH.coset_representatives()
        coset_size = autH.order
    else:
        candidates = (_inverse(g) for g in autG.coset_representatives())
        coset_size = autG.order
    classes: dict = {}
    examined = 0
    for f in candidates:
        examined += 1
        key = _canon_values(n, _pair_values(H, G, f))[1]
        if key in classes:
            rep, count = classes[key]
            classes[key] = (min(rep, f), count + 1)
        else:
            classes[key] = (f, 1)
    reps = tuple(
        (VertexBijection(rep), count * coset_size)
        for rep, count in sorted(classes.values())
    )
    return PsoClasses(reps, examined)


def pso_representatives(H: WeightedCompleteGraph, G: WeightedCompleteGraph) -> list[tuple[VertexBijection, int]]:
    """One bijection per ``~`` class with its class size; sizes sum to ``n!``."""
    return list(pso_classes(H, G).representatives)


def double_coset(f: VertexBijection, autH: AutomorphismGroup, autG: AutomorphismGroup) -> set[tuple[int, ...]]:
    """Explicit ``{psi ∘ f ∘ phi}``; for checking small cases."""
    left = [_compose(psi.image, f.image) for psi in autG.elements()]
    return {_compose(x, phi.image) for x in left for phi in autH.elements()}


def aut_composition_covers(H: WeightedCompleteGraph, G: WeightedCompleteGraph) -> bool:
    """Whether ``Aut(G) ∘ Aut(H)`` is every bijection of the shared vertex set.

    ``|Aut(G) ∘ Aut(H)| = |Aut(G)| |Aut(H)| / |Aut(G) ∩ Aut(H)|`` and the
    intersection is the automorphism group of the paired graph.
    """
    _check_sizes(H, G)
    both = _automorphisms(H.n, _pair_values(H, G, tuple(range(H.n))))
    size = automorphism_group(G).order * automorphism_group(H).order // both.order
    return size == factorial(H.n)
