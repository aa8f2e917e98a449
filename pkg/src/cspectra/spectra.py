"""Set-level algebra: ``*``, ``⊛``, set addition, scalars, closure, powers and sum spectra."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Iterable

from . import kernels
from .canon import (
    automorphism_group,
    canonical_form,
    pso_classes,
)
from .core import (
    DomainError,
    WeightedCompleteGraph,
    as_rational,
    format_rational,
    graph_add,
    num_pairs,
    pairs,
    pullback,
    scalar_mul,
    weighted_to_dict,
    weight_sum,
)

LABELED = "labeled"
ISO = "iso"


class SpectrumValues:
    """Finite set of rationals kept sorted ascending."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable = ()):
        self.values = tuple(sorted({as_rational(v) for v in values}))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, x):
        return as_rational(x) in set(self.values)

    def __eq__(self, other):
        if isinstance(other, SpectrumValues):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "SpectrumValues({" + ", ".join(format_rational(v) for v in self.values) + "})"

    def min(self) -> Fraction:
        if not self.values:
            raise DomainError("empty spectrum has no minimum")
        return self.values[0]

    def max(self) -> Fraction:
        if not self.values:
            raise DomainError("empty spectrum has no maximum")
        return self.values[-1]

    def as_set(self) -> frozenset:
        return frozenset(self.values)

    def sumset(self, other: "SpectrumValues") -> "SpectrumValues":
        return SpectrumValues(a + b for a in self.values for b in other.values)

    def scaled(self, r) -> "SpectrumValues":
        r = as_rational(r)
        return SpectrumValues(r * v for v in self.values)

    def to_json(self) -> list[str]:
        return [format_rational(v) for v in self.values]


class GraphSet:
    """Finite set of weighted complete graphs on ``n`` vertices.

    In ``labeled`` mode members are keyed on their exact weights; in ``iso``
    mode on their canonical key, and the stored member is the canonical graph.
    """

    __slots__ = ("n", "mode", "_members")

    def __init__(self, n: int, mode: str, graphs: Iterable[WeightedCompleteGraph] = ()):
        if mode not in (LABELED, ISO):
            raise DomainError(f"unknown mode {mode!r}")
        self.n = n
        self.mode = mode
        members = {}
        for g in graphs:
            if g.n != n:
                raise DomainError(f"graph on {g.n} vertices in a set of {n}-vertex graphs")
            if mode == LABELED:
                members[g] = g
            else:
                members.setdefault(canonical_form(g), None)
        if mode == ISO:
            members = {k: k.graph() for k in members}
        self._members = members

    @classmethod
    def labeled(cls, n, graphs=()):
        return cls(n, LABELED, graphs)

    @classmethod
    def iso(cls, n, graphs=()):
        return cls(n, ISO, graphs)

    @classmethod
    def singleton(cls, G: WeightedCompleteGraph, mode: str = LABELED):
        return cls(G.n, mode, [G])

    def keys(self) -> frozenset:
        return frozenset(self._members)

    @property
    def members(self) -> tuple[WeightedCompleteGraph, ...]:
        return tuple(sorted(self._members.values(), key=lambda g: g.weights))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self._members)

    def __contains__(self, G):
        key = G if self.mode == LABELED else canonical_form(G)
        return G.n == self.n and key in self._members

    def __eq__(self, other):
        if not isinstance(other, GraphSet):
            return NotImplemented
        return (self.n, self.mode) == (other.n, other.mode) and self.keys() == other.keys()

    def __hash__(self):
        return hash((self.n, self.mode, self.keys()))

    def __le__(self, other: "GraphSet") -> bool:
        _check_compatible(self, other)
        return self.keys() <= other.keys()

    def __repr__(self):
        return f"GraphSet(n={self.n}, mode={self.mode}, size={len(self)})"

    def union(self, other: "GraphSet") -> "GraphSet":
        _check_compatible(self, other)
        return GraphSet(self.n, self.mode, list(self._members.values()) + list(other._members.values()))

    def to_json(self):
        if self.mode == LABELED:
            return [weighted_to_dict(g) for g in self.members]
        return sorted(str(k) for k in self._members)


def _check_compatible(A: GraphSet, B: GraphSet):
    if A.n != B.n:
        raise DomainError(f"vertex counts differ: {A.n} vs {B.n}")
    if A.mode != B.mode:
        raise DomainError(f"mixed modes: {A.mode} vs {B.mode}")


def _check_n(H, G):
    if H.n != G.n:
        raise DomainError(f"vertex counts differ: {H.n} vs {G.n}")


def _product(H: WeightedCompleteGraph, G: WeightedCompleteGraph, f) -> WeightedCompleteGraph:
    gm = G.matrix
    return WeightedCompleteGraph(
        H.n, tuple(h * gm[f[i]][f[j]] for (i, j), h in zip(pairs(H.n), H.weights))
    )


# --------------------------------------------------------------------------
# stars


def star_labeled(H: WeightedCompleteGraph, G: WeightedCompleteGraph) -> GraphSet:
    """``H * G``: every ``H *_f G``, deduplicated by exact weights."""
    _check_n(H, G)
    return GraphSet.labeled(H.n, (_product(H, G, f) for f in permutations(range(H.n))))


def star_iso(H: WeightedCompleteGraph, G: WeightedCompleteGraph) -> GraphSet:
    """``H ⊛ G`` from one bijection per pseudoordering class."""
    _check_n(H, G)
    return GraphSet.iso(H.n, (_product(H, G, f.image) for f, _ in pso_classes(H, G).representatives))


def naive_star_iso(H: WeightedCompleteGraph, G: WeightedCompleteGraph) -> GraphSet:
    """``H ⊛ G`` as the isomorphism quotient of all ``n!`` products."""
    return iso_quotient(star_labeled(H, G))


def set_star(A: GraphSet, B: GraphSet) -> GraphSet:
    _check_compatible(A, B)
    op = star_labeled if A.mode == LABELED else star_iso
    out = GraphSet(A.n, A.mode)
    members = {}
    for H in A.members:
        for G in B.members:
            members.update(op(H, G)._members)
    out._members = members
    return out


# --------------------------------------------------------------------------
# addition, scalars, closure


def closure(A: GraphSet) -> GraphSet:
    """All relabelings of all members, as a labeled set.

    Relabelings of ``G`` correspond to cosets of ``Aut(G)``, so each distinct
    relabeling is produced once.
    """
    out = []
    for G in A.members:
        for g in automorphism_group(G).coset_representatives():
            inv = [0] * G.n
            for i, x in enumerate(g):
                inv[x] = i
            out.append(pullback(G, inv))
    return GraphSet.labeled(A.n, out)


def iso_quotient(A: GraphSet) -> GraphSet:
    return GraphSet.iso(A.n, A.members)


def set_add(A: GraphSet, B: GraphSet) -> GraphSet:
    """Pairwise sums ``{H1 + H2}``.

    Labeled sets add pointwise.  Iso-mode operands stand for their closures:
    the result is the quotient of ``closure(A) + closure(B)``, computed from
    one relabeling per pseudoordering class of each member pair.
    """
    if A.n != B.n:
        raise DomainError(f"vertex counts differ: {A.n} vs {B.n}")
    if A.mode == ISO and B.mode == ISO:
        sums = []
        for H1 in A.members:
            for H2 in B.members:
                for f, _ in pso_classes(H1, H2).representatives:
                    sums.append(graph_add(H1, pullback(H2, f)))
        return GraphSet.iso(A.n, sums)
    if A.mode == ISO:
        A = closure(A)
    if B.mode == ISO:
        B = closure(B)
    return GraphSet.labeled(A.n, (graph_add(x, y) for x in A.members for y in B.members))


def set_scalar(r, A: GraphSet) -> GraphSet:
    return GraphSet(A.n, A.mode, (scalar_mul(r, G) for G in A.members))


def set_sum(sets: list[GraphSet], n: int, mode: str = ISO) -> GraphSet:
    """Sum of a list of sets; the empty sum is ``{zero graph}``."""
    out = GraphSet(n, mode, [WeightedCompleteGraph.zero(n)])
    for s in sets:
        out = set_add(out, s)
    return out


# --------------------------------------------------------------------------
# powers


def star_power(A: GraphSet, k: int) -> GraphSet:
    """``A * A * ... * A`` with ``k >= 1`` factors."""
    if not isinstance(k, int) or k < 1:
        raise DomainError("star_power needs k >= 1; no empty product is defined")
    out = A
    for _ in range(k - 1):
        out = set_star(out, A)
    return out


class FixpointNotReached(DomainError):
    pass


def star_infinity(A: GraphSet, cap: int | None = None) -> GraphSet:
    """First ``A^{*m}`` with ``A^{*(m+1)} = A^{*m}``; iso mode only."""
    if A.mode != ISO:
        raise DomainError("star_infinity works on iso-mode sets")
    if cap is None:
        cap = num_pairs(A.n) + 2
    power = A
    for _ in range(cap):
        nxt = set_star(power, A)
        if nxt == power:
            return power
        power = nxt
    raise FixpointNotReached(f"fixpoint not reached within {cap} iterations")


# --------------------------------------------------------------------------
# sum spectra


def sum_spectrum(A: GraphSet) -> SpectrumValues:
    return SpectrumValues(weight_sum(G) for G in A.members)


def _scaled_rows(G: WeightedCompleteGraph):
    d = lcm(*(w.denominator for w in G.weights)) if G.weights else 1
    rows = [[0] * G.n for _ in range(G.n)]
    for (i, j), w in G.items():
        rows[i][j] = rows[j][i] = int(w * d)
    return rows, d


def spectrum(H: WeightedCompleteGraph, G: WeightedCompleteGraph, method: str = "pruned") -> SpectrumValues:
    """``s({H} * {G})``.

    ``pruned`` evaluates one bijection per pseudoordering class; ``naive``
    sums over all ``n!`` bijections with the integer kernel.
    """
    _check_n(H, G)
    if method == "pruned":
        return SpectrumValues(
            weight_sum(_product(H, G, f.image)) for f, _ in pso_classes(H, G).representatives
        )
    if method == "naive":
        hr, dh = _scaled_rows(H)
        gr, dg = _scaled_rows(G)
        return SpectrumValues(Fraction(s, dh * dg) for s in kernels.permutation_sums(hr, gr, H.n))
    raise DomainError(f"unknown method {method!r}")


def set_spectrum(A: GraphSet, B: GraphSet) -> SpectrumValues:
    """``s(A * B)``; the same for either mode since ``s`` is isomorphism invariant."""
    if A.n != B.n:
        raise DomainError(f"vertex counts differ: {A.n} vs {B.n}")
    out = set()
    for H in A.members:
        for G in B.members:
            out.update(spectrum(H, G))
    return SpectrumValues(out)
