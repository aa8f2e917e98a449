"""Graph properties decided through combinatorial spectra.

Each predicate evaluates the spectral formula; :func:`report` runs it next to
the brute-force answer from :mod:`cspectra.oracles` and records whether the
two agree.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Any, Callable, Iterable

from . import oracles
from .canon import canonical_form, is_isomorphic
from .core import (
    DomainError,
    UnweightedGraph,
    WeightedCompleteGraph,
    complement,
    distance_graph,
    format_rational,
    indicator,
    level_set,
    make_named_graph,
    num_pairs,
    pairs,
    scalar_mul,
    unweighted_to_dict,
    weighted_to_dict,
)
from .spectra import (
    GraphSet,
    SpectrumValues,
    set_add,
    set_scalar,
    set_spectrum,
    set_star,
    set_sum,
    spectrum,
    star_infinity,
    star_iso,
    star_power,
)


def _named_indicator(kind, *params) -> WeightedCompleteGraph:
    return indicator(make_named_graph(kind, *params))


def _iso(n, graphs) -> GraphSet:
    return GraphSet.iso(n, graphs)


def _complete(n) -> WeightedCompleteGraph:
    return WeightedCompleteGraph.constant(n, 1)


def _need_n(G, low, what):
    if G.n < low:
        raise DomainError(f"{what} needs at least {low} vertices")


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[UnweightedGraph, ...]:
    """One graph per isomorphism class on ``n`` vertices (labeled enumeration, deduplicated)."""
    all_pairs = list(pairs(n))
    seen = {}
    for bits in product((0, 1), repeat=len(all_pairs)):
        G = UnweightedGraph.from_edges(n, [e for e, b in zip(all_pairs, bits) if b])
        seen.setdefault(canonical_form(indicator(G)), G)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def all_but_complete(n: int, cap: int | None = None) -> GraphSet:
    """``I(K_n - e)^{*∞}``: indicators of every graph on ``n`` vertices except ``K_n``."""
    return star_infinity(_iso(n, [_named_indicator("complete", n)] if n < 2 else [_deleted_edge(n)]), cap)


def _deleted_edge(n) -> WeightedCompleteGraph:
    w = [1] * num_pairs(n)
    w[0] = 0
    return WeightedCompleteGraph(n, tuple(w))


# --------------------------------------------------------------------------
# property reductions


def hamiltonian_spectrum(H: UnweightedGraph, G: UnweightedGraph) -> SpectrumValues:
    """Total ``G``-distance spanned by the edges of ``H`` under every bijection.

    ``min()`` and ``max()`` of the result are the cheapest and dearest embeddings.
    """
    if H.n != G.n:
        raise DomainError(f"vertex counts differ: {H.n} vs {G.n}")
    return spectrum(indicator(H), distance_graph(G))


def matching_cardinalities(G: UnweightedGraph) -> SpectrumValues:
    family = _iso(G.n, [_named_indicator("partial_matching", G.n, k) for k in range(G.n // 2 + 1)])
    return set_spectrum(family, _iso(G.n, [indicator(G)]))


def degree_set(G: UnweightedGraph) -> SpectrumValues:
    _need_n(G, 2, "degree_set")
    return spectrum(_named_indicator("star", G.n), indicator(G))


def _partitions(n, k, largest=None):
    """Partitions of ``n`` into at most ``k`` positive parts, non-increasing."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    if k == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, k - 1, first):
            yield (first,) + rest


def coloring_family(n: int, k: int) -> GraphSet:
    """``I`` of ``k`` disjoint cliques of total size ``n``; empty cliques allowed."""
    return _iso(n, [_named_indicator("disjoint_cliques", *p) for p in _partitions(n, k)])


def is_vertex_k_colorable(G: UnweightedGraph, k: int) -> bool:
    if k < 1:
        raise DomainError("k must be positive")
    if G.n == 0:
        return True
    return set_spectrum(coloring_family(G.n, k), _iso(G.n, [indicator(G)])).min() == 0


@lru_cache(maxsize=None)
def edge_coloring_universe(n: int, k: int) -> GraphSet:
    """All complete graphs on ``n`` vertices weighted by ``1..k`` (iso mode)."""
    zero_one = all_but_complete(n).union(_iso(n, [_complete(n)]))
    return set_add(set_sum([zero_one] * (k - 1), n), _iso(n, [_complete(n)]))


def is_edge_k_colorable(G: UnweightedGraph, k: int, witness: list | None = None) -> bool:
    if k < 1:
        raise DomainError("k must be positive")
    _need_n(G, 2, "is_edge_k_colorable")
    star = _named_indicator("star", G.n)
    colorings = set_star(_iso(G.n, [indicator(G)]), edge_coloring_universe(G.n, k))
    for H in colorings.members:
        if all(spectrum(indicator(level_set(H, a)), star).max() <= 1 for a in range(1, k + 1)):
            if witness is not None:
                witness.append(H)
            return True
    return False


def has_friendly_bisection(G: UnweightedGraph, witness: list | None = None) -> bool:
    n = G.n
    if n < 2 or n % 2:
        raise DomainError("friendly bisection needs an even number of vertices >= 2")
    signs = WeightedCompleteGraph(
        n, tuple(1 - 2 * w for w in _named_indicator("complete_bipartite", n // 2, n // 2).weights)
    )
    star = _named_indicator("star", n)
    for H in star_iso(signs, indicator(G)).members:
        if spectrum(H, star).min() >= 0:
            if witness is not None:
                witness.append(H)
            return True
    return False


def cut_family(n: int) -> GraphSet:
    return _iso(n, [_named_indicator("complete_bipartite", m, n - m) for m in range(1, n)])


def is_edge_k_connected(G: UnweightedGraph, k_plus_1: int) -> bool:
    """``min s(H_n * I(K_n - e)^{*k} * I(G)) >= 1`` with ``k = k_plus_1 - 1``."""
    if k_plus_1 < 1:
        raise DomainError("k+1 must be positive")
    _need_n(G, 2, "is_edge_k_connected")
    n, k = G.n, k_plus_1 - 1
    graphs = _iso(n, [indicator(G)])
    if k:
        graphs = set_star(star_power(_iso(n, [_deleted_edge(n)]), k), graphs)
    return set_spectrum(cut_family(n), graphs).min() >= 1


def vertex_vanishing_family(n: int, k: int, at_most: bool = True) -> GraphSet:
    """``I(co-S_n)^{*j}`` unioned over ``j = 1..k``, plus ``{I(K_n)}`` (j = 0) when ``at_most``."""
    base = _iso(n, [indicator(complement(make_named_graph("star", n)))])
    out = _iso(n, [_complete(n)] if at_most else [])
    power = None
    for _ in range(k):
        power = base if power is None else set_star(power, base)
        out = out.union(power)
    return out


def is_vertex_k_connected(G: UnweightedGraph, k_plus_1: int, at_most: bool = True,
                          witness: list | None = None) -> bool:
    """Every ``H`` in the vanish-and-cut family has a weight-1 pair or is a half-weighted cut.

    ``at_most=False`` uses the star power alone, which always vanishes at
    least one vertex.
    """
    if k_plus_1 < 1:
        raise DomainError("k+1 must be positive")
    if G.is_complete():
        raise DomainError("theorem requires G ≠ K_n")
    n, k = G.n, k_plus_1 - 1
    half = Fraction(1, 2)
    shifted = _iso(n, [WeightedCompleteGraph(n, tuple(w - half for w in indicator(G).weights))])
    vanished = set_star(shifted, vertex_vanishing_family(n, k, at_most))
    restored = set_add(vanished, _iso(n, [WeightedCompleteGraph.constant(n, half)]))
    family = set_star(restored, cut_family(n))
    half_cuts = [scalar_mul(half, _named_indicator("complete_bipartite", m, n - m)) for m in range(1, n)]
    for H in family.members:
        if 1 in H.weights:
            continue
        if any(is_isomorphic(H, c) for c in half_cuts):
            continue
        if witness is not None:
            witness.append(H)
        return False
    return True


def is_complete_via_spectrum(G: UnweightedGraph) -> bool:
    _need_n(G, 2, "is_complete_via_spectrum")
    return spectrum(indicator(G), _named_indicator("partial_matching", G.n, 1)) == SpectrumValues([1])


def ramsey_colorings(n: int, cap: int | None = None) -> GraphSet:
    """``2 I(K_n - e)^{*∞} + (-1) K_n``: ±1 colourings of ``K_n`` (the all-+1 one excluded)."""
    return set_add(set_scalar(2, all_but_complete(n, cap)), _iso(n, [WeightedCompleteGraph.constant(n, -1)]))


def ramsey_avoider_exists(n: int, k: int, witness: list | None = None, cap: int | None = None) -> bool:
    """Whether some ±1 colouring has every ``k``-subset sum strictly inside ``(-C(k,2), C(k,2))``."""
    if not (n > k >= 2):
        raise DomainError("ramsey_avoider_exists needs n > k >= 2")
    probe = _named_indicator("disjoint_cliques", k, *([1] * (n - k)))
    bound = comb(k, 2)
    for G in ramsey_colorings(n, cap).members:
        values = spectrum(G, probe)
        if all(-bound < v < bound for v in values):
            if witness is not None:
                witness.append(G)
            return True
    return False


# --------------------------------------------------------------------------
# interval, orthogonality and bounds


@dataclass(frozen=True)
class DenseResult:
    union: SpectrumValues
    is_interval: bool
    hypothesis: bool
    top: Fraction


def dense_union_interval(G: WeightedCompleteGraph) -> DenseResult:
    """Union of ``s(I(H) * G)`` over all ``H ⊆ K_n`` and whether it is ``{0, ..., s(G)}``.

    ``hypothesis`` records whether the distinct edge weights are exactly
    ``1..max``, the condition under which the union is expected to be an interval.
    """
    if any(w.denominator != 1 for w in G.weights):
        raise DomainError("dense_union_interval needs integer weights")
    n = G.n
    # with fewer than two vertices there are no edge weights and the interval is {0}
    edge_weights = spectrum(G, _named_indicator("partial_matching", n, 1)) if n >= 2 else SpectrumValues()
    heaviest = edge_weights.max() if edge_weights else 0
    hypothesis = edge_weights == SpectrumValues(range(1, int(heaviest) + 1))
    total = spectrum(_complete(n), G).max()
    union = set()
    for H in graph_classes(n):
        union.update(spectrum(indicator(H), G))
    union = SpectrumValues(union)
    return DenseResult(union, union == SpectrumValues(range(0, int(total) + 1)), hypothesis, total)


def perp(H: WeightedCompleteGraph, G: WeightedCompleteGraph) -> bool:
    return len(spectrum(H, G)) == 1


@dataclass(frozen=True)
class WeightIdealPredicate:
    """A family of value sets closed under sumsets, scalar multiples and subsets."""

    name: str
    contains: Callable[[SpectrumValues], bool]

    def __call__(self, values: SpectrumValues) -> bool:
        return self.contains(values)


EVEN_INTEGERS = WeightIdealPredicate(
    "P(2Z)", lambda values: all(v.denominator == 1 and v.numerator % 2 == 0 for v in values)
)


def perp_class(family: Iterable[WeightedCompleteGraph], universe: Iterable[WeightedCompleteGraph],
               ideal: WeightIdealPredicate | None = None) -> list[WeightedCompleteGraph]:
    family, universe = list(family), list(universe)
    sizes = {g.n for g in family + universe}
    if len(sizes) > 1:
        raise DomainError(f"vertex counts differ: {sorted(sizes)}")
    test = (lambda s: len(s) == 1) if ideal is None else ideal
    return [G for G in universe if all(test(spectrum(H, G)) for H in family)]


def diameter2_perp_equality(G: UnweightedGraph, samples: Iterable[WeightedCompleteGraph]) -> bool:
    dist = distance_graph(G)
    if max(dist.weights, default=0) > 2:
        raise DomainError("diameter exceeds 2")
    ind = indicator(G)
    return all(perp(ind, H) == perp(dist, H) for H in samples)


def connected_bipartite_family(n: int) -> list[WeightedCompleteGraph]:
    return [
        distance_graph(G) for G in graph_classes(n)
        if G.is_connected() and oracles.vertex_colorable(G, 2)
    ]


# --------------------------------------------------------------------------
# reports


def _jsonable(x):
    if isinstance(x, SpectrumValues):
        return x.to_json()
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, WeightedCompleteGraph):
        return weighted_to_dict(x)
    if isinstance(x, UnweightedGraph):
        return unweighted_to_dict(x)
    if isinstance(x, (set, frozenset)):
        return [_jsonable(v) for v in sorted(x)]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class ReductionReport:
    name: str
    spectral: Any
    oracle: Any
    agree: bool = field(init=False)
    witness: Any = None

    def __post_init__(self):
        left = self.spectral.as_set() if isinstance(self.spectral, SpectrumValues) else self.spectral
        right = frozenset(self.oracle) if isinstance(self.oracle, set) else self.oracle
        self.agree = left == right

    def to_json(self) -> dict:
        oracle = self.oracle
        if isinstance(self.spectral, SpectrumValues) and isinstance(oracle, (set, frozenset)):
            oracle = SpectrumValues(oracle)
        return {
            "name": self.name,
            "spectral": _jsonable(self.spectral),
            "oracle": _jsonable(oracle),
            "agree": self.agree,
            "witness": _jsonable(self.witness),
        }


def hamiltonian_bound_check(H: UnweightedGraph, G: UnweightedGraph) -> ReductionReport:
    """``h_H(P_n) - C(n+1, 3) + h_{K_n}(G) <= h_H(G)`` and its equality case.

    When the complement of ``H`` is connected, equality should hold exactly
    when ``G`` is a path.
    """
    if H.n != G.n:
        raise DomainError(f"vertex counts differ: {H.n} vs {G.n}")
    if not G.is_connected():
        raise DomainError("distance undefined: graph is disconnected")
    n = G.n
    path = make_named_graph("path", n)
    K = make_named_graph("complete", n)

    def sides(h):
        lhs = min(h(H, path)) - comb(n + 1, 3) + min(h(K, G))
        rhs = min(h(H, G))
        return {"lhs": Fraction(lhs), "rhs": Fraction(rhs), "inequality": lhs <= rhs, "equality": lhs == rhs}

    spectral = sides(hamiltonian_spectrum)
    oracle = sides(oracles.hamiltonian_spectrum)
    extra = {
        "complement_connected": complement(H).is_connected(),
        "g_is_path": is_isomorphic(indicator(G), indicator(path)),
        "g_is_path_complement": is_isomorphic(indicator(G), indicator(complement(path))),
    }
    if extra["complement_connected"]:
        extra["equality_iff_path"] = spectral["equality"] == extra["g_is_path"]
    return ReductionReport("hamiltonian_bound", spectral, oracle, witness=extra)


def _dense_oracle(G):
    sums = oracles.subset_sums(G.weights)
    total = sum(G.weights, Fraction(0))
    return {"union": sums, "is_interval": sums == {Fraction(i) for i in range(int(total) + 1)}}


REDUCTIONS: dict[str, tuple[Callable, Callable]] = {
    "hamiltonian": (hamiltonian_spectrum, oracles.hamiltonian_spectrum),
    "matchings": (matching_cardinalities, oracles.matching_sizes),
    "degrees": (degree_set, oracles.degrees),
    "vcolor": (is_vertex_k_colorable, oracles.vertex_colorable),
    "ecolor": (is_edge_k_colorable, oracles.edge_colorable),
    "bisection": (has_friendly_bisection, oracles.friendly_bisection),
    "econn": (is_edge_k_connected, oracles.edge_connected),
    "vconn": (is_vertex_k_connected, oracles.vertex_connected),
    "complete": (is_complete_via_spectrum, oracles.is_complete),
    "ramsey": (ramsey_avoider_exists, oracles.ramsey_avoider),
    "perp": (perp, lambda H, G: len(oracles.product_spectrum(H, G)) == 1),
}


def report(name: str, *args) -> ReductionReport:
    """Evaluate reduction ``name`` both spectrally and by brute force."""
    if name == "dense":
        (G,) = args
        res = dense_union_interval(G)
        spectral = {"union": res.union.as_set(), "is_interval": res.is_interval}
        rep = ReductionReport("dense", spectral, _dense_oracle(G))
        rep.witness = {"hypothesis": res.hypothesis, "top": res.top}
        return rep
    if name == "bound":
        return hamiltonian_bound_check(*args)
    try:
        spectral_fn, oracle_fn = REDUCTIONS[name]
    except KeyError:
        raise DomainError(f"unknown reduction {name!r}") from None
    witness = []
    takes_witness = name in ("ecolor", "bisection", "vconn", "ramsey")
    value = spectral_fn(*args, witness=witness) if takes_witness else spectral_fn(*args)
    oracle_value = oracle_fn(*args)
    return ReductionReport(name, value, oracle_value, witness=witness[0] if witness else None)


# --------------------------------------------------------------------------
# exhaustive agreement


def agreement_cases(max_n: int = 4) -> list[tuple]:
    """``(name, args)`` for every oracle-agreement check on graphs with ``n <= max_n``."""
    cases = []
    for n in range(1, max_n + 1):
        for G in graph_classes(n):
            cases.append(("matchings", (G,)))
            for k in range(1, 5):
                cases.append(("vcolor", (G, k)))
            if n >= 2:
                cases.append(("degrees", (G,)))
                cases.append(("complete", (G,)))
                for k1 in (1, 2, 3):
                    cases.append(("econn", (G, k1)))
                    if not G.is_complete():
                        cases.append(("vconn", (G, k1)))
            if 2 <= n <= 4:
                for k in (1, 2, 3):
                    cases.append(("ecolor", (G, k)))
            if n in (2, 4):
                cases.append(("bisection", (G,)))
            if n >= 2 and G.is_connected():
                cases.append(("dense", (distance_graph(G),)))
    return cases


def _run_case(case):
    name, args = case
    return report(name, *args)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CSPEC_THREADS", "1")))
    except ValueError:
        return 1


def agreement_suite(max_n: int = 4, workers: int | None = None) -> list[ReductionReport]:
    cases = agreement_cases(max_n)
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return [_run_case(c) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_case, cases, chunksize=16))
