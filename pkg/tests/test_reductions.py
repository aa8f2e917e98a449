from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import product

import pytest

from cspectra import oracles
from cspectra.core import (
    DomainError,
    UnweightedGraph,
    WeightedCompleteGraph,
    complement,
    distance_graph,
    graph_add,
    indicator,
    make_named_graph,
    num_pairs,
    pairs,
    scalar_mul,
)
from cspectra.canon import canonical_form
from cspectra.reductions import (
    EVEN_INTEGERS,
    agreement_cases,
    agreement_suite,
    connected_bipartite_family,
    degree_set,
    dense_union_interval,
    diameter2_perp_equality,
    graph_classes,
    hamiltonian_bound_check,
    hamiltonian_spectrum,
    has_friendly_bisection,
    is_complete_via_spectrum,
    is_edge_k_colorable,
    is_edge_k_connected,
    is_vertex_k_colorable,
    is_vertex_k_connected,
    matching_cardinalities,
    perp,
    perp_class,
    ramsey_avoider_exists,
    report,
)
from cspectra.spectra import SpectrumValues, spectrum

g = make_named_graph
P3, C4, C5, K3, K4 = g("path", 3), g("cycle", 4), g("cycle", 5), g("complete", 3), g("complete", 4)


def values(*xs):
    return SpectrumValues(xs)


def all_labeled(n):
    ps = list(pairs(n))
    for bits in product((0, 1), repeat=len(ps)):
        yield UnweightedGraph.from_edges(n, [e for e, b in zip(ps, bits) if b])


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_graph_class_counts(n, count):
    assert len(graph_classes(n)) == count


class TestHamiltonian:
    def test_path_in_path(self):
        s = hamiltonian_spectrum(P3, P3)
        assert s == values(2, 3) and (s.min(), s.max()) == (2, 3)

    @pytest.mark.parametrize("G", [P3, C4, g("star", 5), C5])
    def test_complete_pattern_is_singleton(self, G):
        total = sum(distance_graph(G).weights)
        assert hamiltonian_spectrum(g("complete", G.n), G) == values(total)

    def test_petersen_in_star(self):
        assert hamiltonian_spectrum(g("petersen"), g("star", 10)) == values(27)

    def test_errors(self):
        with pytest.raises(DomainError):
            hamiltonian_spectrum(P3, C4)
        with pytest.raises(DomainError):
            hamiltonian_spectrum(g("path", 2), g("empty", 2))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_exhaustive_against_definition(self, n):
        for H in graph_classes(n):
            for G in graph_classes(n):
                if G.is_connected():
                    assert hamiltonian_spectrum(H, G).as_set() == oracles.hamiltonian_spectrum(H, G)

    def test_random_n5(self):
        rng = random.Random(5)
        classes = graph_classes(5)
        connected = [G for G in classes if G.is_connected()]
        for _ in range(100):
            H, G = rng.choice(classes), rng.choice(connected)
            assert hamiltonian_spectrum(H, G).as_set() == oracles.hamiltonian_spectrum(H, G)


class TestSimpleReductions:
    def test_matchings(self):
        assert matching_cardinalities(C4) == values(0, 1, 2)
        assert matching_cardinalities(g("empty", 4)) == values(0)
        assert matching_cardinalities(K4) == values(0, 1, 2)

    def test_degrees(self):
        assert degree_set(P3) == values(1, 2)
        assert degree_set(C4) == values(2)
        assert degree_set(K4) == values(3)
        with pytest.raises(DomainError):
            degree_set(g("empty", 1))

    def test_vertex_coloring(self):
        assert is_vertex_k_colorable(C4, 2)
        assert not is_vertex_k_colorable(C5, 2)
        assert is_vertex_k_colorable(K3, 3)
        assert is_vertex_k_colorable(K3, 4)
        with pytest.raises(DomainError):
            is_vertex_k_colorable(K3, 0)

    def test_edge_coloring(self):
        assert is_edge_k_colorable(C4, 2)
        assert not is_edge_k_colorable(K3, 2)
        assert is_edge_k_colorable(P3, 2)
        assert is_edge_k_colorable(K3, 3)

    def test_edge_coloring_witness_is_proper(self):
        witness = []
        assert is_edge_k_colorable(g("path", 4), 2, witness)
        colored = witness[0]
        for a in (1, 2):
            for v in range(4):
                assert sum(1 for u in range(4) if u != v and colored.weight(u, v) == a) <= 1

    def test_bisection(self):
        assert has_friendly_bisection(C4)
        assert not has_friendly_bisection(K4)
        assert has_friendly_bisection(g("empty", 4))
        with pytest.raises(DomainError):
            has_friendly_bisection(P3)

    def test_bisection_n6_against_oracle(self):
        rng = random.Random(6)
        classes = graph_classes(6)
        for G in rng.sample(classes, 25):
            assert has_friendly_bisection(G) == oracles.friendly_bisection(G)

    def test_edge_connectivity(self):
        assert is_edge_k_connected(C4, 2)
        assert not is_edge_k_connected(C4, 3)
        assert is_edge_k_connected(P3, 1)
        assert not is_edge_k_connected(P3, 2)

    def test_vertex_connectivity(self):
        assert is_vertex_k_connected(C4, 2)
        assert not is_vertex_k_connected(P3, 2)
        with pytest.raises(DomainError, match="theorem requires G ≠ K_n"):
            is_vertex_k_connected(K4, 2)

    def test_vertex_connectivity_exact_power_misses_two_isolated_vertices(self):
        # removing exactly k >= 1 vertices never exposes the empty graph on 2 vertices
        E2 = g("empty", 2)
        assert not oracles.vertex_connected(E2, 2)
        assert not is_vertex_k_connected(E2, 2)
        assert is_vertex_k_connected(E2, 2, at_most=False)
        for n in (3, 4, 5):
            for G in graph_classes(n):
                if not G.is_complete():
                    for k1 in (2, 3):
                        assert is_vertex_k_connected(G, k1, at_most=False) == oracles.vertex_connected(G, k1)

    def test_completeness(self):
        assert is_complete_via_spectrum(K4)
        assert spectrum(indicator(C4), indicator(g("partial_matching", 4, 1))) == values(0, 1)
        assert not is_complete_via_spectrum(C4)
        assert not is_complete_via_spectrum(g("empty", 3))


class TestRamsey:
    @pytest.mark.parametrize("n,expect", [(4, True), (5, True), (6, False)])
    def test_triangles(self, n, expect):
        assert ramsey_avoider_exists(n, 3) is expect
        assert oracles.ramsey_avoider(n, 3) is expect

    def test_five_vertex_witness_is_pentagon(self):
        witness = []
        assert ramsey_avoider_exists(5, 3, witness)
        red = UnweightedGraph.from_edges(5, [e for e, w in witness[0].items() if w == 1])
        assert canonical_form(indicator(red)) == canonical_form(indicator(C5))

    def test_pairs_k2(self):
        assert ramsey_avoider_exists(3, 2) is oracles.ramsey_avoider(3, 2) is False

    def test_domain(self):
        with pytest.raises(DomainError):
            ramsey_avoider_exists(3, 3)
        with pytest.raises(DomainError):
            ramsey_avoider_exists(3, 1)


class TestDense:
    def test_path(self):
        res = dense_union_interval(distance_graph(P3))
        assert res.union == values(0, 1, 2, 3, 4)
        assert res.is_interval and res.hypothesis

    def test_gap_in_weights(self):
        G = WeightedCompleteGraph(3, (Fraction(1), Fraction(3), Fraction(1)))
        res = dense_union_interval(G)
        assert not res.hypothesis
        assert res.union.as_set() == oracles.subset_sums(G.weights)

    def test_rejects_fractions(self):
        with pytest.raises(DomainError):
            dense_union_interval(WeightedCompleteGraph(2, (Fraction(1, 2),)))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_connected_distance_graphs(self, n):
        for G in graph_classes(n):
            if G.is_connected():
                res = dense_union_interval(distance_graph(G))
                assert res.hypothesis and res.is_interval
                assert res.top == sum(distance_graph(G).weights)


class TestOrthogonality:
    def test_examples(self):
        assert perp(indicator(P3), WeightedCompleteGraph.constant(3, 1))
        assert perp(indicator(g("star", 4)), indicator(C4))
        assert not perp(indicator(g("star", 3)), indicator(P3))
        with pytest.raises(DomainError):
            perp(indicator(P3), indicator(C4))

    @pytest.mark.parametrize("n,count", [(4, 8), (5, 14)])
    def test_star_class_is_regular(self, n, count):
        universe = [indicator(G) for G in all_labeled(n)]
        regular = [indicator(G) for G in all_labeled(n) if oracles.is_regular(G)]
        for family in ([indicator(g("star", n))], [distance_graph(g("star", n))]):
            got = perp_class(family, universe)
            assert got == regular
            assert len(got) == count

    @pytest.mark.parametrize("n", [4, 5])
    def test_even_degree_characterization(self, n):
        family = connected_bipartite_family(n)
        universe = [indicator(G) for G in all_labeled(n)]
        got = perp_class(family, universe, EVEN_INTEGERS)
        assert got == [indicator(G) for G in all_labeled(n) if oracles.even_degrees(G)]

    def test_even_degree_classes_n4(self):
        family = connected_bipartite_family(4)
        got = perp_class(family, [indicator(G) for G in graph_classes(4)], EVEN_INTEGERS)
        expect = [g("empty", 4), g("disjoint_cliques", 3, 1), C4]
        assert {canonical_form(x) for x in got} == {canonical_form(indicator(G)) for G in expect}

    def test_ideal_closure(self):
        family = connected_bipartite_family(4)
        members = perp_class(family, [indicator(G) for G in all_labeled(4)], EVEN_INTEGERS)
        rng = random.Random(4)
        sums = [graph_add(*rng.sample(members, 2)) for _ in range(40)]
        multiples = [scalar_mul(r, G) for G in members for r in (-3, 0, 2, 5)]
        assert perp_class(family, sums + multiples, EVEN_INTEGERS) == sums + multiples

    def test_ideal_predicate(self):
        assert EVEN_INTEGERS(values(0, 2, -4))
        assert not EVEN_INTEGERS(values(2, 3))
        assert not EVEN_INTEGERS(values(Fraction(1, 2)))

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            perp_class([indicator(P3)], [indicator(C4)])

    def test_diameter_two(self):
        S4 = g("star", 4)
        assert diameter2_perp_equality(S4, [indicator(G) for G in all_labeled(4)])
        rng = random.Random(25)
        samples = [
            WeightedCompleteGraph(5, tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(10)))
            for _ in range(30)
        ]
        assert diameter2_perp_equality(C5, samples)
        assert diameter2_perp_equality(C5, [indicator(G) for G in graph_classes(5)])
        with pytest.raises(DomainError):
            diameter2_perp_equality(g("path", 4), samples[:1])

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_constant_factor_gives_single_value(self, n):
        rng = random.Random(n)
        for _ in range(20):
            H = WeightedCompleteGraph(n, tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(num_pairs(n))))
            for c in (1, -1):
                assert len(spectrum(H, WeightedCompleteGraph.constant(n, c))) == 1


class TestBound:
    def test_cycle_against_path_complement(self):
        rep = hamiltonian_bound_check(C5, complement(g("path", 5)))
        assert rep.agree
        assert rep.spectral["inequality"] and not rep.spectral["equality"]
        assert (rep.spectral["lhs"], rep.spectral["rhs"]) == (2, 5)
        assert rep.witness["g_is_path_complement"] and not rep.witness["g_is_path"]

    def test_cycle_against_path(self):
        rep = hamiltonian_bound_check(C5, g("path", 5))
        assert rep.spectral["equality"] and rep.witness["equality_iff_path"]

    def test_cycle_against_itself(self):
        rep = hamiltonian_bound_check(C5, C5)
        assert rep.spectral["inequality"] and not rep.spectral["equality"]

    @pytest.mark.parametrize("G", [C4, g("star", 4), P3, C5, g("complete_bipartite", 2, 3)])
    def test_complete_pattern(self, G):
        rep = hamiltonian_bound_check(g("complete", G.n), G)
        assert rep.spectral["equality"]

    @pytest.mark.parametrize("n", [4, 5])
    def test_equality_exactly_for_paths(self, n):
        for H in graph_classes(n):
            if not complement(H).is_connected():
                continue
            for G in graph_classes(n):
                if G.is_connected():
                    rep = hamiltonian_bound_check(H, G)
                    assert rep.agree and rep.spectral["inequality"]
                    assert rep.witness["equality_iff_path"]

    def test_disconnected(self):
        with pytest.raises(DomainError):
            hamiltonian_bound_check(C4, g("empty", 4))


class TestReports:
    def test_json_roundtrip(self):
        rep = report("ecolor", C4, 2)
        data = json.loads(json.dumps(rep.to_json()))
        assert data["agree"] is True and data["name"] == "ecolor"
        assert data["witness"]["n"] == 4

    def test_value_sets_serialize_numerically(self):
        rep = report("dense", distance_graph(g("path", 5)))
        assert rep.to_json()["spectral"]["union"] == [str(i) for i in range(21)]

    def test_unknown(self):
        with pytest.raises(DomainError):
            report("nope", C4)

    def test_agreement_suite_n4(self):
        reps = agreement_suite(4)
        assert len(reps) == len(agreement_cases(4)) == 290
        assert all(r.agree for r in reps)

    def test_parallel_matches_serial(self, monkeypatch):
        monkeypatch.setenv("CSPEC_THREADS", "2")
        par = agreement_suite(3)
        ser = agreement_suite(3, workers=1)
        assert [r.to_json() for r in par] == [r.to_json() for r in ser]


def test_report_json_uses_rational_strings_on_both_sides():
    data = report("degrees", P3).to_json()
    assert data["spectral"] == data["oracle"] == ["1", "2"]
