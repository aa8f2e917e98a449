from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cspectra.core import UnweightedGraph, WeightedCompleteGraph, num_pairs, pairs

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SMALL_WEIGHTS = [Fraction(x) for x in (-2, -1, 0, 1, 2)] + [Fraction(1, 2)]


@st.composite
def weighted_graphs(draw, n=None, weights=SMALL_WEIGHTS, min_n=0, max_n=5):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    ws = draw(st.lists(st.sampled_from(weights), min_size=num_pairs(n), max_size=num_pairs(n)))
    return WeightedCompleteGraph(n, tuple(ws))


@st.composite
def unweighted_graphs(draw, n=None, min_n=0, max_n=6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=num_pairs(n), max_size=num_pairs(n)))
    return UnweightedGraph.from_edges(n, [e for e, b in zip(pairs(n), bits) if b])


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(range(n))))


def all_weighted(n, weights):
    """Every labeled weighting of K_n over ``weights``."""
    for ws in product(weights, repeat=num_pairs(n)):
        yield WeightedCompleteGraph(n, tuple(Fraction(w) for w in ws))


def random_weighted(rng: random.Random, n: int, weights=(0, 1, 2)) -> WeightedCompleteGraph:
    return WeightedCompleteGraph(n, tuple(Fraction(rng.choice(weights)) for _ in range(num_pairs(n))))


@pytest.fixture
def rng():
    return random.Random(20240611)


# one summary line per acceptance criterion, printed after the run
_CRITERIA: dict = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    passed = call.excinfo is None
    prev = _CRITERIA.get(number)
    elapsed = call.duration + (prev[2] if prev else 0.0)
    passed = passed and (prev[1] if prev else True)
    _CRITERIA[number] = (title, passed, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, passed, elapsed = _CRITERIA[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}  ({elapsed:.1f}s)")
