"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--sizes 6 7 8]

Both backends get identical inputs and their outputs are checked equal
before any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from cspectra import kernels
from cspectra.canon import _rank_matrix
from cspectra.core import distance_graph, indicator, make_named_graph, num_pairs


def random_ranks(rng, n, levels):
    values = [rng.randrange(levels) for _ in range(num_pairs(n))]
    return _rank_matrix(n, values)


def symmetric_ranks(n):
    # cycles have large automorphism groups, the worst case for the prefix search
    return _rank_matrix(n, distance_graph(make_named_graph("cycle", n)).weights)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def bench_canonical(sizes, repeat, rng):
    rows = []
    for n in sizes:
        cases = [("random/2", random_ranks(rng, n, 2)), ("random/4", random_ranks(rng, n, 4)),
                 ("cycle-dist", symmetric_ranks(n))]
        for label, M in cases:
            tp, op = best_of(lambda: kernels.canonical_order(M, n, backend=kernels.python_backend), repeat)
            tc, oc = best_of(lambda: kernels.canonical_order(M, n, backend=kernels.compiled_backend), repeat)
            assert list(op) == list(oc), (label, n)
            rows.append(("canonical_order", f"n={n} {label}", tp, tc))
    return rows


def bench_sums(sizes, repeat):
    rows = []
    for n in sizes:
        H = [[int(x) for x in row] for row in indicator(make_named_graph("cycle", n)).matrix]
        G = [[int(x) for x in row] for row in distance_graph(make_named_graph("path", n)).matrix]
        tp, op = best_of(lambda: kernels.permutation_sums(H, G, n, backend=kernels.python_backend), repeat)
        tc, oc = best_of(lambda: kernels.permutation_sums(H, G, n, backend=kernels.compiled_backend), repeat)
        assert sorted(op) == sorted(int(x) for x in oc), n
        rows.append(("permutation_sums", f"n={n} cycle vs path distances", tp, tc))
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10])
    p.add_argument("--sum-sizes", type=int, nargs="+", default=[6, 7, 8, 9])
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args(argv)
    if kernels.compiled_backend is None:
        print("compiled backend not available; build with `pip install -e . --no-build-isolation`")
        return 1
    rng = random.Random(args.seed)
    rows = bench_canonical(args.sizes, args.repeat, rng) + bench_sums(args.sum_sizes, args.repeat)
    print(f"{'kernel':<18}{'case':<30}{'python [ms]':>12}{'cython [ms]':>13}{'speedup':>9}")
    for kernel, case, tp, tc in rows:
        print(f"{kernel:<18}{case:<30}{tp * 1e3:>12.2f}{tc * 1e3:>13.3f}{tp / max(tc, 1e-9):>8.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
