"""Command-line front end.

Every subcommand prints one JSON object::

    {"agree": ..., "command": ..., "inputs": ..., "oracle": ..., "result": ...}

Graphs are given as a file path or inline text, either graph6 or the JSON
schemas of :mod:`cspectra.core`.  Exit status is 0 on success, 2 when the
spectral answer and the brute-force oracle disagree, 1 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracles, reductions
from .canon import brute_force_canonical_form, canonical_form
from .core import (
    DomainError,
    UnweightedGraph,
    distance_graph,
    indicator,
    parse_graph,
)
from .reductions import ReductionReport, _jsonable
from .spectra import SpectrumValues, spectrum

GRAPH_ARGS = {
    "spectrum": ("h", "g"),
    "hamiltonian": ("h", "g"),
    "matchings": ("g",),
    "degrees": ("g",),
    "vcolor": ("g",),
    "ecolor": ("g",),
    "bisection": ("g",),
    "econn": ("g",),
    "vconn": ("g",),
    "ramsey": (),
    "dense": ("g",),
    "perp": ("h", "g"),
    "canon": ("g",),
    "selftest": (),
}
NEEDS_K = {"vcolor", "ecolor", "econn", "vconn", "ramsey"}


class UsageError(DomainError):
    pass


def read_graph(source: str):
    """Load a graph from a path if one exists, otherwise parse ``source`` itself."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source
    if not text.strip():
        raise DomainError(f"empty graph input {source!r}")
    return parse_graph(text)


def _unweighted(G, flag):
    if not isinstance(G, UnweightedGraph):
        raise UsageError(f"--{flag} must be an unweighted graph")
    return G


def _weighted(G):
    return indicator(G) if isinstance(G, UnweightedGraph) else G


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cspectra", description="Combinatorial spectra of weighted complete graphs.")
    p.add_argument("command", choices=sorted(GRAPH_ARGS))
    p.add_argument("--h", dest="h", help="first graph: path or inline graph6/JSON")
    p.add_argument("--g", dest="g", help="second graph: path or inline graph6/JSON")
    p.add_argument("--k", type=int, help="colour count, connectivity k+1, or clique size for ramsey")
    p.add_argument("--n", type=int, help="vertex count for ramsey")
    p.add_argument("--mode", choices=["labeled", "iso"], default="iso",
                   help="spectrum: iso evaluates one bijection per class, labeled all n!")
    p.add_argument("--cap", type=int, help="iteration cap for star fixpoints")
    p.add_argument("--output", help="write the JSON here instead of standard output")
    p.add_argument("--max-n", type=int, default=7, help="refuse inputs with more vertices (default 7)")
    return p


def _check_size(n, max_n):
    if n > max_n:
        raise UsageError(f"{n} vertices exceeds --max-n {max_n}")


def _report_payload(rep: ReductionReport):
    return rep.spectral, rep.oracle, rep.agree


def run(args: argparse.Namespace) -> tuple[dict, int]:
    cmd = args.command
    wanted = GRAPH_ARGS[cmd]
    for flag in ("h", "g"):
        given = getattr(args, flag) is not None
        if given != (flag in wanted):
            raise UsageError(f"{cmd} {'needs' if flag in wanted else 'does not take'} --{flag}")
    if (args.k is not None) != (cmd in NEEDS_K):
        raise UsageError(f"{cmd} {'needs' if cmd in NEEDS_K else 'does not take'} --k")
    if (args.n is not None) != (cmd == "ramsey"):
        raise UsageError(f"{cmd} {'needs' if cmd == 'ramsey' else 'does not take'} --n")

    graphs = {flag: read_graph(getattr(args, flag)) for flag in wanted}
    for G in graphs.values():
        _check_size(G.n, args.max_n)
    inputs = {flag: getattr(args, flag) for flag in wanted}
    for flag in ("k", "n"):
        if getattr(args, flag) is not None:
            inputs[flag] = getattr(args, flag)

    if cmd == "spectrum":
        H, G = _weighted(graphs["h"]), _weighted(graphs["g"])
        result = spectrum(H, G, method="pruned" if args.mode == "iso" else "naive")
        oracle = SpectrumValues(oracles.product_spectrum(H, G))
        agree = result == oracle
    elif cmd == "canon":
        G = _weighted(graphs["g"])
        result = str(canonical_form(G))
        oracle = str(brute_force_canonical_form(G))
        agree = result == oracle
    elif cmd == "ramsey":
        _check_size(args.n, args.max_n)
        witness = []
        result = reductions.ramsey_avoider_exists(args.n, args.k, witness, cap=args.cap)
        oracle = oracles.ramsey_avoider(args.n, args.k)
        agree = result == oracle
    elif cmd == "dense":
        G = graphs["g"]
        G = distance_graph(G) if isinstance(G, UnweightedGraph) else G
        result, oracle, agree = _report_payload(reductions.report("dense", G))
    elif cmd == "perp":
        H, G = _weighted(graphs["h"]), _weighted(graphs["g"])
        result, oracle, agree = _report_payload(reductions.report("perp", H, G))
    else:
        for flag in wanted:
            _unweighted(graphs[flag], flag)
        args_ = [graphs[flag] for flag in wanted]
        if cmd in NEEDS_K:
            args_.append(args.k)
        result, oracle, agree = _report_payload(reductions.report(cmd, *args_))

    if isinstance(result, SpectrumValues):
        oracle = SpectrumValues(oracle)
    payload = {
        "command": cmd,
        "inputs": inputs,
        "result": _jsonable(result),
        "oracle": _jsonable(oracle),
        "agree": bool(agree),
    }
    return payload, 0 if agree else 2


def run_selftest(max_n: int = 4) -> tuple[dict, int]:
    reps = reductions.agreement_suite(max_n)
    bad = [r.to_json() for r in reps if not r.agree]
    payload = {
        "command": "selftest",
        "inputs": {"max_n": max_n},
        "result": {"checks": len(reps), "disagreements": bad},
        "oracle": None,
        "agree": not bad,
    }
    return payload, 0 if not bad else 2


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "selftest":
            if args.h or args.g or args.k is not None or args.n is not None:
                raise UsageError("selftest takes no inputs")
            payload, code = run_selftest(min(4, args.max_n))
        else:
            payload, code = run(args)
    except (ValueError, OSError) as exc:
        print(f"cspectra: error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(payload, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
