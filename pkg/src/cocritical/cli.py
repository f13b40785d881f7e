"""Batch command line front end.

Subcommands cover the full library surface: construct (parameterized
builder), verify (co-criticality with structure checks), arrows (exhaustive
coloring search), percolate (edge-count certificates), minsearch (smallest
co-critical graphs), and props (property suites over a graph6 corpus).

Machine-readable JSON goes to stdout, a short human summary to stderr.
Exit codes are a stable contract: 0 success or determinate-true, 1
determinate-false, 2 usage or input error, 3 indeterminate (a budget ran
out before the answer was settled).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .coloring import blue_blocks, cross_graph
from .construction import (
    ConstructionParams,
    build,
    blueprint_coloring,
    expected_edge_count,
    role_layout,
    upper_bound_edges,
)
from .graphs import Graph, complete_graph
from .graph6 import emit_graph6, parse_graph6, parse_graph6_lines
from .percolation import PercolationError, run as percolation_run
from .search import (
    EXHAUSTED,
    FOUND,
    IndeterminateResultError,
    NoCriticalColoringError,
    SearchBudget,
    brute_force_exists,
    exists_critical_coloring,
    max_red_critical_coloring,
)
from .stable import hajnal_check, stable_intersection_check
from .verify import (
    CO_CRITICAL,
    INDETERMINATE,
    check_critical_structure,
    is_cocritical,
    min_cocritical_search,
    saturation_structure_checks,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3

ORACLE_PAIRS = ((3, 3), (3, 4), (4, 3))
ORACLE_EDGE_CAP = 20


def _emit(command: str, inputs: dict, results: dict, timings: dict) -> None:
    report = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "timings": {k: round(v, 3) for k, v in timings.items()},
        "version": __version__,
    }
    print(json.dumps(report, indent=2))


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _budget(args) -> SearchBudget:
    kwargs = {}
    if args.node_cap is not None:
        kwargs["node_cap"] = args.node_cap
    if args.time_cap is not None:
        kwargs["time_cap"] = args.time_cap
    return SearchBudget(**kwargs)


def _parse_construct(text: str) -> ConstructionParams:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("--construct expects T,K,N")
    t, k, n = (int(p) for p in parts)
    return ConstructionParams(t, k, n)


def _load_graph(args) -> tuple[Graph, dict]:
    """Resolve the one graph source the command was given."""
    sources = [
        s
        for s in ("construct", "complete", "graph6", "input")
        if getattr(args, s, None) is not None
    ]
    if len(sources) != 1:
        raise ValueError(
            f"need exactly one graph source among --construct/--complete/--graph6/--input, got {sources or 'none'}"
        )
    src = sources[0]
    if src == "construct":
        params = _parse_construct(args.construct)
        return build(params), {"construct": args.construct}
    if src == "complete":
        return complete_graph(args.complete), {"complete": args.complete}
    if src == "graph6":
        return parse_graph6(args.graph6), {"graph6": args.graph6}
    with open(args.input, encoding="ascii") as fh:
        text = fh.read()
    graphs = parse_graph6_lines(text)
    if len(graphs) != 1:
        raise ValueError(f"{args.input} holds {len(graphs)} graphs, expected exactly 1")
    return graphs[0], {"input": args.input}


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph6", help="inline graph6 string")
    sub.add_argument("--input", help="file with one graph6 line")
    sub.add_argument("--complete", type=int, help="use the complete graph K_n")
    sub.add_argument("--construct", help="T,K,N: use the parameterized construction")


def _add_budget(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--node-cap", type=int, help="search node budget per subproblem")
    sub.add_argument("--time-cap", type=float, help="seconds per subproblem search")


def cmd_construct(args) -> int:
    t0 = time.perf_counter()
    params = ConstructionParams(args.t, args.k, args.n)
    g = build(params)
    sigma = blueprint_coloring(params)
    built_ms = (time.perf_counter() - t0) * 1000
    results = {
        "graph6": emit_graph6(g),
        "vertices": g.n,
        "edges": g.edge_count(),
        "expected_edges": expected_edge_count(params),
        "upper_bound": str(upper_bound_edges(args.t, args.k, args.n)),
        "layout": role_layout(params).to_json(),
        "blue_edges": len(sigma.blue),
        "warnings": list(params.warnings()),
    }
    if args.emit == "graph6":
        print(emit_graph6(g))
    _emit(
        "construct",
        {"t": args.t, "k": args.k, "n": args.n, "emit": args.emit},
        results,
        {"build_ms": built_ms},
    )
    for w in params.warnings():
        _say(f"warning: {w}")
    _say(f"built {g.n} vertices, {g.edge_count()} edges")
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    g, source = _load_graph(args)
    parse_ms = (time.perf_counter() - t0) * 1000
    budget = _budget(args)
    t0 = time.perf_counter()
    report = is_cocritical(g, args.t, args.k, budget, jobs=args.jobs)
    verify_ms = (time.perf_counter() - t0) * 1000
    results = report.to_json()
    results["graph6"] = emit_graph6(g)
    checks_ms = 0.0
    if args.checks and report.verdict() == CO_CRITICAL:
        t0 = time.perf_counter()
        tau = max_red_critical_coloring(g, args.t, args.k, budget)
        structure = saturation_structure_checks(
            g, args.t, args.k, budget, cocritical_report=report, coloring=tau
        )
        results["coloring_structure_violations"] = check_critical_structure(
            g, tau, args.t, args.k
        )
        results["structure"] = structure.to_json()
        checks_ms = (time.perf_counter() - t0) * 1000
    _emit(
        "verify",
        {**source, "t": args.t, "k": args.k, "jobs": args.jobs, "checks": args.checks},
        results,
        {"parse_ms": parse_ms, "verify_ms": verify_ms, "checks_ms": checks_ms},
    )
    verdict = report.verdict()
    _say(f"verdict: {verdict}")
    if verdict == CO_CRITICAL:
        return EXIT_OK
    if verdict == INDETERMINATE:
        return EXIT_INDETERMINATE
    return EXIT_FALSE


def cmd_arrows(args) -> int:
    t0 = time.perf_counter()
    g, source = _load_graph(args)
    budget = _budget(args)
    outcome = exists_critical_coloring(g, args.t, args.k, budget)
    total_ms = (time.perf_counter() - t0) * 1000
    if outcome.status == FOUND:
        answer = False
        witness = [sorted(b) for b in outcome.witness.blocks]
    elif outcome.status == EXHAUSTED:
        answer = True
        witness = None
    else:
        _emit(
            "arrows",
            {**source, "t": args.t, "k": args.k},
            {"arrows": None, "status": outcome.status, "nodes": outcome.nodes},
            {"total_ms": total_ms},
        )
        _say("indeterminate: budget exhausted")
        return EXIT_INDETERMINATE
    _emit(
        "arrows",
        {**source, "t": args.t, "k": args.k},
        {
            "arrows": answer,
            "witness_blocks": witness,
            "nodes": outcome.nodes,
            "status": outcome.status,
        },
        {"total_ms": total_ms},
    )
    _say(f"arrows: {answer}")
    return EXIT_OK if answer else EXIT_FALSE


def cmd_percolate(args) -> int:
    t0 = time.perf_counter()
    budget = _budget(args)
    if args.construct is not None:
        params = _parse_construct(args.construct)
        g = build(params)
        blocks = blue_blocks(blueprint_coloring(params))
        source: dict = {"construct": args.construct}
    else:
        g, source = _load_graph(args)
        if args.t is None or args.k is None:
            raise ValueError("--t and --k are required to derive a coloring")
        try:
            tau = max_red_critical_coloring(g, args.t, args.k, budget)
        except NoCriticalColoringError:
            _emit(
                "percolate",
                {**source, "q": args.q},
                {"error": "graph admits no good coloring"},
                {"total_ms": (time.perf_counter() - t0) * 1000},
            )
            _say("no good coloring: nothing to percolate")
            return EXIT_FALSE
        blocks = blue_blocks(tau)
    H = cross_graph(g, blocks)
    seeds = (
        frozenset(int(p) for p in args.seed.split(",")) if args.seed is not None else None
    )
    derive_ms = (time.perf_counter() - t0) * 1000
    t0 = time.perf_counter()
    try:
        cert = percolation_run(
            H, blocks, args.q, seeds=seeds, check_progress=not args.no_progress_check
        )
    except PercolationError as exc:
        _emit(
            "percolate",
            {**source, "q": args.q, "seed": args.seed},
            {"error": str(exc), "trail": list(exc.trail)},
            {"derive_ms": derive_ms, "run_ms": (time.perf_counter() - t0) * 1000},
        )
        _say(f"percolation failed: {exc}")
        return EXIT_FALSE
    run_ms = (time.perf_counter() - t0) * 1000
    results = cert.to_json()
    results["cross_graph6"] = emit_graph6(H)
    results["blocks"] = [sorted(b) for b in blocks.blocks]
    _emit(
        "percolate",
        {**source, "q": args.q, "seed": args.seed},
        results,
        {"derive_ms": derive_ms, "run_ms": run_ms},
    )
    _say(
        f"certified={cert.certified}: e(H)={cert.edges_total} >= "
        f"{cert.q}*(n-|seeds|)={cert.edge_lower_bound} after {cert.iterations} iterations"
    )
    return EXIT_OK if cert.certified else EXIT_FALSE


def cmd_minsearch(args) -> int:
    t0 = time.perf_counter()
    budget = _budget(args)
    result = min_cocritical_search(args.t, args.k, args.n, budget)
    total_ms = (time.perf_counter() - t0) * 1000
    _emit(
        "minsearch",
        {"t": args.t, "k": args.k, "n": args.n},
        result.to_json(),
        {"total_ms": total_ms},
    )
    _say(
        f"minimum edges: {result.minimum_edges} "
        f"({len(result.witnesses)} witnesses, complete={result.complete})"
    )
    if not result.complete:
        return EXIT_INDETERMINATE
    return EXIT_OK if result.minimum_edges is not None else EXIT_FALSE


def _props_one(g: Graph, budget: SearchBudget) -> tuple[dict, bool, bool]:
    """Property suite for one corpus graph: stable-set checks plus oracle
    agreement on the standard (t,k) pairs.  Returns (row, ok, indeterminate)."""
    row: dict = {"graph6": emit_graph6(g)}
    ok = True
    indeterminate = False
    hr = hajnal_check(g)
    row["hajnal"] = {"passed": hr.passed, "alpha": hr.alpha}
    ok &= hr.passed
    sr = stable_intersection_check(g)
    row["stable_intersection"] = {
        "applicable": sr.applicable,
        "passed": sr.passed if sr.applicable else None,
    }
    if sr.applicable:
        ok &= sr.passed
    oracle: dict = {}
    if g.edge_count() <= ORACLE_EDGE_CAP:
        for t, k in ORACLE_PAIRS:
            try:
                walker = exists_critical_coloring(g, t, k, budget)
            except IndeterminateResultError:
                indeterminate = True
                oracle[f"{t},{k}"] = None
                continue
            if walker.status not in (FOUND, EXHAUSTED):
                indeterminate = True
                oracle[f"{t},{k}"] = None
                continue
            agree = (walker.status == FOUND) == brute_force_exists(g, t, k)
            oracle[f"{t},{k}"] = agree
            ok &= agree
        row["oracle_agreement"] = oracle
    else:
        row["oracle_agreement"] = "skipped: edge count above brute-force cap"
    return row, ok, indeterminate


def cmd_props(args) -> int:
    t0 = time.perf_counter()
    with open(args.corpus, encoding="ascii") as fh:
        graphs = parse_graph6_lines(fh.read())
    parse_ms = (time.perf_counter() - t0) * 1000
    budget = _budget(args)
    t0 = time.perf_counter()
    rows = []
    failures = 0
    indeterminate = 0
    for g in graphs:
        row, ok, indet = _props_one(g, budget)
        rows.append(row)
        failures += 0 if ok else 1
        indeterminate += 1 if indet else 0
    suite_ms = (time.perf_counter() - t0) * 1000
    _emit(
        "props",
        {"corpus": args.corpus, "seed": args.seed},
        {
            "graphs": len(graphs),
            "failures": failures,
            "indeterminate": indeterminate,
            "rows": rows,
        },
        {"parse_ms": parse_ms, "suite_ms": suite_ms},
    )
    _say(f"{len(graphs)} graphs: {failures} failures, {indeterminate} indeterminate")
    if failures:
        return EXIT_FALSE
    if indeterminate:
        return EXIT_INDETERMINATE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocritical",
        description="Construct, verify, and certify co-critical graphs.",
    )
    default_jobs = int(os.environ.get("COCRIT_JOBS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the parameterized co-critical graph")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=("json", "graph6"), default="json")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="decide co-criticality of a graph")
    _add_graph_source(p)
    _add_budget(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--checks", action="store_true", help="add structure check sections")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("arrows", help="does every coloring give a red clique or big blue component")
    _add_graph_source(p)
    _add_budget(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_arrows)

    p = sub.add_parser("percolate", help="bootstrap percolation certificate on the cross graph")
    _add_graph_source(p)
    _add_budget(p)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--seed", help="comma separated initial seed vertices")
    p.add_argument("--no-progress-check", action="store_true", help="exploratory run")
    p.set_defaults(fn=cmd_percolate)

    p = sub.add_parser("minsearch", help="smallest co-critical graphs on n vertices")
    _add_budget(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_minsearch)

    p = sub.add_parser("props", help="property suites over a graph6 corpus file")
    _add_budget(p)
    p.add_argument("--corpus", required=True)
    p.add_argument("--seed", type=int, default=0, help="echoed for reproducibility")
    p.set_defaults(fn=cmd_props)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except IndeterminateResultError as exc:
        _say(f"indeterminate: {exc}")
        return EXIT_INDETERMINATE
    except (ValueError, OSError) as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
