"""Co-criticality verification and structural consequence checks.

A non-complete graph is co-critical for (t, k) when it has a good coloring
(no red clique on t vertices, no blue component on k) but gains none back
after any single edge addition: every supergraph g+e must exhaust its search
space without finding one.  The verifier runs that search once on the base
graph and once per non-edge, merges the results deterministically, and keeps
the three possible answers apart: co-critical, demonstrably not, or
indeterminate because a budget ran out.

The structural checks translate what must hold for verified co-critical
graphs under a maximum-red coloring into executable form: degree windows on
the red side, cliques in common cross-neighborhoods behind every missing
cross edge, forced block sizes next to singleton blocks, a clean minimum-
degree neighborhood, a degree/k trade-off, a strict lower bound on
within-block edges, and connectivity of the cross graph.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .canon import nonisomorphic_graphs
from .coloring import (
    BlockPartition,
    EdgeColoring,
    blue_blocks,
    cross_graph,
    is_critical,
)
from .construction import block_edge_lower_bound
from .graphs import (
    Graph,
    add_edge,
    bitmask,
    clique_in_mask,
    components,
    enumerate_cliques_in_mask,
    induced_subgraph,
    iter_bits,
)
from .graph6 import emit_graph6
from .search import (
    BUDGET_EXCEEDED,
    EXHAUSTED,
    FOUND,
    SearchBudget,
    exists_critical_coloring,
    max_red_critical_coloring,
)
from .stable import clique_core

Edge = tuple[int, int]

CO_CRITICAL = "co-critical"
NOT_CO_CRITICAL = "not-co-critical"
INDETERMINATE = "indeterminate"

STILL_COLORABLE = "still-colorable"
BUDGET = "budget"


@dataclass(frozen=True)
class CocriticalReport:
    t: int
    k: int
    non_edge_count: int
    base_status: str
    base_witness: BlockPartition | None
    failures: tuple[tuple[Edge, str], ...]
    per_edge_stats: tuple[tuple[Edge, int, float], ...]
    complete: bool

    @property
    def is_cocritical(self) -> bool:
        return self.verdict() == CO_CRITICAL

    def verdict(self) -> str:
        if self.non_edge_count == 0:
            return NOT_CO_CRITICAL  # complete graphs are excluded by definition
        if self.base_status == BUDGET_EXCEEDED:
            return INDETERMINATE
        if self.base_status == EXHAUSTED:
            return NOT_CO_CRITICAL
        if any(reason == STILL_COLORABLE for _, reason in self.failures):
            return NOT_CO_CRITICAL
        if any(reason == BUDGET for _, reason in self.failures) or not self.complete:
            return INDETERMINATE
        return CO_CRITICAL

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "k": self.k,
            "non_edges": self.non_edge_count,
            "verdict": self.verdict(),
            "is_cocritical": self.is_cocritical,
            "base_status": self.base_status,
            "base_witness": None
            if self.base_witness is None
            else [sorted(b) for b in self.base_witness.blocks],
            "failures": [[list(edge), reason] for edge, reason in self.failures],
            "per_edge_stats": [
                {"edge": list(edge), "nodes": nodes, "millis": round(ms, 3)}
                for edge, nodes, ms in self.per_edge_stats
            ],
            "complete": self.complete,
        }


def _nonedge_task(payload: tuple[Graph, int, int, Edge, SearchBudget]):
    g, t, k, edge, budget = payload
    outcome = exists_critical_coloring(add_edge(g, *edge), t, k, budget)
    return edge, outcome.status, outcome.nodes, outcome.millis


def is_cocritical(
    g: Graph,
    t: int,
    k: int,
    budget: SearchBudget | None = None,
    jobs: int = 1,
    fail_fast: bool = False,
) -> CocriticalReport:
    """Full co-criticality report; the budget applies to each search separately.

    jobs > 1 spreads the independent non-edge checks over worker processes;
    results are merged back in non-edge order, so only wall time changes.
    fail_fast stops at the first failed non-edge (report marked incomplete),
    which is enough to answer "not co-critical" early.
    """
    budget = budget or SearchBudget()
    base = exists_critical_coloring(g, t, k, budget)
    non_edges = g.non_edges()
    if base.status != FOUND or not non_edges:
        # no good base coloring (or complete graph): settled without edge scans
        return CocriticalReport(
            t, k, len(non_edges), base.status, base.witness, (), (), True
        )
    failures: list[tuple[Edge, str]] = []
    stats: list[tuple[Edge, int, float]] = []
    complete = True
    if jobs > 1 and not fail_fast:
        payloads = [(g, t, k, e, budget) for e in non_edges]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_nonedge_task, payloads))
    else:
        results = []
        for e in non_edges:
            results.append(_nonedge_task((g, t, k, e, budget)))
            if fail_fast and results[-1][1] != EXHAUSTED:
                break
    for edge, status, nodes, ms in results:
        stats.append((edge, nodes, ms))
        if status == FOUND:
            failures.append((edge, STILL_COLORABLE))
        elif status == BUDGET_EXCEEDED:
            failures.append((edge, BUDGET))
    if len(results) < len(non_edges):
        complete = False
    return CocriticalReport(
        t,
        k,
        len(non_edges),
        base.status,
        base.witness,
        tuple(failures),
        tuple(stats),
        complete,
    )


# --- structure of good colorings on co-critical graphs ----------------------


def check_critical_structure(g: Graph, c: EdgeColoring, t: int, k: int) -> list[str]:
    """Violations of the blue-component structure forced by co-criticality.

    On a co-critical graph every good coloring must have blue components that
    induce complete subgraphs, the components on fewer than k/2 vertices must
    be pairwise fully adjacent in the base graph, and there can be at most
    t-1 of those small ones.  Returns human-readable violations; empty means
    the coloring is consistent with co-criticality of its base graph.
    """
    if c.base != g:
        raise ValueError("coloring does not belong to this graph")
    if not is_critical(c, t, k):
        raise ValueError("coloring is not good for these parameters")
    violations: list[str] = []
    blocks = blue_blocks(c).blocks
    for b in blocks:
        if len(b) > k - 1:
            violations.append(f"blue component {sorted(b)} has {len(b)} >= k vertices")
        members = sorted(b)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if not g.has_edge(u, v):
                    violations.append(
                        f"blue component {members} misses base edge ({u},{v})"
                    )
    small = [b for b in blocks if 2 * len(b) < k]
    for i, b1 in enumerate(small):
        for b2 in small[i + 1 :]:
            for u in sorted(b1):
                for v in sorted(b2):
                    if not g.has_edge(u, v):
                        violations.append(
                            f"small components {sorted(b1)} and {sorted(b2)} "
                            f"miss edge ({u},{v})"
                        )
    if len(small) > t - 1:
        violations.append(f"{len(small)} components below k/2 vertices exceeds t-1 = {t - 1}")
    return violations


@dataclass(frozen=True)
class StructureItem:
    applicable: bool
    passed: bool | None
    details: dict

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "passed": self.passed, "details": self.details}


@dataclass(frozen=True)
class StructureReport:
    t: int
    k: int
    coloring: EdgeColoring
    blocks: BlockPartition
    items: dict[str, StructureItem]

    def all_passed(self) -> bool:
        return all(item.passed for item in self.items.values() if item.applicable)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "k": self.k,
            "blocks": [sorted(b) for b in self.blocks.blocks],
            "all_passed": self.all_passed(),
            "items": {name: item.to_json() for name, item in self.items.items()},
        }


def saturation_structure_checks(
    g: Graph,
    t: int,
    k: int,
    budget: SearchBudget | None = None,
    cocritical_report: CocriticalReport | None = None,
    coloring: EdgeColoring | None = None,
) -> StructureReport:
    """Evaluate the structural facts that hold for verified co-critical graphs.

    Refuses to run unless the graph is verified co-critical (pass a report to
    skip re-verification).  The checks run against a maximum-red good coloring
    and its cross graph; conditional items report applicable=False when their
    hypotheses are not met.
    """
    budget = budget or SearchBudget()
    if cocritical_report is None:
        cocritical_report = is_cocritical(g, t, k, budget)
    if cocritical_report.verdict() != CO_CRITICAL:
        raise ValueError(
            f"structure checks need a verified co-critical graph, got {cocritical_report.verdict()}"
        )
    tau = coloring or max_red_critical_coloring(g, t, k, budget)
    blocks = blue_blocks(tau)
    H = cross_graph(g, blocks)
    n = g.n
    items: dict[str, StructureItem] = {}

    red = tau.red_graph()
    max_red, min_red = red.max_degree(), red.min_degree()
    items["degree_bounds"] = StructureItem(
        True,
        max_red <= n - 2 and min_red >= 2 * (t - 2),
        {"max_red_degree": max_red, "min_red_degree": min_red, "max_allowed": n - 2, "min_required": 2 * (t - 2)},
    )

    block_index = {}
    for i, b in enumerate(blocks.blocks):
        for v in b:
            block_index[v] = i
    cross_nonedges = [
        (u, v) for u, v in g.non_edges() if block_index[u] != block_index[v]
    ]
    failures_b = [
        (u, v)
        for u, v in cross_nonedges
        if not clique_in_mask(H, H.adj[u] & H.adj[v], t - 2)
    ]
    items["cross_nonedge_clique"] = StructureItem(
        bool(cross_nonedges),
        not failures_b if cross_nonedges else None,
        {"checked": len(cross_nonedges), "failures": [list(e) for e in failures_b]},
    )

    items["forced_block_sizes"] = _forced_block_sizes_item(g, H, blocks, block_index, t, k)
    items["min_neighborhood_core"] = _min_neighborhood_core_item(H, t, k)

    delta_h = H.min_degree()
    items["degree_tradeoff"] = StructureItem(
        True,
        k >= 2 * t - 1 - delta_h and delta_h >= t - 1,
        {"min_cross_degree": delta_h, "k_required": 2 * t - 1 - delta_h, "degree_required": t - 1},
    )

    within = g.edge_count() - H.edge_count()
    rhs = block_edge_lower_bound(t, k, n)
    items["block_edge_total"] = StructureItem(
        True,
        Fraction(within) > rhs,
        {"within_block_edges": within, "strict_lower_bound": str(rhs)},
    )

    items["cross_graph_connected"] = StructureItem(
        True, len(components(H)) == 1, {"components": len(components(H))}
    )

    return StructureReport(t, k, tau, blocks, items)


def _forced_block_sizes_item(
    g: Graph,
    H: Graph,
    blocks: BlockPartition,
    block_index: dict[int, int],
    t: int,
    k: int,
) -> StructureItem:
    """Singleton blocks pinned inside every neighborhood clique force all the
    blocks they do not dominate to be full size."""
    singletons = [next(iter(b)) for b in blocks.blocks if len(b) == 1]
    triggered = 0
    failures: list[dict] = []
    for v in singletons:
        for u in sorted(iter_bits(H.adj[v])):
            nb = H.adj[u]
            cliques = enumerate_cliques_in_mask(H, nb, t - 2)
            if not cliques or any(v not in q for q in cliques):
                continue
            triggered += 1
            for b in blocks.blocks:
                if u in b:
                    continue
                members = bitmask(b)
                if members & ~nb and len(b) != k - 1:
                    failures.append(
                        {"singleton": v, "edge_end": u, "block": sorted(b), "size": len(b)}
                    )
    return StructureItem(
        triggered > 0,
        (not failures) if triggered else None,
        {"triggered_pairs": triggered, "failures": failures},
    )


def _min_neighborhood_core_item(H: Graph, t: int, k: int) -> StructureItem:
    """At low minimum cross degree (and k >= t) no edge of a minimum-degree
    vertex's neighborhood may lie in every max-order clique of it."""
    delta_h = H.min_degree()
    applicable = delta_h <= 2 * t - 5 and k >= t
    if not applicable:
        return StructureItem(False, None, {"min_cross_degree": delta_h, "threshold": 2 * t - 5})
    failures: list[dict] = []
    checked = []
    for u in range(H.n):
        if H.degree(u) != delta_h:
            continue
        sub = induced_subgraph(H, iter_bits(H.adj[u]))
        try:
            core = clique_core(sub, t - 2)
        except ValueError:
            checked.append({"vertex": u, "cliques": 0})
            continue
        core_edges = [
            (a, b)
            for a in sorted(core)
            for b in sorted(core)
            if a < b and sub.has_edge(a, b)
        ]
        checked.append({"vertex": u, "core_size": len(core)})
        if core_edges:
            failures.append({"vertex": u, "pinned_edges": [list(e) for e in core_edges]})
    return StructureItem(True, not failures, {"checked": checked, "failures": failures})


# --- smallest co-critical graphs by exhaustive scan --------------------------


@dataclass(frozen=True)
class MinSearchResult:
    t: int
    k: int
    n: int
    minimum_edges: int | None
    witnesses: tuple[Graph, ...]
    examined: int
    indeterminate: tuple[tuple[Graph, int], ...]

    @property
    def complete(self) -> bool:
        return not self.indeterminate

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "k": self.k,
            "n": self.n,
            "minimum_edges": self.minimum_edges,
            "witnesses": [emit_graph6(g) for g in self.witnesses],
            "examined": self.examined,
            "complete": self.complete,
            "indeterminate": [
                {"graph6": emit_graph6(g), "edges": e} for g, e in self.indeterminate
            ],
        }


MIN_SEARCH_ORDER_CAP = 8


def min_cocritical_search(
    t: int, k: int, n: int, budget: SearchBudget | None = None
) -> MinSearchResult:
    """Scan every graph on n vertices up to isomorphism, in edge-count order,
    for co-critical ones; report the minimum size and all witnesses there.

    The scan stops once the edge count passes a confirmed minimum.  Budget
    caps apply to each individual search; graphs left indeterminate by them
    are reported and make the result incomplete.
    """
    if n > MIN_SEARCH_ORDER_CAP:
        raise ValueError(f"exhaustive scan guarded to n <= {MIN_SEARCH_ORDER_CAP}")
    budget = budget or SearchBudget()
    minimum: int | None = None
    witnesses: list[Graph] = []
    indeterminate: list[tuple[Graph, int]] = []
    examined = 0
    for g in nonisomorphic_graphs(n):
        e = g.edge_count()
        if minimum is not None and e > minimum:
            break
        if not g.non_edges():
            continue  # complete graph can never be co-critical
        examined += 1
        report = is_cocritical(g, t, k, budget, fail_fast=True)
        verdict = report.verdict()
        if verdict == CO_CRITICAL:
            minimum = e
            witnesses.append(g)
        elif verdict == INDETERMINATE:
            indeterminate.append((g, e))
    return MinSearchResult(
        t, k, n, minimum, tuple(witnesses), examined, tuple(indeterminate)
    )
