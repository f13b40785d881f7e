"""Deciding, enumerating, and optimizing good colorings by partition search.

A good coloring for (t, k) exists iff the vertex set splits into connected
blocks of at most k-1 vertices whose block-crossing edges contain no clique on
t vertices: color within-block edges blue and crossing edges red.  The search
therefore walks vertex partitions rather than edge colorings.

The walker builds blocks in order of their smallest member: it takes the
lowest unassigned vertex, enumerates every connected block through it (each
exactly once), and recurses on the remainder.  Once a block is fixed, every
edge leaving it is guaranteed to cross, so those edges join a growing "cross"
graph immediately; a new clique on t vertices can only appear through a newly
crossed edge, which keeps the pruning test local and cheap.  Cross edges only
accumulate along a branch, so pruning is monotone-safe and a completed walk is
a proof of exhaustion.

Budgets cap tree nodes and wall time; outcomes say whether the space was
exhausted or the budget ran out, and an `arrows` query that dies on budget
raises instead of guessing.  The brute-force routines scan all 2^e colorings
directly and exist to cross-check the partition search on small inputs; they
share no code with it on purpose.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product

from .coloring import (
    BlockPartition,
    EdgeColoring,
    cross_graph,
    is_critical,
    make_coloring,
    make_partition,
)
from .graphs import (
    Graph,
    _clique_rec,
    enumerate_cliques,
    has_clique,
    is_connected_mask,
    iter_bits,
)

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"

DEFAULT_NODE_CAP = 10**8
DEFAULT_TIME_CAP = 600.0
DEFAULT_ENUMERATION_CAP = 10**6
BRUTE_FORCE_EDGE_CAP = 20


class IndeterminateResultError(RuntimeError):
    """A yes/no question could not be settled within the search budget."""

    def __init__(self, message: str, nodes: int, millis: float):
        super().__init__(message)
        self.nodes = nodes
        self.millis = millis


class NoCriticalColoringError(ValueError):
    """An optimization over good colorings was asked of a graph that has none."""


@dataclass(frozen=True)
class SearchBudget:
    node_cap: int = DEFAULT_NODE_CAP
    time_cap: float = DEFAULT_TIME_CAP
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self) -> None:
        if self.node_cap <= 0 or self.time_cap <= 0 or self.enumeration_cap <= 0:
            raise ValueError("budget caps must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: BlockPartition | None
    nodes: int
    millis: float

    def __post_init__(self) -> None:
        if (self.status == FOUND) != (self.witness is not None):
            raise ValueError("witness must accompany exactly the found status")


def outcome_to_json(outcome: SearchOutcome) -> dict:
    doc: dict = {
        "status": outcome.status,
        "blocks": None,
        "nodes": outcome.nodes,
        "millis": round(outcome.millis, 3),
    }
    if outcome.witness is not None:
        doc["blocks"] = [sorted(b) for b in outcome.witness.blocks]
    return doc


class _BudgetHit(Exception):
    pass


def _walk_partitions(g: Graph, t: int, k: int, budget: SearchBudget, on_partition, on_block=None):
    """Visit every connected-block partition with a clique-free cross graph.

    on_partition(blocks) gets the list of block masks of each complete
    partition and returns True to stop the walk.  on_block(blocks), when
    given, can veto a just-placed block (return False) to prune its subtree;
    it must only ever cut provably useless branches.  Returns
    (status, nodes, millis) where status is EXHAUSTED, FOUND (stopped by
    on_partition), or BUDGET_EXCEEDED.
    """
    if t < 2 or k < 2:
        raise ValueError("parameters must be at least 2")
    n = g.n
    adj = g.adj
    limit = k - 1
    need = t - 2
    cross = [0] * n
    blocks: list[int] = []
    start = time.perf_counter()
    deadline = start + budget.time_cap
    node_cap = budget.node_cap
    state = {"nodes": 0, "stopped": False}

    def place(unassigned: int) -> None:
        if unassigned == 0:
            if on_partition(blocks):
                state["stopped"] = True
            return
        v0_bit = unassigned & -unassigned
        grow(v0_bit, adj[v0_bit.bit_length() - 1], 0, unassigned)

    def grow(block: int, reach: int, forbidden: int, unassigned: int) -> None:
        attempt(block, unassigned)
        if state["stopped"] or block.bit_count() == limit:
            return
        cand = reach & unassigned & ~block & ~forbidden
        used = 0
        while cand:
            low = cand & -cand
            cand ^= low
            grow(block | low, reach | adj[low.bit_length() - 1], forbidden | used, unassigned)
            if state["stopped"]:
                return
            used |= low

    def attempt(block: int, unassigned: int) -> None:
        nodes = state["nodes"] + 1
        state["nodes"] = nodes
        if nodes > node_cap:
            raise _BudgetHit
        if not nodes & 1023 and time.perf_counter() > deadline:
            raise _BudgetHit
        rest = unassigned & ~block
        added: list[tuple[int, int, int, int]] = []
        ok = True
        bm = block
        while bm and ok:
            u_bit = bm & -bm
            bm ^= u_bit
            u = u_bit.bit_length() - 1
            targets = adj[u] & rest
            row_u = cross[u]
            while targets:
                w_bit = targets & -targets
                targets ^= w_bit
                w = w_bit.bit_length() - 1
                row_u |= w_bit
                cross[u] = row_u
                cross[w] |= u_bit
                added.append((u, w_bit, w, u_bit))
                common = row_u & cross[w]
                if need == 2:
                    # clique through the new edge = any edge inside the
                    # common cross neighborhood
                    m = common
                    while m:
                        x_bit = m & -m
                        m ^= x_bit
                        if cross[x_bit.bit_length() - 1] & m:
                            ok = False
                            break
                    if not ok:
                        break
                elif _clique_rec(cross, common, need):
                    ok = False
                    break
        if ok:
            blocks.append(block)
            if on_block is None or on_block(blocks):
                place(rest)
            blocks.pop()
        for u, w_bit, w, u_bit in added:
            cross[u] ^= w_bit
            cross[w] ^= u_bit

    try:
        place(g.vertex_mask)
        status = FOUND if state["stopped"] else EXHAUSTED
    except _BudgetHit:
        status = BUDGET_EXCEEDED
    millis = (time.perf_counter() - start) * 1000.0
    return status, state["nodes"], millis


def _blocks_to_partition(block_masks: list[int], max_block: int) -> BlockPartition:
    return BlockPartition(
        tuple(frozenset(iter_bits(m)) for m in block_masks),
        max_block,
    )


def _assert_witness(g: Graph, t: int, k: int, p: BlockPartition) -> None:
    # independent re-validation of what the walker promised
    from .graphs import bitmask

    for b in p.blocks:
        if len(b) > k - 1:
            raise AssertionError("witness block too large")
        if not is_connected_mask(g, bitmask(b)):
            raise AssertionError("witness block not connected")
    if has_clique(cross_graph(g, p), t):
        raise AssertionError("witness cross graph has a forbidden clique")


def exists_critical_coloring(g: Graph, t: int, k: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """Decide whether g admits a good coloring; found outcomes carry a partition."""
    budget = budget or SearchBudget()
    holder: list[BlockPartition] = []

    def on_partition(blocks: list[int]) -> bool:
        holder.append(_blocks_to_partition(blocks, k - 1))
        return True

    status, nodes, millis = _walk_partitions(g, t, k, budget, on_partition)
    witness = holder[0] if holder else None
    if witness is not None:
        _assert_witness(g, t, k, witness)
    return SearchOutcome(status, witness, nodes, millis)


def arrows(g: Graph, t: int, k: int, budget: SearchBudget | None = None) -> bool:
    """Does every red/blue coloring of g produce a red t-clique or a blue
    component on at least k vertices?  Raises when the budget runs out first."""
    outcome = exists_critical_coloring(g, t, k, budget)
    if outcome.status == BUDGET_EXCEEDED:
        raise IndeterminateResultError(
            f"arrowing undecided within budget after {outcome.nodes} nodes",
            outcome.nodes,
            outcome.millis,
        )
    return outcome.status == EXHAUSTED


# --- refinements of a partition into explicit colorings ---------------------


def _spanning_connected_subsets(g: Graph, block_mask: int) -> list[tuple[tuple[int, int], ...]]:
    """Edge subsets inside the block that connect all its vertices, ordered by
    (size, lexicographic edge tuple)."""
    verts = list(iter_bits(block_mask))
    inner = [
        (u, v)
        for i, u in enumerate(verts)
        for v in verts[i + 1 :]
        if g.adj[u] >> v & 1
    ]
    if len(verts) == 1:
        return [()]
    out = []
    for size in range(len(verts) - 1, len(inner) + 1):
        for combo in combinations(inner, size):
            reach = 1 << verts[0]
            changed = True
            while changed:
                changed = False
                for u, v in combo:
                    um, vm = 1 << u, 1 << v
                    if bool(reach & um) != bool(reach & vm):
                        reach |= um | vm
                        changed = True
            if reach == block_mask:
                out.append(combo)
    return out


def enumerate_critical_colorings(g: Graph, t: int, k: int, budget: SearchBudget | None = None) -> list[EdgeColoring]:
    """All good colorings, ordered by partition then blue edge set.

    The result is truncated at budget.enumeration_cap; running out of nodes or
    time before the space is exhausted raises instead, because a partial
    answer to "list them all" is not an answer.
    """
    budget = budget or SearchBudget()
    results: list[tuple[tuple, tuple, EdgeColoring]] = []
    cap = budget.enumeration_cap

    def on_partition(blocks: list[int]) -> bool:
        part_key = tuple(tuple(iter_bits(m)) for m in blocks)
        per_block = [_spanning_connected_subsets(g, m) for m in blocks]
        local = []
        for combo in product(*per_block):
            blue = tuple(sorted(e for part in combo for e in part))
            c = make_coloring(g, blue)
            if not has_clique(c.red_graph(), t):
                local.append((part_key, blue, c))
        local.sort(key=lambda item: item[1])
        results.extend(local)
        return len(results) >= cap

    status, nodes, millis = _walk_partitions(g, t, k, budget, on_partition)
    if status == BUDGET_EXCEEDED:
        raise IndeterminateResultError(
            f"enumeration incomplete after {nodes} nodes", nodes, millis
        )
    results.sort(key=lambda item: (item[0], item[1]))
    return [c for _, _, c in results[:cap]]


def max_red_critical_coloring(g: Graph, t: int, k: int, budget: SearchBudget | None = None) -> EdgeColoring:
    """A good coloring with the most red edges; first in canonical order on ties.

    Minimizing blue is the same thing, and each block needs at least
    block-size - 1 blue edges to hold together, which gives the bound used to
    prune partitions that cannot beat the best coloring found so far.
    """
    budget = budget or SearchBudget()
    best: dict = {"count": None, "blue": None}

    def lower_bound(blocks: list[int]) -> int:
        return sum(m.bit_count() - 1 for m in blocks)

    def on_block(blocks: list[int]) -> bool:
        return best["count"] is None or lower_bound(blocks) < best["count"]

    def on_partition(blocks: list[int]) -> bool:
        if best["count"] is not None and lower_bound(blocks) >= best["count"]:
            return False
        per_block = [_spanning_connected_subsets(g, m) for m in blocks]
        combos = []
        for combo in product(*per_block):
            blue = tuple(sorted(e for part in combo for e in part))
            combos.append(blue)
        combos.sort(key=lambda blue: (len(blue), blue))
        for blue in combos:
            if best["count"] is not None and len(blue) >= best["count"]:
                break
            c = make_coloring(g, blue)
            if not has_clique(c.red_graph(), t):
                best["count"] = len(blue)
                best["blue"] = blue
                break
        return False

    status, nodes, millis = _walk_partitions(g, t, k, budget, on_partition, on_block)
    if status == BUDGET_EXCEEDED:
        raise IndeterminateResultError(
            f"maximization incomplete after {nodes} nodes", nodes, millis
        )
    if best["count"] is None:
        raise NoCriticalColoringError("graph admits no good coloring")
    coloring = make_coloring(g, best["blue"])
    assert is_critical(coloring, t, k)
    return coloring


# --- independent brute-force oracle ------------------------------------------


def brute_force_exists(g: Graph, t: int, k: int) -> bool:
    """Scan all 2^e colorings for a good one.  Oracle for the partition search."""
    for _ in _brute_force_scan(g, t, k):
        return True
    return False


def brute_force_critical_colorings(g: Graph, t: int, k: int) -> list[EdgeColoring]:
    """Every good coloring, by exhaustive scan.  Cross-check for enumerate."""
    return [make_coloring(g, blue) for blue in _brute_force_scan(g, t, k)]


def _brute_force_scan(g: Graph, t: int, k: int):
    if t < 2 or k < 2:
        raise ValueError("parameters must be at least 2")
    edges = g.edges()
    e = len(edges)
    if e > BRUTE_FORCE_EDGE_CAP:
        raise ValueError(f"brute force guarded to {BRUTE_FORCE_EDGE_CAP} edges, got {e}")
    index = {edge: i for i, edge in enumerate(edges)}
    clique_masks = []
    for q in enumerate_cliques(g, t) if t <= g.n else []:
        m = 0
        for u, v in combinations(sorted(q), 2):
            m |= 1 << index[(u, v)]
        clique_masks.append(m)
    n = g.n
    bound = k - 1
    for blue in range(1 << e):
        ok = True
        for cm in clique_masks:
            if not cm & blue:  # fully red clique
                ok = False
                break
        if not ok:
            continue
        # blue component sizes via union-find, abort past the bound
        parent = list(range(n))
        size = [1] * n
        bm = blue
        while bm and ok:
            low = bm & -bm
            bm ^= low
            u, v = edges[low.bit_length() - 1]
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u == v:
                continue
            if size[u] < size[v]:
                u, v = v, u
            parent[v] = u
            size[u] += size[v]
            if size[u] > bound:
                ok = False
        if ok:
            yield tuple(edges[i] for i in iter_bits(blue))
