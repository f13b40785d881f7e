"""Two-colorings of graph edges and vertex-block partitions.

A coloring is *good* for parameters (t, k) when the red side has no clique on
t vertices and every blue component spans fewer than k vertices.  The blue
condition is a pure component-size bound: a blue component on k or more
vertices contains a spanning tree on k of them, and conversely every tree on k
vertices needs a component that large, so no subtree search is ever required.

Block partitions are the search-side view of the same object: grouping the
vertices into connected blocks and coloring exactly the within-block edges
blue turns a partition into a coloring, and the blue components of a good
coloring recover such a partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph6 import emit_graph6, parse_graph6
from .graphs import Graph, bitmask, components, has_clique, iter_bits, make_graph

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError("loop is not an edge")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeColoring:
    """Partition of a graph's edges into red and blue."""

    base: Graph
    red: frozenset[Edge]
    blue: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "red", frozenset(self.red))
        object.__setattr__(self, "blue", frozenset(self.blue))
        all_edges = set(self.base.edges())
        if self.red & self.blue:
            raise ValueError("red and blue overlap")
        if self.red | self.blue != all_edges:
            raise ValueError("coloring does not cover the edge set exactly")

    def red_graph(self) -> Graph:
        return make_graph(self.base.n, self.red)

    def blue_graph(self) -> Graph:
        return make_graph(self.base.n, self.blue)


def make_coloring(g: Graph, blue: Iterable[Edge]) -> EdgeColoring:
    """Coloring of g with the given edges blue and the rest red."""
    blue_set = frozenset(normalize_edge(u, v) for u, v in blue)
    red_set = frozenset(g.edges()) - blue_set
    return EdgeColoring(g, red_set, blue_set)


def is_critical(c: EdgeColoring, t: int, k: int) -> bool:
    """No red clique on t vertices and every blue component below k vertices."""
    if t < 2 or k < 2:
        raise ValueError("parameters must be at least 2")
    if has_clique(c.red_graph(), t):
        return False
    return all(len(comp) <= k - 1 for comp in components(c.blue_graph()))


@dataclass(frozen=True)
class BlockPartition:
    """Disjoint vertex blocks, ordered by smallest member, sizes <= max_block."""

    blocks: tuple[frozenset[int], ...]
    max_block: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if len(b) > self.max_block:
                raise ValueError(f"block of size {len(b)} exceeds bound {self.max_block}")
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= b
        mins = [min(b) for b in self.blocks]
        if mins != sorted(mins):
            raise ValueError("blocks not ordered by smallest member")

    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    def block_of(self, v: int) -> frozenset[int]:
        for b in self.blocks:
            if v in b:
                return b
        raise ValueError(f"vertex {v} not covered")

    def size_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(len(b) for b in self.blocks))


def make_partition(blocks: Iterable[Iterable[int]], max_block: int | None = None) -> BlockPartition:
    """Normalize block order; max_block defaults to the largest block size."""
    frozen = [frozenset(b) for b in blocks]
    frozen.sort(key=lambda b: min(b) if b else -1)
    if max_block is None:
        max_block = max((len(b) for b in frozen), default=1)
    return BlockPartition(tuple(frozen), max_block)


def _check_cover(g: Graph, p: BlockPartition) -> None:
    covered = p.vertices()
    expected = frozenset(range(g.n))
    if covered != expected:
        missing = sorted(expected - covered)
        extra = sorted(covered - expected)
        raise ValueError(f"partition does not match vertex set (missing {missing}, extra {extra})")


def partition_to_coloring(g: Graph, p: BlockPartition) -> EdgeColoring:
    """Within-block edges blue, cross edges red."""
    _check_cover(g, p)
    blue = []
    for b in p.blocks:
        mask = bitmask(b)
        for v in b:
            row = g.adj[v] & mask
            blue.extend((v, u) for u in _bits_above(row, v))
    return make_coloring(g, blue)


def _bits_above(mask: int, v: int) -> Iterable[int]:
    return iter_bits(mask >> (v + 1) << (v + 1))


def cross_graph(g: Graph, p: BlockPartition) -> Graph:
    """g with every within-block edge removed; only block-crossing edges remain."""
    _check_cover(g, p)
    rows = list(g.adj)
    for b in p.blocks:
        mask = bitmask(b)
        for v in b:
            rows[v] &= ~mask
    return Graph(g.n, tuple(rows))


def blue_blocks(c: EdgeColoring) -> BlockPartition:
    """Blue components of a coloring as a partition (isolated vertices included)."""
    comps = components(c.blue_graph())
    return make_partition(comps)


# --- serialization ----------------------------------------------------------


def coloring_to_json(c: EdgeColoring) -> dict:
    return {
        "graph6": emit_graph6(c.base),
        "red": [list(e) for e in sorted(c.red)],
        "blue": [list(e) for e in sorted(c.blue)],
    }


def coloring_from_json(doc: dict) -> EdgeColoring:
    try:
        g = parse_graph6(doc["graph6"])
        red = [tuple(e) for e in doc["red"]]
        blue = [tuple(e) for e in doc["blue"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed coloring document: {exc}") from None
    c = make_coloring(g, blue)
    if frozenset(normalize_edge(u, v) for u, v in red) != c.red:
        raise ValueError("red edge list disagrees with graph minus blue")
    return c


def partition_to_json(p: BlockPartition) -> list[list[int]]:
    return [sorted(b) for b in p.blocks]


def partition_from_json(blocks: list[list[int]], max_block: int | None = None) -> BlockPartition:
    return make_partition(blocks, max_block)
