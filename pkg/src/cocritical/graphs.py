"""Small-graph core: immutable bitset graphs, cliques, stable sets, components.

Every graph is stored as a tuple of adjacency bitmasks, one Python int per
vertex, bit u of ``adj[v]`` set iff uv is an edge.  Vertex ids are 0..n-1 and
every operation that returns vertices, sets, or lists of sets does so in
ascending id order, so repeated runs produce identical output.  Graph order is
capped at MAX_ORDER; constructors reject anything larger.

Neighborhood intersection (``adj[u] & adj[v]``) is the primitive everything
else is built from: clique search branches on the lowest candidate bit and
recurses into the common neighborhood, which keeps enumeration order
deterministic and makes membership tests cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 128


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bitmask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on vertices 0..n-1 with bitmask rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} refers to vertices >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v},{u}")

    # --- basic queries ---------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(row):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        """All non-adjacent pairs (u, v), u < v, lexicographic."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    out.append((u, v))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("degree of empty graph undefined")
        return min(row.bit_count() for row in self.adj)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("degree of empty graph undefined")
        return max(row.bit_count() for row in self.adj)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")


# --- constructors ---------------------------------------------------------


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; rejects loops and out-of-range ids."""
    if not 0 <= n <= MAX_ORDER:
        raise ValueError(f"graph order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return make_graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(v, v + 1) for v in range(n - 1)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Copy of g with edge uv added; uv must currently be a non-edge."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("cannot add a loop")
    if g.adj[u] >> v & 1:
        raise ValueError(f"edge ({u},{v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


# --- operations -----------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """a followed by b, b's vertex ids shifted up by a.n."""
    if a.n + b.n > MAX_ORDER:
        raise ValueError("union exceeds maximum order")
    rows = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(rows))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    g = disjoint_union(a, b)
    a_mask = (1 << a.n) - 1
    b_mask = g.vertex_mask ^ a_mask
    rows = [row | (b_mask if v < a.n else a_mask) for v, row in enumerate(g.adj)]
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled 0..m-1 in ascending order."""
    kept = sorted(set(vertices))
    for v in kept:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(kept)}
    rows = [0] * len(kept)
    for v in kept:
        for u in iter_bits(g.adj[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return Graph(len(kept), tuple(rows))


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Apply a permutation: vertex v of g becomes perm[v] of the result."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            rows[p[v]] |= 1 << p[u]
    return Graph(g.n, tuple(rows))


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= g.adj[u]
            frontier = grown & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(iter_bits(comp)))
    return out


def is_connected_mask(g: Graph, mask: int) -> bool:
    """Does the subgraph induced on the vertices of mask form one component?"""
    if mask == 0:
        return False
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        grown = 0
        for u in iter_bits(frontier):
            grown |= g.adj[u]
        frontier = grown & mask & ~comp
        comp |= frontier
    return comp == mask


# --- cliques ---------------------------------------------------------------


def clique_in_mask(g: Graph, mask: int, size: int) -> bool:
    """True iff the subgraph induced on mask contains a clique on `size` vertices."""
    return _clique_rec(g.adj, mask, size)


def _clique_rec(adj: tuple[int, ...], mask: int, size: int) -> bool:
    if size <= 0:
        return True
    if size == 1:
        return mask != 0
    while mask:
        if mask.bit_count() < size:
            return False
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        # branch on v as the lowest clique vertex; candidates stay above v
        if _clique_rec(adj, adj[v] & mask, size - 1):
            return True
    return False


def has_clique(g: Graph, size: int) -> bool:
    if size < 0:
        raise ValueError("clique size must be nonnegative")
    return _clique_rec(g.adj, g.vertex_mask, size)


def clique_through_edge(g: Graph, u: int, v: int, size: int) -> bool:
    """Is edge uv contained in some clique on `size` vertices?"""
    if size < 2:
        raise ValueError("clique through an edge needs size >= 2")
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    return _clique_rec(g.adj, g.adj[u] & g.adj[v], size - 2)


def clique_number(g: Graph) -> int:
    """Order of a largest clique."""
    best = 0
    adj = g.adj

    def grow(count: int, cand: int) -> None:
        nonlocal best
        if count > best:
            best = count
        while cand:
            if count + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(count + 1, adj[v] & cand)

    grow(0, g.vertex_mask)
    return best


def enumerate_cliques(g: Graph, size: int) -> list[frozenset[int]]:
    """Every clique on exactly `size` vertices, in lexicographic vertex order."""
    return enumerate_cliques_in_mask(g, g.vertex_mask, size)


def enumerate_cliques_in_mask(g: Graph, mask: int, size: int) -> list[frozenset[int]]:
    """Every clique on exactly `size` vertices inside the induced mask."""
    if size < 1:
        raise ValueError("clique size must be at least 1")
    adj = g.adj
    out: list[frozenset[int]] = []
    chosen: list[int] = []

    def extend(cand: int, need: int) -> None:
        if need == 0:
            out.append(frozenset(chosen))
            return
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            extend(adj[v] & cand, need - 1)
            chosen.pop()

    extend(mask & g.vertex_mask, size)
    return out


# --- stable sets -----------------------------------------------------------

STABLE_SET_ORDER_CAP = 24


def max_stable_sets(g: Graph, cap: int = STABLE_SET_ORDER_CAP) -> tuple[int, list[frozenset[int]]]:
    """Independence number and the full family of maximum stable sets.

    Works through the complement: stable sets of g are cliques of its
    complement, so the family is every maximum clique over there.  Exhaustive;
    guarded to small orders.
    """
    if g.n > cap:
        raise ValueError(f"stable-set enumeration guarded to n <= {cap}")
    if g.n == 0:
        raise ValueError("graph has no vertices")
    co = complement(g)
    alpha = clique_number(co)
    return alpha, enumerate_cliques(co, alpha)
