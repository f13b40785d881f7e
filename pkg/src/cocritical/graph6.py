"""graph6 and adjacency-list text serialization.

graph6 is the compact ASCII format for undirected graphs: a length prefix
followed by the upper triangle of the adjacency matrix read column by column
(x01, x02, x12, x03, ...), packed big-endian into 6-bit groups, each group
printed as its value plus 63.  This module implements the header-free variant
and rejects malformed input with the byte offset of the problem.

The adjacency-list text format is one integer line `n` followed by one `u v`
line per edge.
"""

from __future__ import annotations

from .graphs import Graph, MAX_ORDER, make_graph


def emit_graph6(g: Graph) -> str:
    chars = _emit_order(g.n)
    bits: list[int] = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(g.adj[row] >> col & 1)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = group << 1 | b
        chars.append(group + 63)
    return "".join(chr(c) for c in chars)


def _emit_order(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    # three 6-bit groups after a 126 marker cover orders up to 258047;
    # MAX_ORDER is far below that, so no longer form is ever needed
    return [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) for c in s]
    for off, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ValueError(f"byte {off}: character {c!r} outside graph6 range")
    n, body_start = _parse_order(data)
    if n > MAX_ORDER:
        raise ValueError(f"graph order {n} exceeds cap {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    expect = body_start + (nbits + 5) // 6
    if len(data) != expect:
        raise ValueError(f"byte {len(s)}: expected {expect} bytes for order {n}, got {len(data)}")
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            group = data[body_start + idx // 6] - 63
            if group >> (5 - idx % 6) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    # padding bits beyond the triangle must be zero
    for pad in range(nbits, (nbits + 5) // 6 * 6):
        group = data[body_start + pad // 6] - 63
        if group >> (5 - pad % 6) & 1:
            raise ValueError(f"byte {body_start + pad // 6}: nonzero padding bit")
    return Graph(n, tuple(rows))


def _parse_order(data: list[int]) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4:
        raise ValueError("byte 0: truncated long-form order prefix")
    if data[1] == 126:
        raise ValueError("byte 1: 36-bit order form exceeds supported range")
    n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
    return n, 4


def parse_graph6_lines(text: str) -> list[Graph]:
    """Parse one graph per nonblank line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def emit_adjacency_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_adjacency_text(text: str) -> Graph:
    tokens = text.split()
    if not tokens:
        raise ValueError("empty adjacency text")
    try:
        n = int(tokens[0])
    except ValueError:
        raise ValueError(f"order line {tokens[0]!r} is not an integer") from None
    rest = tokens[1:]
    if len(rest) % 2:
        raise ValueError("dangling endpoint at end of adjacency text")
    edges = []
    for i in range(0, len(rest), 2):
        try:
            edges.append((int(rest[i]), int(rest[i + 1])))
        except ValueError:
            raise ValueError(f"non-integer endpoint {rest[i]!r} {rest[i + 1]!r}") from None
    return make_graph(n, edges)
