"""graph6 encoder/decoder, cross-checked against an independent bit-level
reference decoder written here from the format description."""

import random

import pytest

from cocritical.graphs import complete_graph, cycle_graph, empty_graph, make_graph
from cocritical.graph6 import (
    emit_adjacency_text,
    emit_graph6,
    parse_adjacency_text,
    parse_graph6,
    parse_graph6_lines,
)


def reference_decode(line):
    """Separate route: expand every byte to a 6-bit string, then read the
    upper triangle column by column."""
    data = [ord(ch) - 63 for ch in line]
    assert all(0 <= b <= 63 for b in data)
    if data[0] <= 62:
        n, body = data[0], data[1:]
    else:
        assert data[0] == 63 and len(data) >= 4
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    bits = "".join(format(b, "06b") for b in body)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx] == "1":
                edges.append((u, v))
            idx += 1
    assert set(bits[idx:]) <= {"0"}  # padding must be zero
    return n, edges


def rand_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def test_known_encodings():
    assert emit_graph6(complete_graph(3)) == "Bw"
    assert emit_graph6(empty_graph(0)) == "?"
    assert emit_graph6(empty_graph(1)) == "@"
    assert emit_graph6(complete_graph(2)) == "A_"
    # 5-cycle: edges 01,04,12,23,34 -> columns give bits 10 010 10011
    n, edges = reference_decode(emit_graph6(cycle_graph(5)))
    assert n == 5 and sorted(edges) == cycle_graph(5).edges()


def test_roundtrip_small_exhaustive():
    for n in range(0, 5):
        for mask in range(1 << (n * (n - 1) // 2)):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = make_graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            assert parse_graph6(emit_graph6(g)) == g


def test_roundtrip_against_reference_decoder():
    rng = random.Random(60)
    for _ in range(200):
        n = rng.randrange(0, 20)
        g = rand_graph(rng, n, rng.random())
        line = emit_graph6(g)
        rn, redges = reference_decode(line)
        assert rn == g.n and sorted(redges) == g.edges()
        assert parse_graph6(line) == g


def test_long_form_order_prefix():
    # orders above 62 switch to the 126-prefixed 3-byte form
    g = empty_graph(63)
    line = emit_graph6(g)
    assert line[0] == "~"
    assert parse_graph6(line) == g
    rn, redges = reference_decode(line)
    assert rn == 63 and redges == []
    g = make_graph(100, [(0, 99)])
    assert parse_graph6(emit_graph6(g)) == g


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("B\x1f")  # byte below the printable range
    with pytest.raises(ValueError):
        parse_graph6("B")  # truncated edge bits
    with pytest.raises(ValueError):
        parse_graph6("Bwx")  # trailing bytes
    with pytest.raises(ValueError):
        parse_graph6("B" + chr(63 + 0b111111))  # nonzero padding bits


def test_parse_lines():
    lines = "\n".join(
        [emit_graph6(complete_graph(3)), "", emit_graph6(cycle_graph(4)), ""]
    )
    graphs = parse_graph6_lines(lines)
    assert graphs == [complete_graph(3), cycle_graph(4)]


def test_adjacency_text_roundtrip():
    rng = random.Random(61)
    for _ in range(30):
        g = rand_graph(rng, rng.randrange(0, 10))
        assert parse_adjacency_text(emit_adjacency_text(g)) == g
