"""Bitset graph core: constructors, queries, and clique routines against
itertools brute force on seeded random graphs."""

import random
from itertools import combinations

import pytest

from cocritical.graphs import (
    Graph,
    add_edge,
    bitmask,
    clique_number,
    clique_through_edge,
    complement,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_cliques,
    enumerate_cliques_in_mask,
    has_clique,
    induced_subgraph,
    is_connected_mask,
    iter_bits,
    join,
    make_graph,
    max_stable_sets,
    path_graph,
    relabel,
)


def rand_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def test_make_graph_validates():
    with pytest.raises(ValueError):
        make_graph(3, [(0, 0)])  # loop
    with pytest.raises(ValueError):
        make_graph(3, [(0, 3)])  # out of range
    with pytest.raises(ValueError):
        make_graph(-1, [])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b10))  # asymmetric adjacency


def test_basic_queries():
    g = cycle_graph(5)
    assert g.n == 5
    assert g.edge_count() == 5
    assert g.degree_sequence() == (2, 2, 2, 2, 2)
    assert g.has_edge(0, 1) and g.has_edge(4, 0)
    assert not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert g.non_edges() == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert sorted(g.neighbors(0)) == [1, 4]


def test_known_graphs():
    assert complete_graph(5).edge_count() == 10
    assert empty_graph(4).edge_count() == 0
    assert path_graph(4).edge_count() == 3
    assert complete_graph(1).edge_count() == 0
    assert cycle_graph(3) == complete_graph(3)


def test_add_edge():
    g = path_graph(3)
    g2 = add_edge(g, 0, 2)
    assert g2 == cycle_graph(3)
    with pytest.raises(ValueError):
        add_edge(g, 0, 1)  # already present


def test_complement_involution():
    rng = random.Random(11)
    for _ in range(30):
        g = rand_graph(rng, rng.randrange(1, 9))
        assert complement(complement(g)) == g
        assert g.edge_count() + complement(g).edge_count() == g.n * (g.n - 1) // 2


def test_disjoint_union_and_join():
    a, b = complete_graph(3), complete_graph(2)
    u = disjoint_union(a, b)
    assert u.n == 5 and u.edge_count() == 4
    assert sorted(map(len, components(u))) == [2, 3]
    j = join(a, b)
    assert j == complete_graph(5)


def test_components_and_connectivity():
    g = disjoint_union(cycle_graph(4), path_graph(3))
    comps = components(g)
    assert [sorted(c) for c in comps] == [[0, 1, 2, 3], [4, 5, 6]]
    assert is_connected_mask(g, bitmask([0, 1, 2, 3]))
    assert not is_connected_mask(g, bitmask([0, 4]))
    assert is_connected_mask(g, bitmask([5]))


def test_induced_subgraph_and_relabel():
    g = cycle_graph(5)
    h = induced_subgraph(g, [0, 1, 2])
    assert h == path_graph(3)
    p = relabel(g, (4, 3, 2, 1, 0))
    assert p.edge_count() == 5 and p.degree_sequence() == g.degree_sequence()


def test_iter_bits_bitmask_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        s = sorted(rng.sample(range(60), rng.randrange(0, 12)))
        assert sorted(iter_bits(bitmask(s))) == s


def brute_cliques(g, size):
    return [
        frozenset(c)
        for c in combinations(range(g.n), size)
        if all(g.has_edge(u, v) for u, v in combinations(c, 2))
    ]


def test_clique_routines_against_brute_force():
    rng = random.Random(991)
    for _ in range(60):
        n = rng.randrange(1, 9)
        g = rand_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
        omega = max((s for s in range(1, n + 1) if brute_cliques(g, s)), default=0)
        assert clique_number(g) == omega
        for size in range(1, n + 2):
            want = brute_cliques(g, size)
            assert has_clique(g, size) == bool(want)
            assert sorted(enumerate_cliques(g, size)) == sorted(want)
        for u, v in g.edges():
            for size in range(2, n + 1):
                expect = any({u, v} <= c for c in brute_cliques(g, size))
                assert clique_through_edge(g, u, v, size) == expect


def test_enumerate_cliques_in_mask():
    g = complete_graph(5)
    inside = enumerate_cliques_in_mask(g, bitmask([0, 2, 4]), 2)
    assert sorted(inside) == sorted(
        [frozenset({0, 2}), frozenset({0, 4}), frozenset({2, 4})]
    )


def brute_max_stable(g):
    best = 0
    sets = []
    for r in range(g.n, 0, -1):
        for c in combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in combinations(c, 2)):
                sets.append(frozenset(c))
        if sets:
            best = r
            break
    return best, sets


def test_max_stable_sets_against_brute_force():
    rng = random.Random(77)
    for _ in range(40):
        n = rng.randrange(1, 9)
        g = rand_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        alpha, family = max_stable_sets(g)
        b_alpha, b_family = brute_max_stable(g)
        assert alpha == b_alpha
        assert sorted(family) == sorted(b_family)
