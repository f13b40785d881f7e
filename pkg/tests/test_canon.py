"""Canonical labeling and isomorphism-free generation."""

import random

import pytest

from cocritical.canon import (
    are_isomorphic,
    canonical_graph,
    canonical_key,
    nonisomorphic_graphs,
)
from cocritical.graphs import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    make_graph,
    path_graph,
    relabel,
)

# class counts for unlabeled graphs on 1..7 vertices
CLASS_COUNTS = [1, 2, 4, 11, 34, 156, 1044]


def rand_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def rand_perm(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def test_canonical_form_is_relabel_invariant():
    rng = random.Random(321)
    for _ in range(150):
        n = rng.randrange(1, 9)
        g = rand_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        h = relabel(g, rand_perm(rng, n))
        assert canonical_key(g) == canonical_key(h)
        assert canonical_graph(g) == canonical_graph(h)


def test_canonical_form_separates_nonisomorphic():
    # same degree sequence, different graphs: C_6 vs two triangles
    a = cycle_graph(6)
    b = disjoint_union(complete_graph(3), complete_graph(3))
    assert a.degree_sequence() == b.degree_sequence()
    assert canonical_key(a) != canonical_key(b)
    assert not are_isomorphic(a, b)


def test_are_isomorphic():
    rng = random.Random(322)
    g = rand_graph(rng, 7, 0.5)
    assert are_isomorphic(g, relabel(g, rand_perm(rng, 7)))
    assert not are_isomorphic(path_graph(4), cycle_graph(4))
    assert not are_isomorphic(path_graph(4), path_graph(5))


def test_class_counts():
    for n, want in enumerate(CLASS_COUNTS, start=1):
        got = nonisomorphic_graphs(n)
        assert len(got) == want
        # every listed graph is its own canonical form, no duplicates
        assert len({g.adj for g in got}) == want
        assert all(canonical_graph(g) == g for g in got)


def test_generation_covers_all_graphs():
    # on 4 vertices, hash every labeled graph into the catalog
    catalog = {canonical_key(g) for g in nonisomorphic_graphs(4)}
    pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    seen = set()
    for mask in range(1 << 6):
        g = make_graph(4, [e for i, e in enumerate(pairs) if mask >> i & 1])
        key = canonical_key(g)
        assert key in catalog
        seen.add(key)
    assert seen == catalog


def test_generation_sorted_by_edges():
    counts = [g.edge_count() for g in nonisomorphic_graphs(5)]
    assert counts == sorted(counts)


def test_order_guard():
    with pytest.raises(ValueError):
        nonisomorphic_graphs(9)
    with pytest.raises(ValueError):
        nonisomorphic_graphs(0)
