import random
from itertools import combinations

import pytest

from rtdensity.graphs import (
    SimpleGraph,
    clique_number,
    greedy_clique_cover,
    greedy_independent_set,
    has_clique,
    independence_number,
    max_clique,
    maximal_cliques,
)


def brute_clique_number(g: SimpleGraph) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for sub in combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return k
    return best


def test_clique_number_examples():
    assert clique_number(SimpleGraph.complete(5)) == 5
    c5 = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert clique_number(c5) == 2
    t24 = SimpleGraph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert clique_number(t24) == 2
    assert clique_number(SimpleGraph(0, ())) == 0
    assert clique_number(SimpleGraph(3, (0, 0, 0))) == 1


def test_max_clique_against_brute_force():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 9)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < rng.choice([0.2, 0.5, 0.8])
        ]
        g = SimpleGraph.from_edges(n, edges)
        size, mask = max_clique(g.adj)
        assert size == brute_clique_number(g)
        members = [v for v in range(n) if mask >> v & 1]
        assert len(members) == size
        assert all(g.has_edge(u, v) for u, v in combinations(members, 2))


def test_has_clique_cutoff():
    g = SimpleGraph.complete(6)
    assert has_clique(g.adj, 6)
    assert not has_clique(g.adj, 7)
    assert has_clique(g.adj, 0)


def test_maximal_cliques_cover_all_edges():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 8)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = SimpleGraph.from_edges(n, edges)
        cliques = maximal_cliques(g.adj)
        # every vertex appears, every clique is a clique, none contains another
        union = 0
        for m in cliques:
            union |= m
            members = [v for v in range(n) if m >> v & 1]
            assert all(g.has_edge(u, v) for u, v in combinations(members, 2))
        assert union == (1 << n) - 1
        for a in cliques:
            for b in cliques:
                assert a == b or (a & b) != a


def test_independence_bounds():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(2, 9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
        ]
        g = SimpleGraph.from_edges(n, edges)
        alpha = independence_number(g)
        assert len(greedy_independent_set(g)) <= alpha <= greedy_clique_cover(g)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 3)])
