"""Exact perfect matching enumeration and the derived predicates."""

import random

import pytest

from matchcov.catalog import catalog
from matchcov.errors import CapacityError, PreconditionError
from matchcov.graph import build, bridges
from matchcov.matching import (MAX_EXACT_N, count_perfect_matchings,
                               count_pm_containing, enumerate_perfect_matchings,
                               has_perfect_matching, is_bicritical, is_brick,
                               is_matching_covered, unique_pm_bridge)

import oracles

CATALOG_PM_COUNTS = {
    "K4": 3, "C6BAR": 4, "C6BAR_PLUS": 5, "W6": 5, "W6_PLUS": 6,
    "W6_PLUSPLUS": 7, "R8": 5, "PETERSEN": 6, "K33": 6,
}


def test_catalog_pm_counts_match_dp_oracle():
    for name, want in CATALOG_PM_COUNTS.items():
        g = catalog(name)
        assert count_perfect_matchings(g) == want == oracles.pm_count_dp(g.n, g.edges)


def test_enumeration_matches_dp_on_random_graphs():
    rng = random.Random(101)
    for _ in range(250):
        n = rng.randrange(1, 11)
        edges = oracles.random_simple_graph(rng, n, rng.random())
        # sprinkle parallel edges; they count as distinct matchings
        for _ in range(rng.randrange(3)):
            if edges:
                edges.append(rng.choice(edges))
        g = build(n, edges)
        ms = enumerate_perfect_matchings(g)
        assert ms.complete
        assert len(ms) == oracles.pm_count_dp(n, edges)
        assert has_perfect_matching(g) == (len(ms) > 0)
        full = 0
        for mask in ms.matchings:
            # each mask covers every vertex exactly once
            seen = set()
            for e in range(g.m):
                if mask >> e & 1:
                    u, v = g.edges[e]
                    seen.update((u, v))
            assert len(seen) == n
            full |= mask


def test_parallel_edges_count_separately():
    g = build(2, [(0, 1), (0, 1)])
    assert count_perfect_matchings(g) == 2


def test_enumeration_cap_truncates():
    g = catalog("PETERSEN")
    ms = enumerate_perfect_matchings(g, cap=2)
    assert len(ms) == 2 and not ms.complete
    assert count_perfect_matchings(g, cap=4) == 4


def test_count_pm_containing_matches_enumeration():
    rng = random.Random(103)
    for _ in range(60):
        n = rng.choice((4, 6, 8))
        edges = oracles.random_connected_graph(rng, n, 0.5)
        g = build(n, edges)
        ms = enumerate_perfect_matchings(g)
        for e in range(g.m):
            direct = sum(1 for mask in ms.matchings if mask >> e & 1)
            assert count_pm_containing(g, e) == direct


def test_matching_covered_examples():
    assert is_matching_covered(build(2, [(0, 1)]))
    assert is_matching_covered(catalog("K4"))
    assert is_matching_covered(catalog("K33"))
    # the middle edge of a 4-path lies in no perfect matching
    assert not is_matching_covered(build(4, [(0, 1), (1, 2), (2, 3)]))
    assert not is_matching_covered(build(2, []))
    # disconnected with a perfect matching is still not matching covered
    assert not is_matching_covered(build(4, [(0, 1), (2, 3)]))


def test_matching_covered_matches_oracle():
    rng = random.Random(107)
    for _ in range(150):
        n = rng.choice((2, 4, 6, 8))
        edges = oracles.random_simple_graph(rng, n, rng.random())
        g = build(n, edges)
        assert is_matching_covered(g) == oracles.nx_matching_covered(oracles.to_nx(g))


def test_bicritical_and_brick_named_graphs():
    for name in ("K4", "C6BAR", "C6BAR_PLUS", "PETERSEN", "R8",
                 "W6", "W6_PLUS", "W6_PLUSPLUS", "F1", "F2", "F3", "F4"):
        assert is_brick(catalog(name)), name
    k33 = catalog("K33")
    assert not is_bicritical(k33) and not is_brick(k33)
    c6 = build(6, [(i, (i + 1) % 6) for i in range(6)])
    assert not is_brick(c6)


def test_unique_pm_bridge_examples():
    # path on 4 vertices: unique perfect matching {0-1, 2-3}, both bridges
    g = build(4, [(0, 1), (1, 2), (2, 3)])
    e = unique_pm_bridge(g)
    assert g.edges[e] in ((0, 1), (2, 3))
    assert e in bridges(g)
    with pytest.raises(PreconditionError):
        unique_pm_bridge(catalog("K4"))  # three perfect matchings
    with pytest.raises(PreconditionError):
        unique_pm_bridge(build(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))  # two
    with pytest.raises(PreconditionError):
        unique_pm_bridge(build(3, [(0, 1), (1, 2)]))  # no perfect matching


def test_capacity_bound():
    n = MAX_EXACT_N + 2
    g = build(n, [(i, i + 1) for i in range(0, n, 2)])
    with pytest.raises(CapacityError):
        count_perfect_matchings(g)
