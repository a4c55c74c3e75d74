"""Exhaustive generation by canonical augmentation."""

import pytest

from matchcov.errors import CapacityError
from matchcov.generate import CanonicalAugmenter, generate_all_graphs
from matchcov.graph import canonical_form, is_connected

import oracles

# isomorphism class counts on n unlabeled vertices
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def test_counts_match_brute_force_classification():
    for n in range(1, 6):
        got = sum(1 for _ in generate_all_graphs(n))
        assert got == oracles.labeled_class_count(n) == KNOWN_COUNTS[n]


def test_counts_match_burnside_oracle():
    for n in range(1, 9):
        assert oracles.burnside_class_count(n) == KNOWN_COUNTS[n]
    for n in (6, 7):
        assert sum(1 for _ in generate_all_graphs(n)) == KNOWN_COUNTS[n]


def test_no_duplicate_classes_up_to_6():
    for n in range(1, 7):
        certs = [canonical_form(g) for g in generate_all_graphs(n)]
        assert len(certs) == len(set(certs))


def test_min_degree_connected_filter():
    got = list(generate_all_graphs(5, min_degree=3, connected=True))
    assert len(got) == 3
    want = oracles.labeled_class_count(
        5, keep=lambda edges: _keeps(5, edges))
    assert want == 3
    for g in got:
        assert g.min_degree() >= 3 and is_connected(g)


def _keeps(n, edges):
    deg = [0] * n
    adj = [set() for _ in range(n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].add(v)
        adj[v].add(u)
    if min(deg) < 3:
        return False
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def test_deterministic_order():
    a = [g.edges for g in generate_all_graphs(6)]
    b = [g.edges for g in generate_all_graphs(6)]
    assert a == b


def test_shared_augmenter_reuses_levels():
    aug = CanonicalAugmenter()
    first = sum(1 for _ in generate_all_graphs(6, augmenter=aug))
    second = sum(1 for _ in generate_all_graphs(6, augmenter=aug))
    assert first == second == KNOWN_COUNTS[6]


def test_capacity_bounds():
    with pytest.raises(CapacityError):
        list(generate_all_graphs(11))
    with pytest.raises(CapacityError):
        list(generate_all_graphs(0))
