"""The compiled kernel and its pure-Python twin must agree byte for byte."""

import random

import pytest

from matchcov._kernel import pykernel

try:
    from matchcov._kernel import ckernel
except ImportError:
    ckernel = None

needs_ckernel = pytest.mark.skipif(ckernel is None, reason="extension not built")

import oracles


def _adj(n, edges):
    adj = [0] * n
    for u, v in edges:
        if u != v:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def _cases(seed, count, max_n=12):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randrange(1, max_n + 1)
        yield n, oracles.random_simple_graph(rng, n, rng.random())


@needs_ckernel
def test_canon_parity():
    for n, edges in _cases(401, 300):
        adj = _adj(n, edges)
        pc, pp, po, _ = pykernel.canon_auto(n, adj)
        cc, cp, co, _ = ckernel.canon_auto(n, adj)
        assert pc == cc
        assert list(pp) == list(cp)
        assert list(po) == list(co)


@needs_ckernel
def test_canon_parity_symmetric_graphs():
    fixtures = [
        (9, [(u, v) for u in range(9) for v in range(u + 1, 9)]),   # K9
        (9, []),                                                    # empty
        (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),      # 2 x K3
        (10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7),
              (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]),
    ]
    for n, edges in fixtures:
        adj = _adj(n, edges)
        assert pykernel.canon_auto(n, adj)[0] == ckernel.canon_auto(n, adj)[0]


@needs_ckernel
def test_matching_parity():
    for n, edges in _cases(409, 200, max_n=10):
        eu = [u for u, _ in edges]
        ev = [v for _, v in edges]
        assert pykernel.enumerate_pms(n, eu, ev, 0) == ckernel.enumerate_pms(n, eu, ev, 0)
        assert pykernel.count_pms(n, eu, ev, 0) == ckernel.count_pms(n, eu, ev, 0)
        assert pykernel.count_pms(n, eu, ev, 2) == ckernel.count_pms(n, eu, ev, 2)


@needs_ckernel
def test_claw_parity():
    for n, edges in _cases(419, 300):
        adj = _adj(n, edges)
        assert pykernel.is_claw_free(n, adj) == ckernel.is_claw_free(n, adj)


@needs_ckernel
def test_tight_cut_scan_parity():
    rng = random.Random(421)
    from itertools import combinations
    for _ in range(100):
        n = rng.choice((4, 6, 8))
        edges = oracles.random_simple_graph(rng, n, rng.uniform(0.3, 0.8))
        eu = [u for u, _ in edges]
        ev = [v for _, v in edges]
        pms = pykernel.enumerate_pms(n, eu, ev, 0)
        if not pms:
            continue
        subsets = [sum(1 << v for v in comb)
                   for size in range(3, n // 2 + 1, 2)
                   for comb in combinations(range(n), size)]
        assert (pykernel.first_tight_cut(eu, ev, pms, subsets)
                == ckernel.first_tight_cut(eu, ev, pms, subsets))


def test_backend_names():
    assert pykernel.BACKEND_NAME == "py"
    if ckernel is not None:
        assert ckernel.BACKEND_NAME == "c"
