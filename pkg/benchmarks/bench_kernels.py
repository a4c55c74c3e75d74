"""Compare the compiled kernel against its pure-Python twin.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Times the three hot paths on identical workloads: canonical labeling over a
random graph batch, perfect matching enumeration over dense even-order
graphs, and the tight-cut subset scan.  Both backends are imported directly,
bypassing the MATCHCOV_KERNEL selection.
"""

import argparse
import random
import time
from itertools import combinations

from matchcov._kernel import pykernel

try:
    from matchcov._kernel import ckernel
except ImportError:
    ckernel = None


def _random_graphs(seed, count, n_lo, n_hi):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randrange(n_lo, n_hi + 1)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < rng.uniform(0.2, 0.8)]
        out.append((n, edges))
    return out


def _adj(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def bench_canon(mod, graphs):
    for n, edges in graphs:
        mod.canon_auto(n, _adj(n, edges))


def bench_pms(mod, graphs):
    for n, edges in graphs:
        eu = [u for u, _ in edges]
        ev = [v for _, v in edges]
        mod.count_pms(n, eu, ev, 0)


def bench_claw(mod, graphs):
    for n, edges in graphs:
        mod.is_claw_free(n, _adj(n, edges))


def bench_tight(mod, graphs):
    for n, edges in graphs:
        eu = [u for u, _ in edges]
        ev = [v for _, v in edges]
        pms = pykernel.enumerate_pms(n, eu, ev, 0)
        if not pms:
            continue
        subsets = [sum(1 << v for v in comb)
                   for size in range(3, n // 2 + 1, 2)
                   for comb in combinations(range(n), size)]
        mod.first_tight_cut(eu, ev, pms, subsets)


def run(label, fn, mod, graphs, repeat):
    best = min(_timed(fn, mod, graphs) for _ in range(repeat))
    print(f"  {label:<22} {best * 1000:9.1f} ms")
    return best


def _timed(fn, mod, graphs):
    t0 = time.perf_counter()
    fn(mod, graphs)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        ("canonical labeling", bench_canon, _random_graphs(1, 400, 8, 14)),
        ("matching counts", bench_pms, _random_graphs(2, 150, 8, 12)),
        ("claw detection", bench_claw, _random_graphs(3, 2000, 8, 14)),
        ("tight-cut scan", bench_tight, _random_graphs(4, 60, 6, 10)),
    ]

    results = {}
    for name, mod in (("py", pykernel), ("c", ckernel)):
        if mod is None:
            print("compiled kernel unavailable; skipping the c backend")
            continue
        print(f"backend {name}:")
        for label, fn, graphs in workloads:
            results[(name, label)] = run(label, fn, mod, graphs, args.repeat)

    if ckernel is not None:
        print("speedup (py / c):")
        for label, _, _ in workloads:
            ratio = results[("py", label)] / results[("c", label)]
            print(f"  {label:<22} {ratio:6.1f}x")


if __name__ == "__main__":
    main()
