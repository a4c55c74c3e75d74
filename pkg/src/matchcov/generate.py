"""Exhaustive generation of simple graphs, one per isomorphism class.

Canonical augmentation: level k graphs are built from level k-1 parents by
adding one vertex with every neighborhood (deduplicated up to the parent's
automorphisms), keeping a child only when the added vertex lies in the same
automorphism orbit as the vertex the canonical labeling would delete.  Each
isomorphism class is produced exactly once, with no global seen-set, so the
scan order is deterministic and levels are cheap to cache.

Final-level filters (min degree, connectivity) are applied before the
canonical-form call where possible; intermediate levels are always complete,
since min degree is not monotone under vertex deletion.
"""

from . import _kernel
from .errors import CapacityError
from .graph import Graph, is_connected

MAX_GENERATED_N = 10

# isomorphism class counts for n = 1.., used as self-checks by the tests
KNOWN_CLASS_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


def _children(parent_adj, autos):
    """Candidate neighborhoods of the new vertex, one per automorphism orbit."""
    k = len(parent_adj)
    total = 1 << k
    if not autos:
        return range(total)
    seen = bytearray(total)
    reps = []
    for s in range(total):
        if seen[s]:
            continue
        reps.append(s)
        stack = [s]
        seen[s] = 1
        while stack:
            t = stack.pop()
            for g in autos:
                img = 0
                tt = t
                while tt:
                    v = (tt & -tt).bit_length() - 1
                    tt &= tt - 1
                    img |= 1 << g[v]
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


class CanonicalAugmenter:
    """Level-cached generator of all isomorphism classes up to MAX_GENERATED_N."""

    def __init__(self):
        # level k: list of (adjacency tuple, automorphism generators)
        self._levels = {1: [((0,), ())]}

    def _grow_to(self, n):
        top = max(self._levels)
        for k in range(top + 1, n + 1):
            level = []
            for parent_adj, autos in self._levels[k - 1]:
                for s in _children(parent_adj, autos):
                    child = self._accept(k, parent_adj, s)
                    if child is not None:
                        level.append(child)
            self._levels[k] = level

    @staticmethod
    def _extend(k, parent_adj, s):
        adj = [a | ((s >> i & 1) << (k - 1)) for i, a in enumerate(parent_adj)]
        adj.append(s)
        return tuple(adj)

    @staticmethod
    def _accept(k, parent_adj, s):
        adj = CanonicalAugmenter._extend(k, parent_adj, s)
        _, perm, orbits, gens = _kernel.canon_auto(k, adj)
        # canonical deletion: the vertex at the last canonical position; the
        # child survives only when the freshly added vertex is in its orbit
        if orbits[k - 1] != orbits[perm[k - 1]]:
            return None
        return adj, gens

    def classes(self, n):
        """All isomorphism classes on n vertices, as adjacency tuples."""
        if not 1 <= n <= MAX_GENERATED_N:
            raise CapacityError(
                f"built-in generation supports 1 <= n <= {MAX_GENERATED_N}, got {n}")
        self._grow_to(n)
        return [adj for adj, _ in self._levels[n]]

    def final_level(self, n, min_degree=0, connected=False):
        """Classes on n vertices passing the pushed-down filters.

        The filters prune candidate children before their canonical form is
        computed; parents are still generated unfiltered, which keeps the
        augmentation complete.
        """
        if not 1 <= n <= MAX_GENERATED_N:
            raise CapacityError(
                f"built-in generation supports 1 <= n <= {MAX_GENERATED_N}, got {n}")
        if n == 1:
            return [] if min_degree > 0 else [(0,)]
        self._grow_to(n - 1)
        out = []
        for parent_adj, autos in self._levels[n - 1]:
            if min_degree:
                # every parent vertex short of min_degree must gain the new edge
                forced = 0
                feasible = True
                for i, a in enumerate(parent_adj):
                    deg = a.bit_count()
                    if deg < min_degree - 1:
                        feasible = False
                        break
                    if deg < min_degree:
                        forced |= 1 << i
                if not feasible:
                    continue
            else:
                forced = 0
            for s in _children(parent_adj, autos):
                if min_degree and ((s & forced) != forced or s.bit_count() < min_degree):
                    continue
                adj = self._extend(n, parent_adj, s)
                if connected and not _adj_connected(adj):
                    continue
                child = self._accept(n, parent_adj, s)
                if child is not None:
                    out.append(child[0])
        return out


def _adj_connected(adj):
    n = len(adj)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _adj_to_graph(adj):
    n = len(adj)
    edges = []
    for u in range(n):
        nb = adj[u] & ~((1 << (u + 1)) - 1)
        while nb:
            v = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            edges.append((u, v))
    return Graph(n, tuple(edges))


def generate_all_graphs(n, min_degree=0, connected=False, augmenter=None):
    """Stream one Graph per isomorphism class on n vertices.

    min_degree/connected are pushed down into the final augmentation level.
    """
    aug = augmenter or CanonicalAugmenter()
    if min_degree or connected:
        adjs = aug.final_level(n, min_degree=min_degree, connected=connected)
    else:
        adjs = aug.classes(n)
    for adj in adjs:
        yield _adj_to_graph(adj)
