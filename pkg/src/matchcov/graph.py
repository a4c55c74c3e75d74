"""Labeled multigraph type, graph6 codec, and structural predicates.

Vertices are 0..n-1.  Parallel edges are allowed (contractions create them),
loops are not.  The edge list order is a stable identity: edge index i always
refers to the same endpoint pair.  All predicates that speak about adjacency
(bipartiteness, claw-freeness, connectivity, isomorphism) act on the simple
view; matching operations elsewhere treat parallel edges as distinct.
"""

from dataclasses import dataclass
from functools import cached_property

from . import _kernel
from .errors import CapacityError, Graph6Error, GraphBuildError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple  # tuple of (u, v) with u < v; parallel pairs may repeat

    @cached_property
    def adj(self):
        """Simple adjacency as per-vertex neighbor bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_arrays(self):
        eu = tuple(e[0] for e in self.edges)
        ev = tuple(e[1] for e in self.edges)
        return eu, ev

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        """Multigraph degree of v."""
        return sum(1 for u, w in self.edges if u == v or w == v)

    def min_degree(self):
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return min(deg) if deg else 0

    def is_simple(self):
        return len(set(self.edges)) == len(self.edges)

    def edge_index(self, u, v):
        """First edge index with endpoints {u, v}; raises if absent."""
        pair = (u, v) if u < v else (v, u)
        try:
            return self.edges.index(pair)
        except ValueError:
            raise GraphBuildError(f"no edge {pair} in graph") from None


def build(n, pairs):
    """Construct a Graph, validating endpoints and rejecting loops."""
    if n < 0:
        raise GraphBuildError(f"vertex count must be nonnegative, got {n}")
    norm = []
    for pair in pairs:
        u, v = pair
        if u == v:
            raise GraphBuildError(f"loop edge {tuple(pair)} is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphBuildError(f"edge {tuple(pair)} has an endpoint outside 0..{n - 1}")
        norm.append((u, v) if u < v else (v, u))
    return Graph(n, tuple(norm))


# ---------------------------------------------------------------------------
# graph6 (short format, n <= 62)
# ---------------------------------------------------------------------------

def parse_graph6(text):
    """Decode one graph6 line into a simple Graph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 string")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid graph6 byte {b}", offset=off)
    vals = [b - 63 for b in data]
    if vals[0] <= 62:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] <= 62:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        raise Graph6Error("unsupported graph6 size header", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}",
            offset=len(data),
        )
    bits = 0
    for v in body:
        bits = (bits << 6) | v
    bits >>= (6 * need - nbits) if need else 0
    edges = []
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if bits >> k & 1:
                edges.append((i, j))
    return Graph(n, tuple(edges))


def to_graph6(g):
    """Encode a simple graph with n <= 62 as a graph6 line."""
    if not g.is_simple():
        raise Graph6Error("multigraph not representable in graph6")
    if g.n > 62:
        raise CapacityError(f"graph6 short format supports n <= 62, got {g.n}")
    nbits = g.n * (g.n - 1) // 2
    bits = 0
    adj = g.adj
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | (adj[i] >> j & 1)
    need = (nbits + 5) // 6
    bits <<= 6 * need - nbits
    out = [g.n + 63]
    for k in range(need - 1, -1, -1):
        out.append(((bits >> (6 * k)) & 63) + 63)
    return bytes(out).decode("ascii")


def canonical_graph6(g):
    """graph6 of the canonically relabeled simple view (census cache key)."""
    gs = underlying_simple(g)
    _, perm, _ = _kernel.canon_full(gs.n, gs.adj)
    pos = [0] * gs.n
    for i, v in enumerate(perm):
        pos[v] = i
    return to_graph6(build(gs.n, [(pos[u], pos[v]) for u, v in gs.edges]))


# ---------------------------------------------------------------------------
# derived graphs
# ---------------------------------------------------------------------------

def underlying_simple(g):
    """Collapse parallel edges; keeps first occurrence order."""
    seen = set()
    edges = []
    for e in g.edges:
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Graph(g.n, tuple(edges))


def contract(g, x):
    """Shrink vertex set x to a single new vertex (the highest index).

    Edges inside x become loops and are dropped; boundary edges keep their
    multiplicity.  Returns (graph, mapping) where mapping[old] = new id.
    """
    xs = set(x)
    if not xs or len(xs) >= g.n:
        raise GraphBuildError(f"contraction set must be nonempty and proper, got {sorted(xs)}")
    if any(v < 0 or v >= g.n for v in xs):
        raise GraphBuildError("contraction set has a vertex outside the graph")
    new_n = g.n - len(xs) + 1
    c = new_n - 1
    mapping = []
    nxt = 0
    for v in range(g.n):
        if v in xs:
            mapping.append(c)
        else:
            mapping.append(nxt)
            nxt += 1
    edges = []
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        if a == b:
            continue  # internal edge of x becomes a loop
        edges.append((a, b) if a < b else (b, a))
    return Graph(new_n, tuple(edges)), tuple(mapping)


def delete_edge(g, e):
    if not 0 <= e < g.m:
        raise GraphBuildError(f"edge index {e} out of range")
    return Graph(g.n, g.edges[:e] + g.edges[e + 1:])


def delete_vertices(g, vs):
    vset = set(vs)
    mapping = []
    nxt = 0
    for v in range(g.n):
        if v in vset:
            mapping.append(None)
        else:
            mapping.append(nxt)
            nxt += 1
    edges = []
    for u, v in g.edges:
        if u in vset or v in vset:
            continue
        a, b = mapping[u], mapping[v]
        edges.append((a, b) if a < b else (b, a))
    return Graph(g.n - len(vset), tuple(edges))


def add_edge(g, u, v):
    return build(g.n, list(g.edges) + [(u, v)])


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def is_connected(g):
    if g.n == 0:
        return True
    adj = g.adj
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
    return seen == (1 << g.n) - 1


def is_bipartite(g):
    color = [None] * g.n
    adj = g.adj
    for s in range(g.n):
        if color[s] is not None:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            nb = adj[v]
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if color[w] is None:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def bridges(g):
    """Edge indices that are bridges of the multigraph.

    A parallel pair is never a bridge; otherwise an edge is a bridge iff it is
    a cut edge of the simple view (standard DFS lowpoint computation).
    """
    mult = {}
    for u, v in g.edges:
        mult[(u, v)] = mult.get((u, v), 0) + 1
    simple_bridges = set()
    disc = [0] * g.n
    low = [0] * g.n
    timer = [1]
    adj_lists = [[] for _ in range(g.n)]
    for u, v in set(g.edges):
        adj_lists[u].append(v)
        adj_lists[v].append(u)

    def dfs(v, parent):
        disc[v] = low[v] = timer[0]
        timer[0] += 1
        for w in adj_lists[v]:
            if w == parent:
                continue
            if disc[w]:
                low[v] = min(low[v], disc[w])
            else:
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] > disc[v]:
                    simple_bridges.add((v, w) if v < w else (w, v))

    for s in range(g.n):
        if not disc[s]:
            dfs(s, -1)
    out = set()
    for i, pair in enumerate(g.edges):
        if pair in simple_bridges and mult[pair] == 1:
            out.add(i)
    return out


def is_three_connected(g):
    """True iff n >= 4 and no vertex set of size <= 2 disconnects the simple view."""
    if g.n < 4:
        return False
    if not is_connected(g):
        return False
    for a in range(g.n):
        if not _connected_without(g, {a}):
            return False
        for b in range(a + 1, g.n):
            if not _connected_without(g, {a, b}):
                return False
    return True


def _connected_without(g, removed):
    adj = g.adj
    alive = ((1 << g.n) - 1) & ~sum(1 << v for v in removed)
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= adj[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen == alive


def is_claw_free(g):
    return _kernel.is_claw_free(g.n, g.adj)


def canonical_form(g):
    """Certificate bytes of the underlying simple graph (multiplicities ignored)."""
    gs = underlying_simple(g)
    return _kernel.canon_cert(gs.n, gs.adj)


def automorphism_orbits(g):
    gs = underlying_simple(g)
    return _kernel.canon_full(gs.n, gs.adj)[2]


def is_isomorphic(g1, g2):
    if g1.n != g2.n:
        return False
    return canonical_form(g1) == canonical_form(g2)
