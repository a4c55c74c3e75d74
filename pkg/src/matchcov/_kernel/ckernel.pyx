# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel: byte-compatible twin of pykernel.

Width limits (enforced by the _kernel dispatch layer): canonical labeling
n <= 16, matchings n <= 32 with m <= 128 edges, tight-cut scan m <= 128.
Certificates, enumeration order, and orbit output match pykernel exactly.
"""

BACKEND_NAME = "c"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef inline int popcountll(unsigned long long x) nogil:
    return __builtin_popcountll(x)

cdef inline int ctzll(unsigned long long x) nogil:
    return __builtin_ctzll(x)


DEF MAXN = 16
DEF CERTLEN = 17          # 1 length byte + ceil(16*15/2 / 8)
DEF MAXMN = 32
DEF MAXM = 128


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

cdef class _Canon:
    cdef int n, certlen
    cdef unsigned int adj[MAXN]
    cdef int has_first, has_best
    cdef int first_perm[MAXN]
    cdef int best_perm[MAXN]
    cdef unsigned char first_cert[CERTLEN]
    cdef unsigned char best_cert[CERTLEN]
    cdef int parent[MAXN]
    cdef list autos

    cdef int find(self, int x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    cdef void union_(self, int x, int y):
        cdef int rx = self.find(x)
        cdef int ry = self.find(y)
        if rx != ry:
            if rx < ry:
                self.parent[ry] = rx
            else:
                self.parent[rx] = ry

    cdef void normalize(self, int *colors):
        cdef int vals[MAXN]
        cdef int i, j, k, nv = 0, v
        for i in range(self.n):
            v = colors[i]
            for j in range(nv):
                if vals[j] == v:
                    break
            else:
                # insertion keeping vals sorted
                j = nv
                while j > 0 and vals[j - 1] > v:
                    vals[j] = vals[j - 1]
                    j -= 1
                vals[j] = v
                nv += 1
        for i in range(self.n):
            for k in range(nv):
                if vals[k] == colors[i]:
                    colors[i] = k
                    break

    cdef void refine(self, int *colors):
        # equitable refinement; signature order matches the Python twin:
        # (old color, count in class 0, count in class 1, ...)
        cdef int i, v, c, ncolors, changed
        cdef unsigned int masks[MAXN]
        cdef int sig_hi[MAXN]
        cdef unsigned long long sig_lo[MAXN]
        cdef int order[MAXN]
        cdef int newc[MAXN]
        cdef int rank, j, tmp
        while True:
            ncolors = 0
            for i in range(self.n):
                if colors[i] + 1 > ncolors:
                    ncolors = colors[i] + 1
            for c in range(ncolors):
                masks[c] = 0
            for v in range(self.n):
                masks[colors[v]] |= 1u << v
            for v in range(self.n):
                sig_hi[v] = colors[v]
                sig_lo[v] = 0
                for c in range(ncolors):
                    sig_lo[v] |= (<unsigned long long> popcountll(self.adj[v] & masks[c])) << (4 * (15 - c))
            # sort vertex indices by (sig_hi, sig_lo); insertion sort, n <= 16
            for v in range(self.n):
                order[v] = v
            for i in range(1, self.n):
                tmp = order[i]
                j = i
                while j > 0 and (sig_hi[order[j - 1]] > sig_hi[tmp] or
                                 (sig_hi[order[j - 1]] == sig_hi[tmp] and sig_lo[order[j - 1]] > sig_lo[tmp])):
                    order[j] = order[j - 1]
                    j -= 1
                order[j] = tmp
            rank = 0
            newc[order[0]] = 0
            for i in range(1, self.n):
                if sig_hi[order[i]] != sig_hi[order[i - 1]] or sig_lo[order[i]] != sig_lo[order[i - 1]]:
                    rank += 1
                newc[order[i]] = rank
            changed = 0
            for v in range(self.n):
                if newc[v] != colors[v]:
                    changed = 1
                colors[v] = newc[v]
            if not changed:
                return

    cdef void make_cert(self, int *perm, unsigned char *cert):
        cdef int i, j, k = 0
        cdef unsigned int ai
        for i in range(self.certlen):
            cert[i] = 0
        cert[0] = <unsigned char> self.n
        for i in range(self.n):
            ai = self.adj[perm[i]]
            for j in range(i + 1, self.n):
                if (ai >> perm[j]) & 1u:
                    cert[1 + (k >> 3)] |= <unsigned char> (0x80 >> (k & 7))
                k += 1

    cdef void record_auto(self, int *p, int *q):
        cdef int i
        cdef list g = [0] * self.n
        for i in range(self.n):
            g[p[i]] = q[i]
        gt = tuple(g)
        if gt not in self.autos:
            self.autos.append(gt)
            for i in range(self.n):
                self.union_(i, gt[i])

    cdef void handle_leaf(self, int *colors):
        cdef int perm[MAXN]
        cdef unsigned char cert[CERTLEN]
        cdef int v, i, cmp_first, cmp_best
        for v in range(self.n):
            perm[colors[v]] = v
        self.make_cert(perm, cert)
        if not self.has_first:
            self.has_first = 1
            for i in range(self.certlen):
                self.first_cert[i] = cert[i]
            for i in range(self.n):
                self.first_perm[i] = perm[i]
        else:
            cmp_first = 0
            for i in range(self.certlen):
                if cert[i] != self.first_cert[i]:
                    cmp_first = 1
                    break
            if cmp_first == 0:
                self.record_auto(self.first_perm, perm)
        if not self.has_best:
            self.has_best = 1
            for i in range(self.certlen):
                self.best_cert[i] = cert[i]
            for i in range(self.n):
                self.best_perm[i] = perm[i]
            return
        cmp_best = 0
        for i in range(self.certlen):
            if cert[i] < self.best_cert[i]:
                cmp_best = -1
                break
            elif cert[i] > self.best_cert[i]:
                cmp_best = 1
                break
        if cmp_best < 0:
            for i in range(self.certlen):
                self.best_cert[i] = cert[i]
            for i in range(self.n):
                self.best_perm[i] = perm[i]
        elif cmp_best == 0:
            self.record_auto(self.best_perm, perm)

    cdef set closure(self, tried, fixed):
        cdef list gens = []
        for g in self.autos:
            ok = True
            for x in fixed:
                if g[x] != x:
                    ok = False
                    break
            if ok:
                gens.append(g)
        out = set(tried)
        if not gens:
            return out
        frontier = list(tried)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return out

    cdef void search(self, int *colors, list fixed):
        cdef int counts[MAXN]
        cdef int i, c, cell_color = -1, v
        cdef int sub[MAXN]
        for i in range(self.n):
            counts[i] = 0
        for i in range(self.n):
            counts[colors[i]] += 1
        for c in range(self.n):
            if counts[c] > 1:
                cell_color = c
                break
        if cell_color < 0:
            self.handle_leaf(colors)
            return
        tried = set()
        for v in range(self.n):
            if colors[v] != cell_color:
                continue
            if v in self.closure(tried, fixed):
                continue
            for i in range(self.n):
                sub[i] = colors[i] * 2
            sub[v] -= 1
            self.normalize(sub)
            self.refine(sub)
            fixed.append(v)
            self.search(sub, fixed)
            fixed.pop()
            tried.add(v)


def canon_auto(int n, adj):
    """(cert, perm, orbits, gens); see pykernel.canon_auto."""
    if n == 0:
        return b"\x00", (), (), ()
    cdef _Canon st = _Canon()
    cdef int i
    st.n = n
    st.certlen = 1 + (n * (n - 1) // 2 + 7) // 8
    for i in range(n):
        st.adj[i] = <unsigned int> adj[i]
        st.parent[i] = i
    st.has_first = 0
    st.has_best = 0
    st.autos = []
    cdef int colors[MAXN]
    for i in range(n):
        colors[i] = popcountll(st.adj[i])
    st.normalize(colors)
    st.refine(colors)
    st.search(colors, [])
    cert = bytes(st.best_cert[:st.certlen])
    perm = tuple(st.best_perm[i] for i in range(n))
    orbits = tuple(st.find(i) for i in range(n))
    return cert, perm, orbits, tuple(st.autos)


def canon_full(int n, adj):
    return canon_auto(n, adj)[:3]


def canon_cert(int n, adj):
    return canon_auto(n, adj)[0]


# ---------------------------------------------------------------------------
# perfect matchings
# ---------------------------------------------------------------------------

cdef class _PM:
    cdef int n, m, cap, count, collect
    cdef int eu[MAXM]
    cdef int ev[MAXM]
    cdef int inc_off[MAXMN + 1]
    cdef int inc[2 * MAXM]
    cdef int chosen[16]           # MAXMN / 2 edges in a perfect matching
    cdef list out

    cdef void setup(self, int n, eu, ev, int cap, int collect):
        cdef int i, v
        cdef int fill[MAXMN]
        self.n = n
        self.m = len(eu)
        self.cap = cap
        self.count = 0
        self.collect = collect
        self.out = [] if collect else None
        for i in range(self.m):
            self.eu[i] = eu[i]
            self.ev[i] = ev[i]
        cdef int deg[MAXMN]
        for v in range(n):
            deg[v] = 0
        for i in range(self.m):
            deg[self.eu[i]] += 1
            deg[self.ev[i]] += 1
        self.inc_off[0] = 0
        for v in range(n):
            self.inc_off[v + 1] = self.inc_off[v] + deg[v]
            fill[v] = self.inc_off[v]
        for i in range(self.m):
            self.inc[fill[self.eu[i]]] = i
            fill[self.eu[i]] += 1
            self.inc[fill[self.ev[i]]] = i
            fill[self.ev[i]] += 1

    cdef int rec(self, unsigned long long free, int depth):
        cdef int v, k, e, o, i
        if free == 0:
            self.count += 1
            if self.collect:
                mask = 0
                for i in range(depth):
                    mask |= (<object> 1) << self.chosen[i]  # Python ints: m can exceed 63
                self.out.append(mask)
            return 1 if (self.cap and self.count >= self.cap) else 0
        v = ctzll(free)
        for k in range(self.inc_off[v], self.inc_off[v + 1]):
            e = self.inc[k]
            o = self.eu[e] ^ self.ev[e] ^ v
            if o != v and (free >> o) & 1:
                self.chosen[depth] = e
                if self.rec(free & ~((1ULL << v) | (1ULL << o)), depth + 1):
                    return 1
        return 0


def enumerate_pms(int n, eu, ev, int cap=0):
    if n % 2:
        return []
    if n == 0:
        return [0]
    cdef _PM st = _PM()
    st.setup(n, eu, ev, cap, 1)
    st.rec((1ULL << n) - 1 if n < 64 else <unsigned long long> -1, 0)
    return st.out


def count_pms(int n, eu, ev, int cap=0):
    if n % 2:
        return 0
    if n == 0:
        return 1
    cdef _PM st = _PM()
    st.setup(n, eu, ev, cap, 0)
    st.rec((1ULL << n) - 1 if n < 64 else <unsigned long long> -1, 0)
    return st.count


# ---------------------------------------------------------------------------
# claw detection
# ---------------------------------------------------------------------------

def is_claw_free(int n, adj):
    cdef unsigned long long cadj[64]
    cdef int v, a, b
    cdef unsigned long long nb, rest, second, s2, third
    for v in range(n):
        cadj[v] = <unsigned long long> adj[v]
    for v in range(n):
        nb = cadj[v]
        if popcountll(nb) < 3:
            continue
        rest = nb
        while rest:
            a = ctzll(rest)
            rest &= rest - 1
            second = rest & ~cadj[a]
            s2 = second
            while s2:
                b = ctzll(s2)
                s2 &= s2 - 1
                third = second & ~cadj[b]
                if b < 63:
                    third &= ~((2ULL << b) - 1)
                else:
                    third = 0
                if third:
                    return False
    return True


# ---------------------------------------------------------------------------
# tight-cut scan
# ---------------------------------------------------------------------------

def boundary_mask(eu, ev, x_mask):
    cdef int i
    bnd = 0
    for i in range(len(eu)):
        if ((x_mask >> eu[i]) ^ (x_mask >> ev[i])) & 1:
            bnd |= 1 << i
    return bnd


def first_tight_cut(eu, ev, pms, subsets):
    cdef int m = len(eu)
    cdef int npm = len(pms)
    cdef int ceu[MAXM]
    cdef int cev[MAXM]
    cdef unsigned long long pm_lo[4096]
    cdef unsigned long long pm_hi[4096]
    cdef int i, j, ok
    cdef unsigned long long x, blo, bhi
    if npm > 4096:
        # very dense hosts: defer to the Python twin
        from . import pykernel
        return pykernel.first_tight_cut(eu, ev, pms, subsets)
    for i in range(m):
        ceu[i] = eu[i]
        cev[i] = ev[i]
    for j in range(npm):
        p = pms[j]
        pm_lo[j] = <unsigned long long> (p & 0xFFFFFFFFFFFFFFFF)
        pm_hi[j] = <unsigned long long> (p >> 64)
    for sub in subsets:
        x = <unsigned long long> sub
        blo = 0
        bhi = 0
        for i in range(m):
            if ((x >> ceu[i]) ^ (x >> cev[i])) & 1ULL:
                if i < 64:
                    blo |= 1ULL << i
                else:
                    bhi |= 1ULL << (i - 64)
        ok = 1
        for j in range(npm):
            if popcountll(pm_lo[j] & blo) + popcountll(pm_hi[j] & bhi) != 1:
                ok = 0
                break
        if ok:
            return sub
    return -1
