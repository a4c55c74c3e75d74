"""Tight cuts, the tight-cut decomposition, and b(G).

The nontrivial tight-cut search is exhaustive over odd vertex subsets, using
the complete perfect-matching list as bit vectors.  The deterministic scan
order (|X| ascending, then numeric value of the bit set) makes decomposition
traces reproducible; an optional RNG shuffles the scan order so the Lovasz
invariance of the resulting brick/brace multiset can be tested.
"""

from dataclasses import dataclass
from itertools import combinations

from . import _kernel
from .errors import CapacityError, PreconditionError
from .graph import canonical_form, contract, is_bipartite
from .matching import enumerate_perfect_matchings, is_matching_covered

MAX_TIGHT_SCAN_N = 20


@dataclass(frozen=True)
class Cut:
    x_mask: int        # vertex bit set
    boundary: int      # edge bit set
    trivial: bool

    def vertices(self):
        return [v for v in range(self.x_mask.bit_length()) if self.x_mask >> v & 1]


@dataclass(frozen=True)
class DecompositionResult:
    pieces: tuple      # (multigraph, simple certificate, nonbipartite flag)
    b: int             # number of bricks
    braces: int
    trace: tuple       # cuts chosen, one per contraction step

    def certificates(self):
        """Multiset of piece certificates, sorted."""
        return tuple(sorted(cert for _, cert, _ in self.pieces))


def make_cut(g, x):
    """Cut record for vertex set x (iterable of vertices or bitmask)."""
    x_mask = x if isinstance(x, int) else sum(1 << v for v in set(x))
    size = x_mask.bit_count()
    if size == 0 or size >= g.n or x_mask >> g.n:
        raise PreconditionError("cut set must be a nonempty proper subset of the vertices")
    eu, ev = g.edge_arrays
    boundary = _kernel.boundary_mask(eu, ev, x_mask)
    return Cut(x_mask, boundary, trivial=(size == 1 or size == g.n - 1))


def is_tight(g, x, pms):
    """Every perfect matching meets the cut in exactly one edge."""
    if not pms.complete:
        raise PreconditionError("is_tight requires a complete MatchingSet")
    cut = x if isinstance(x, Cut) else make_cut(g, x)
    return all((m & cut.boundary).bit_count() == 1 for m in pms.matchings)


def _odd_subsets(n, rng=None):
    """Candidate nontrivial cut shores: odd |X|, 3 <= |X| <= n-3, |X| <= n/2."""
    subsets = []
    for size in range(3, n // 2 + 1, 2):
        if size > n - 3:
            break
        subsets.extend(sorted(sum(1 << v for v in comb)
                              for comb in combinations(range(n), size)))
    if rng is not None:
        rng.shuffle(subsets)
    return subsets


def find_nontrivial_tight_cut(g, pms=None, rng=None):
    """First nontrivial tight cut in scan order, or None.

    Deterministic by default; pass an rng to randomize the scan order (used by
    the decomposition-invariance tests).
    """
    if g.n > MAX_TIGHT_SCAN_N:
        raise CapacityError(f"tight-cut scan supports n <= {MAX_TIGHT_SCAN_N}, got {g.n}")
    if pms is None:
        if not is_matching_covered(g):
            raise PreconditionError("tight-cut search requires a matching covered graph")
        pms = enumerate_perfect_matchings(g)
    eu, ev = g.edge_arrays
    x = _kernel.first_tight_cut(eu, ev, pms.matchings, _odd_subsets(g.n, rng))
    if x < 0:
        return None
    return make_cut(g, x)


def decompose(g, rng=None):
    """Tight cut decomposition into bricks and braces.

    Recursively contracts along nontrivial tight cuts; b counts nonbipartite
    pieces.  The piece list order follows the recursion (X side first).
    """
    if not is_matching_covered(g):
        raise PreconditionError("decompose requires a matching covered graph")
    pieces = []
    trace = []

    def rec(h):
        cut = None
        if h.n >= 6:
            pms = enumerate_perfect_matchings(h)
            cut = find_nontrivial_tight_cut(h, pms=pms, rng=rng)
        if cut is None:
            pieces.append((h, canonical_form(h), not is_bipartite(h)))
            return
        trace.append(cut)
        xs = cut.vertices()
        co = [v for v in range(h.n) if not cut.x_mask >> v & 1]
        g1, _ = contract(h, xs)   # shrink X
        g2, _ = contract(h, co)   # shrink the complement
        rec(g1)
        rec(g2)

    rec(g)
    b = sum(1 for _, _, nb in pieces if nb)
    return DecompositionResult(tuple(pieces), b, len(pieces) - b, tuple(trace))


def b_count(g):
    """Number of bricks in the tight cut decomposition."""
    return decompose(g).b
