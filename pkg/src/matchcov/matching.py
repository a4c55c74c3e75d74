"""Exact perfect-matching search and the matching-covered/brick predicates.

Everything here is exact; graphs beyond 32 vertices are refused rather than
approximated.  Matchings are bitmasks over edge indices, and parallel edges
count as distinct edges throughout (contracted graphs rely on this).
"""

from dataclasses import dataclass

from . import _kernel
from .errors import CapacityError, PreconditionError
from .graph import bridges, delete_vertices, is_connected, is_three_connected

MAX_EXACT_N = 32


def _check_size(g):
    if g.n > MAX_EXACT_N:
        raise CapacityError(f"exact matching operations support n <= {MAX_EXACT_N}, got {g.n}")


@dataclass(frozen=True)
class MatchingSet:
    """Perfect matchings of `host` in the fixed enumeration order.

    `complete` is False when enumeration stopped at a cap, in which case the
    list is a prefix of the full enumeration.
    """
    host: object
    matchings: tuple  # edge bitmasks
    complete: bool

    def __len__(self):
        return len(self.matchings)


def has_perfect_matching(g):
    _check_size(g)
    eu, ev = g.edge_arrays
    return _kernel.count_pms(g.n, eu, ev, cap=1) > 0


def enumerate_perfect_matchings(g, cap=None):
    """Deterministic order: match the lowest free vertex, edges by index."""
    _check_size(g)
    eu, ev = g.edge_arrays
    want = 0 if cap is None else cap
    pms = _kernel.enumerate_pms(g.n, eu, ev, want)
    complete = cap is None or len(pms) < cap
    return MatchingSet(g, tuple(pms), complete)


def count_perfect_matchings(g, cap=None):
    _check_size(g)
    eu, ev = g.edge_arrays
    return _kernel.count_pms(g.n, eu, ev, 0 if cap is None else cap)


def count_pm_containing(g, e, cap=None):
    """Perfect matchings of g that contain edge index e, early-exiting at cap.

    Counted via the bijection with perfect matchings of g minus e's endpoints.
    """
    _check_size(g)
    if not 0 <= e < g.m:
        raise PreconditionError(f"edge index {e} out of range")
    u, v = g.edges[e]
    rest = delete_vertices(g, (u, v))
    eu, ev = rest.edge_arrays
    return _kernel.count_pms(rest.n, eu, ev, 0 if cap is None else cap)


def is_matching_covered(g):
    """Connected, at least one edge, and every edge lies in some perfect matching."""
    _check_size(g)
    if g.m == 0 or not is_connected(g):
        return False
    if g.n % 2:
        return False
    eu, ev = g.edge_arrays
    pms = _kernel.enumerate_pms(g.n, eu, ev, 0)
    covered = 0
    for p in pms:
        covered |= p
    return covered == (1 << g.m) - 1


def is_bicritical(g):
    """G minus any two distinct vertices still has a perfect matching."""
    _check_size(g)
    if g.n % 2 or g.n < 2:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            rest = delete_vertices(g, (u, v))
            eu, ev = rest.edge_arrays
            if _kernel.count_pms(rest.n, eu, ev, cap=1) == 0:
                return False
    return True


def is_brick(g):
    return is_three_connected(g) and is_bicritical(g)


def unique_pm_bridge(g):
    """A bridge inside the unique perfect matching (Kotzig's lemma).

    Precondition: g connected with exactly one perfect matching.
    """
    _check_size(g)
    if not is_connected(g):
        raise PreconditionError("unique_pm_bridge requires a connected graph")
    ms = enumerate_perfect_matchings(g, cap=2)
    if len(ms) != 1:
        raise PreconditionError(
            f"unique_pm_bridge requires exactly one perfect matching, found "
            f"{'>=2' if len(ms) == 2 else len(ms)}")
    pm = ms.matchings[0]
    for e in sorted(bridges(g)):
        if pm >> e & 1:
            return e
    raise AssertionError("no bridge inside the unique perfect matching; this contradicts Kotzig's lemma")
