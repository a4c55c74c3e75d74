"""Per-edge verdicts: removable, b-invariant, solitary.

b-invariance is only defined for removable edges, so EdgeClass.b_invariant is
None (not False) on nonremovable edges; every_b_invariant_solitary treats None
as not-b-invariant.  b(G) is computed once per report and reused across the
per-edge loop, since b(G-e) dominates the cost anyway.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import canonical_form, delete_edge, underlying_simple
from .matching import count_pm_containing, is_matching_covered
from .tightcut import b_count


@dataclass(frozen=True)
class EdgeClass:
    edge: int
    removable: bool
    b_invariant: object     # True/False, or None when not removable
    solitary: bool
    pm_count_capped: int    # exact up to cap 2


@dataclass(frozen=True)
class EdgeClassReport:
    host_certificate: bytes
    classes: tuple
    removable: int
    b_invariant: int
    solitary: int
    b_invariant_and_solitary: int

    def every_b_invariant_solitary(self):
        return all(c.solitary for c in self.classes if c.b_invariant)


def is_removable(g, e):
    """G minus e is still matching covered."""
    if not 0 <= e < g.m:
        raise PreconditionError(f"edge index {e} out of range")
    return is_matching_covered(delete_edge(g, e))


def is_b_invariant(g, e, b_of_g=None):
    """Removable and b(G-e) = b(G)."""
    if not is_removable(g, e):
        return False
    if b_of_g is None:
        b_of_g = b_count(g)
    return b_count(delete_edge(g, e)) == b_of_g


def is_solitary(g, e):
    """Contained in exactly one perfect matching."""
    return count_pm_containing(g, e, cap=2) == 1


def classify_edge(g, e, b_of_g=None):
    removable = is_removable(g, e)
    b_inv = None
    if removable:
        if b_of_g is None:
            b_of_g = b_count(g)
        b_inv = b_count(delete_edge(g, e)) == b_of_g
    capped = count_pm_containing(g, e, cap=2)
    return EdgeClass(e, removable, b_inv, capped == 1, capped)


def classify_all(g):
    """EdgeClass for every edge, in edge-index order, plus summary counts."""
    if not is_matching_covered(g):
        raise PreconditionError("classify_all requires a matching covered graph")
    b_of_g = b_count(g)
    classes = tuple(classify_edge(g, e, b_of_g) for e in range(g.m))
    return EdgeClassReport(
        host_certificate=canonical_form(g),
        classes=classes,
        removable=sum(1 for c in classes if c.removable),
        b_invariant=sum(1 for c in classes if c.b_invariant),
        solitary=sum(1 for c in classes if c.solitary),
        b_invariant_and_solitary=sum(1 for c in classes if c.b_invariant and c.solitary),
    )


def every_b_invariant_solitary(g):
    """True iff each b-invariant edge is solitary (vacuously true if none)."""
    b_of_g = None
    for e in range(g.m):
        if not is_removable(g, e):
            continue
        if b_of_g is None:
            b_of_g = b_count(g)
        if b_count(delete_edge(g, e)) != b_of_g:
            continue
        if not is_solitary(g, e):
            return False
    return True


def triangle_nonremovable_edges(g):
    """Edges u-v where u lies on a triangle and v is u's only neighbor off it.

    These are exactly the edges certified nonremovable by the triangle
    criterion; the general removability test is independent of this shortcut.
    """
    gs = underlying_simple(g)
    adj = gs.adj
    out = set()
    for a in range(gs.n):
        for b in range(a + 1, gs.n):
            if not adj[a] >> b & 1:
                continue
            common = adj[a] & adj[b] & ~((1 << (b + 1)) - 1)
            while common:
                c = (common & -common).bit_length() - 1
                common &= common - 1
                tri_mask = (1 << a) | (1 << b) | (1 << c)
                for u in (a, b, c):
                    outside = adj[u] & ~tri_mask
                    if outside.bit_count() == 1:
                        v = (outside & -outside).bit_length() - 1
                        for i, (p, q) in enumerate(g.edges):
                            if (p, q) == ((u, v) if u < v else (v, u)):
                                out.add(i)
    return out
