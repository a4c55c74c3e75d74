"""Named graph fixtures."""

import pytest

from matchcov.catalog import FAMILY_G, catalog, entry, names
from matchcov.errors import CatalogError
from matchcov.graph import is_bipartite, is_isomorphic

import oracles

EXPECTED_SIZES = {
    "K4": (4, 6),
    "C6BAR": (6, 9),
    "C6BAR_PLUS": (6, 10),
    "PETERSEN": (10, 15),
    "R8": (8, 12),
    "W6": (6, 10),
    "W6_PLUS": (6, 11),
    "W6_PLUSPLUS": (6, 12),
    "F1": (6, 10),
    "F2": (6, 10),
    "F3": (8, 14),
    "F4": (8, 14),
    "K33": (6, 9),
}


def test_names_and_sizes():
    assert tuple(EXPECTED_SIZES) == names()
    for name, (n, m) in EXPECTED_SIZES.items():
        g = catalog(name)
        assert (g.n, g.m) == (n, m), name
        assert g.is_simple()


def test_family_g():
    assert FAMILY_G == ("C6BAR_PLUS", "W6", "W6_PLUS", "W6_PLUSPLUS")


def test_lookup_is_case_insensitive():
    assert catalog("w6_plus").edges == catalog("W6_PLUS").edges
    e = entry("petersen")
    assert e.name == "PETERSEN" and e.provenance


def test_unknown_name_lists_valid_ones():
    with pytest.raises(CatalogError) as exc:
        catalog("W7")
    assert "W6_PLUSPLUS" in str(exc.value)


def test_prism_is_complement_of_hexagon():
    g = catalog("C6BAR")
    cycle = {(i, (i + 1) % 6) for i in range(6)}
    cycle = {tuple(sorted(e)) for e in cycle}
    complement = [(u, v) for u in range(6) for v in range(u + 1, 6)
                  if (u, v) not in cycle]
    assert oracles.brute_isomorphic(6, g.edges, 6, complement)


def test_c6bar_plus_extends_the_prism():
    prism = {tuple(sorted(e)) for e in catalog("C6BAR").edges}
    plus = {tuple(sorted(e)) for e in catalog("C6BAR_PLUS").edges}
    assert prism < plus and len(plus - prism) == 1


def test_w6_is_a_wheel():
    g = catalog("W6")
    assert g.degree(0) == 5
    spokes = {tuple(sorted((0, v))) for v in range(1, 6)}
    assert spokes <= set(g.edges)


def test_w6_plus_adds_one_rim_chord():
    w6 = {tuple(sorted(e)) for e in catalog("W6").edges}
    plus = {tuple(sorted(e)) for e in catalog("W6_PLUS").edges}
    assert w6 < plus and len(plus - w6) == 1


def test_w6_plusplus_is_edge_join_with_path():
    g = catalog("W6_PLUSPLUS")
    assert g.degree(0) == g.degree(1) == 5
    hub_edges = {(hub, v) for hub in (0, 1) for v in range(2, 6)}
    assert hub_edges <= set(g.edges)


def test_k33_is_the_bipartite_fixture():
    g = catalog("K33")
    assert is_bipartite(g)
    assert all(g.degree(v) == 3 for v in range(6))


def test_r8_is_cubic_with_two_triangles():
    g = catalog("R8")
    assert all(g.degree(v) == 3 for v in range(8))
    present = set(g.edges)
    triangles = sum(
        1 for a in range(8) for b in range(a + 1, 8) for c in range(b + 1, 8)
        if {(a, b), (b, c), (a, c)} <= present)
    assert triangles == 2


def test_f_fixtures_extend_r8():
    r8 = {tuple(sorted(e)) for e in catalog("R8").edges}
    for name, extra in (("F3", {(0, 5), (1, 7)}), ("F4", {(0, 6), (1, 7)})):
        edges = {tuple(sorted(e)) for e in catalog(name).edges}
        assert edges == r8 | extra, name


def test_f1_f2_are_wheel_family_members():
    assert is_isomorphic(catalog("F1"), catalog("C6BAR_PLUS"))
    assert is_isomorphic(catalog("F2"), catalog("W6"))
    assert not is_isomorphic(catalog("F1"), catalog("F2"))
