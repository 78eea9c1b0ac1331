from itertools import combinations

import networkx as nx
import pytest

from conftest import to_nx
from lmdim.errors import FamilyError
from lmdim.families import (
    all_connected_graphs,
    all_graphs,
    all_trees,
    build_family,
    from_graph6,
    parse_family,
    projective_plane,
    prufer_code,
    pseudo_sphere,
    random_bipartite_radius3,
    to_graph6,
    tree_from_prufer,
)
from lmdim.graph import is_isomorphic, structural_invariants


@pytest.mark.parametrize(
    "text",
    [
        "path:7",
        "complete-bipartite:3,4",
        "corona:path:2,cycle:5",
        "corona:join:complete:1,cycle:4,empty:2",
        "union:complete:1,complete:3",
        "spider:3-3-2",
        "tree:3-1-0-0-2-4",
        "random-bipartite:7,3",
        "named:figure1",
        "graph6:Dhc",
    ],
)
def test_family_round_trip(text):
    spec = parse_family(text)
    assert str(spec) == text
    assert parse_family(str(spec)) == spec


def test_aliases_normalize():
    assert str(parse_family("kbip:2,3")) == "complete-bipartite:2,3"
    assert str(parse_family("plane:2")) == "projective-plane:2"


@pytest.mark.parametrize("text", ["", "path", "path:x", "blob:3", "path:3,4", "corona:path:2"])
def test_malformed_family_strings(text):
    with pytest.raises(FamilyError):
        build_family(text)


def test_family_examples():
    assert is_isomorphic(pseudo_sphere(3), build_family("cycle:6"))
    h = projective_plane(2)
    assert (h.order, h.size) == (14, 21) and h.is_regular() and h.degree(0) == 3
    e = build_family("empty:4")
    assert (e.order, e.size) == (4, 0)
    assert nx.is_isomorphic(to_nx(h), nx.heawood_graph())


@pytest.mark.parametrize("q", [4, 6, 1])
def test_non_prime_plane_rejected(q):
    with pytest.raises(FamilyError, match="unsupported plane order"):
        projective_plane(q)


def test_pseudo_sphere_too_small():
    with pytest.raises(FamilyError):
        pseudo_sphere(2)


@pytest.mark.parametrize("q", [2, 3])
def test_plane_common_neighbour_property(q):
    h = projective_plane(q)
    n = q * q + q + 1
    adj = h.adjacency
    for side in (range(n), range(n, 2 * n)):
        for a, b in combinations(side, 2):
            assert len(adj[a] & adj[b]) == 1
    assert all(h.degree(v) == q + 1 for v in range(h.order))
    inv = structural_invariants(h)
    assert inv.girth == 6 and inv.diameter == 3 and inv.bipartite


@pytest.mark.parametrize("t", [3, 4, 5, 7])
def test_pseudo_sphere_degrees(t):
    g = pseudo_sphere(t)
    assert g.degree(0) == g.degree(1) == t - 1
    assert all(g.degree(v) == 2 for v in range(2, g.order))
    inv = structural_invariants(g)
    assert inv.girth == 6 and inv.diameter == 3 and inv.bipartite


def test_figure1_transcription():
    g = build_family("named:figure1")
    lab = g.labels.index
    cycle = ["A", "B", "E", "F", "D", "C"]
    for x, y in zip(cycle, cycle[1:] + cycle[:1]):
        assert g.has_edge(lab(x), lab(y))
    assert g.has_edge(lab("F"), lab("G")) and g.size == 7


def test_graph6_round_trip_against_networkx():
    for g in all_graphs(5):
        code = to_graph6(g)
        assert from_graph6(code) == g
        assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == code


def test_small_graph_counts():
    assert [len(all_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    assert [len(all_connected_graphs(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]


def test_tree_counts_and_prufer():
    assert [len(all_trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    for t in all_trees(8):
        assert nx.is_tree(to_nx(t))
        assert tree_from_prufer(prufer_code(t)) == t


def test_random_bipartite_is_seeded():
    a, ra = random_bipartite_radius3(8, 5)
    b, rb = random_bipartite_radius3(8, 5)
    assert a == b and ra == rb
    inv = structural_invariants(a)
    assert inv.connected and inv.bipartite and inv.radius == 3


def test_nested_product_families():
    g = build_family("corona:path:2,cycle:5")
    assert (g.order, g.size) == (12, 1 + 2 * 5 + 2 * 5)
    j = build_family("join:complete:1,cycle:4")
    assert (j.order, j.size) == (5, 8)


def test_file_family(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("3 2\n0 1\n1 2\n")
    assert build_family(f"file:{p}") == build_family("path:3")
    with pytest.raises(FamilyError):
        build_family(f"file:{tmp_path / 'missing.txt'}")
