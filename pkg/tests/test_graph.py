import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from lmdim.errors import GraphError
from lmdim.families import (
    build_family,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from lmdim.graph import (
    Graph,
    bipartition,
    components,
    corona,
    disjoint_union,
    dominates,
    format_edge_list,
    girth,
    is_isomorphic,
    join,
    neighborhood_shell,
    parse_edge_list,
    read_edge_list,
    structural_invariants,
    write_edge_list,
)
from lmdim.harness import catalog


def relaxation_distances(g: Graph):
    """Bellman-Ford style repeated relaxation, independent of BFS."""
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.order)] for i in range(g.order)]
    for _ in range(g.order):
        for u, v in g.edges:
            for s in range(g.order):
                d[s][v] = min(d[s][v], d[s][u] + 1)
                d[s][u] = min(d[s][u], d[s][v] + 1)
    return [[None if x == inf else x for x in row] for row in d]


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=10))
def test_distances_match_relaxation(g):
    d = g.distances
    expected = relaxation_distances(g)
    assert [list(d.row(v)) for v in range(g.order)] == expected


@settings(max_examples=100, deadline=None)
@given(graphs(max_order=9))
def test_invariants_match_networkx(g):
    x = to_nx(g)
    inv = structural_invariants(g)
    assert inv.connected == nx.is_connected(x)
    assert inv.bipartite == nx.is_bipartite(x)
    assert inv.clique_number == max((len(c) for c in nx.find_cliques(x)), default=0)
    assert len(inv.components) == nx.number_connected_components(x)
    if inv.connected:
        assert inv.radius == nx.radius(x)
        assert inv.diameter == nx.diameter(x)
        assert set(inv.center) == set(nx.center(x))
    cycles = nx.minimum_cycle_basis(x)
    assert girth(g) == (min(len(c) for c in cycles) if cycles else None)
    # Only one direction holds in general: girth 4 can coexist with a 5-cycle.
    if inv.bipartite:
        assert inv.girth is None or inv.girth % 2 == 0


def test_bipartite_iff_even_girth_on_catalog():
    cat = catalog("extended")
    for s in cat.g_specs + cat.h_specs:
        inv = structural_invariants(build_family(s))
        assert inv.bipartite == (inv.girth is None or inv.girth % 2 == 0), str(s)


def test_even_girth_with_odd_cycle():
    g = Graph(6, ((0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 5), (4, 5)))
    inv = structural_invariants(g)
    assert inv.girth == 4 and not inv.bipartite


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))


def test_graph_normalizes_edge_order():
    assert Graph(3, ((2, 1), (1, 0))).edges == ((0, 1), (1, 2))


def test_distance_examples():
    assert path_graph(4).distances[0, 3] == 3
    c6 = cycle_graph(6)
    assert all(c6.distances[v, (v + 3) % 6] == 3 for v in range(6))
    h = join(Graph(1), build_family("named:figure1"))
    assert max(max(h.distances.row(v)) for v in range(h.order)) <= 2


def test_disconnected_distances_are_absent():
    g = empty_graph(3)
    assert g.distances[0, 1] is None
    inv = structural_invariants(g)
    assert inv.radius is None and inv.diameter is None and not inv.connected


def test_corona_examples():
    h = build_family("named:figure1")
    assert is_isomorphic(corona(Graph(1), h), join(Graph(1), h))
    c = corona(path_graph(2), complete_graph(2))
    assert (c.order, c.size) == (6, 7)
    c = corona(path_graph(2), empty_graph(1))
    assert is_isomorphic(c, path_graph(4))


def test_corona_vertex_layout():
    g, h = path_graph(3), cycle_graph(4)
    c = corona(g, h)
    n, m = g.order, h.order
    for i in range(n):
        block = range(n + i * m, n + (i + 1) * m)
        assert set(c.neighbors(i)) >= set(block)
        for u, v in h.edges:
            assert c.has_edge(n + i * m + u, n + i * m + v)


@settings(max_examples=60, deadline=None)
@given(graphs(min_order=1, max_order=5, connected=True), graphs(min_order=1, max_order=5))
def test_corona_counts_and_networkx(g, h):
    c = corona(g, h)
    n, m = g.order, h.order
    assert c.order == n * (1 + m)
    assert c.size == g.size + n * h.size + n * m
    assert nx.is_isomorphic(to_nx(c), nx.corona_product(to_nx(g), to_nx(h)))


def test_join_examples():
    w = join(Graph(1), cycle_graph(4))
    assert (w.order, w.size) == (5, 8)
    assert is_isomorphic(join(Graph(1), empty_graph(4)), star_graph(4))
    assert is_isomorphic(join(Graph(1), complete_graph(4)), complete_graph(5))


def test_invariant_examples():
    inv = structural_invariants(path_graph(7))
    assert inv.radius == 3 and inv.center == (3,)
    inv = structural_invariants(build_family("projective-plane:2"))
    assert inv.girth == 6 and inv.diameter == 3
    assert structural_invariants(complete_graph(5)).clique_number == 5
    assert girth(path_graph(5)) is None


def test_components_and_bipartition_of_disconnected():
    g = disjoint_union(cycle_graph(4), empty_graph(2))
    assert components(g) == [(0, 1, 2, 3), (4,), (5,)]
    u1, u2 = bipartition(g)
    assert {0, 4, 5} <= u1 and 1 in u2
    assert bipartition(cycle_graph(5)) is None


def test_shell_examples():
    c6 = cycle_graph(6)
    assert neighborhood_shell(c6, 0, 3) == {3}
    assert neighborhood_shell(c6, 2, 0) == {2}
    fig = build_family("named:figure1")
    a, f = fig.labels.index("A"), fig.labels.index("F")
    assert neighborhood_shell(fig, a, 3) == {f}


def test_dominates_examples():
    c6 = cycle_graph(6)
    assert dominates(c6, {1, 2}, {1, 2})
    assert dominates(c6, {0}, c6.neighbors(0))
    assert not dominates(c6, {0}, neighborhood_shell(c6, 0, 2))


def test_isomorphism_against_networkx():
    pairs = [
        (cycle_graph(6), build_family("pseudo-sphere:3")),
        (path_graph(5), star_graph(4)),
        (build_family("projective-plane:2"), build_family("projective-plane:2")),
    ]
    for a, b in pairs:
        assert is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_edge_list_round_trip(tmp_path):
    g = build_family("named:figure1")
    path = tmp_path / "g.txt"
    write_edge_list(g, path, comment="figure")
    text = path.read_text()
    assert text.startswith("# figure\n7 7\n")
    assert read_edge_list(path) == g
    assert format_edge_list(parse_edge_list(text)) == format_edge_list(g)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "3 2\n0 1\n",
        "3 1\n0 0\n",
        "3 2\n0 1\n1 0\n",
        "3 1\n0 5\n",
        "3 1\n0 x\n",
    ],
)
def test_edge_list_rejects_malformed(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)
