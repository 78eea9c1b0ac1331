import pytest

from lmdim.errors import DisconnectedGraphError, RuleNotApplicable
from lmdim.families import (
    all_connected_graphs,
    all_graphs,
    all_trees,
    build_family,
    complete_graph,
    cycle_graph,
    path_graph,
    projective_plane,
    pseudo_sphere,
    star_graph,
)
from lmdim.formulas import (
    beta,
    beta_profile,
    bipartite_radius3_upper,
    delta_prime,
    diameter_two_equality,
    dim2_join_characterization,
    dimension_bounds,
    extremal_upper_characterization,
    family_closed_form,
    lower_extreme_characterization,
    near_universal_vertex,
    projective_like_exact,
    pseudo_sphere_order,
    theorem3_corona_dimension,
    tree_corona_dimension,
    tree_profile,
    two_n_characterization,
    upsilon_plane,
)
from lmdim.graph import Graph, corona, structural_invariants
from lmdim.localmetric import apex_in_some_basis, local_metric_dimension

P2, P3 = path_graph(2), path_graph(3)


def oracle(g, h):
    return local_metric_dimension(corona(g, h)).value


def fam(text):
    return build_family(text)


# -- engine -----------------------------------------------------------------------


@pytest.mark.parametrize(
    "g,h,value",
    [("path:2", "complete:3", 4), ("path:3", "empty:5", 1), ("path:2", "named:figure1", 4)],
)
def test_theorem3_examples(g, h, value):
    g, h = fam(g), fam(h)
    assert theorem3_corona_dimension(g, h).value == value
    assert oracle(g, h) == value


def test_theorem3_against_oracle_small_pairs():
    gs = [g for n in range(1, 4) for g in all_connected_graphs(n)]
    hs = [h for n in range(1, 5) for h in all_graphs(n)]
    for g in gs:
        for h in hs:
            assert theorem3_corona_dimension(g, h).value == oracle(g, h), (g, h)


def test_theorem3_rules():
    assert theorem3_corona_dimension(P2, cycle_graph(4)).rule == "Thm3(ii)"
    assert theorem3_corona_dimension(P2, cycle_graph(5)).rule == "Thm3(i)"
    assert theorem3_corona_dimension(Graph(1), cycle_graph(5)).rule == "Thm3(n=1)"
    assert theorem3_corona_dimension(P2, fam("empty:3")).rule == "EmptyH"
    with pytest.raises(DisconnectedGraphError):
        theorem3_corona_dimension(fam("empty:2"), cycle_graph(4))


def test_radius_four_shortcut_agrees_with_enumeration():
    for h in (path_graph(8), path_graph(9), cycle_graph(9)):
        if structural_invariants(h).radius < 4:
            continue
        a = theorem3_corona_dimension(P2, h, shortcut=True)
        b = theorem3_corona_dimension(P2, h, shortcut=False)
        assert a.value == b.value == oracle(P2, h)
        assert not apex_in_some_basis(h).apex_in_some


# -- closed forms -------------------------------------------------------------------


@pytest.mark.parametrize(
    "n,family,value",
    [
        (2, "cycle:5", 4),
        (3, "path:5", 3),
        (2, "complete-bipartite:3,4", 2),
        (2, "complete:3", 4),
        (2, "cycle:4", 2),
        (2, "path:6", 4),
        (4, "cycle:9", 12),
    ],
)
def test_closed_form_examples(n, family, value):
    assert family_closed_form(n, family).value == value


def test_closed_form_consistent_with_engine():
    families = [f"complete:{t}" for t in range(2, 7)]
    families += [f"complete-bipartite:{r},{s}" for r in range(1, 4) for s in range(r, 4)]
    families += [f"path:{t}" for t in range(4, 10)] + [f"cycle:{t}" for t in range(4, 10)]
    for f in families:
        for n in (2, 3):
            assert family_closed_form(n, f).value == theorem3_corona_dimension(path_graph(n), fam(f)).value


@pytest.mark.parametrize("family", ["path:3", "cycle:3", "star:3", "named:figure1"])
def test_closed_form_out_of_range(family):
    with pytest.raises(RuleNotApplicable, match="no closed form"):
        family_closed_form(2, family)


# -- bounds ---------------------------------------------------------------------------


def test_bounds_examples():
    p = dimension_bounds(P2, star_graph(4))
    assert (p.lo, p.hi) == (2, 8)
    assert dimension_bounds(P3, cycle_graph(5)).lo >= 6
    assert dimension_bounds(P2, path_graph(6)).lo >= 4
    with pytest.raises(RuleNotApplicable):
        dimension_bounds(P2, fam("empty:3"))


def test_bounds_contain_oracle():
    for g in (P2, P3, complete_graph(3)):
        for n in range(2, 6):
            for h in all_graphs(n):
                if h.size == 0:
                    continue
                assert dimension_bounds(g, h).contains(oracle(g, h))


# -- characterizations -----------------------------------------------------------------


def test_extremal_examples():
    assert extremal_upper_characterization(complete_graph(4))
    assert extremal_upper_characterization(fam("union:complete:1,complete:3"))
    assert not extremal_upper_characterization(path_graph(4))


def test_extremal_attained_only_by_complete_graphs():
    # The oracle attains n(n'-1) exactly for complete H on every graph of order 4 and 5.
    for n in (4, 5):
        for h in all_graphs(n):
            attained = oracle(P2, h) == 2 * (n - 1)
            assert attained == h.is_complete()


def test_lower_extreme_examples():
    assert lower_extreme_characterization(fam("complete-bipartite:2,3"))
    assert not lower_extreme_characterization(cycle_graph(6))
    assert lower_extreme_characterization(fam("union:cycle:4,empty:2"))


def test_lower_extreme_matches_oracle():
    for n in range(2, 6):
        for h in all_graphs(n):
            if h.size:
                assert lower_extreme_characterization(h) == (oracle(P2, h) == 2)


def test_diameter_two_examples():
    assert diameter_two_equality(cycle_graph(5)) == 2
    assert diameter_two_equality(cycle_graph(4)) == 1
    assert diameter_two_equality(path_graph(6)) is None
    for n in range(3, 6):
        for h in all_connected_graphs(n):
            mult = diameter_two_equality(h)
            if mult is not None:
                assert oracle(P2, h) == 2 * mult


# -- beta / delta' -------------------------------------------------------------------------


def test_beta_examples():
    assert all(beta(cycle_graph(6), v) == 2 for v in range(6))
    heawood = projective_plane(2)
    assert all(beta(heawood, v) == 3 for v in range(14))
    with pytest.raises(RuleNotApplicable):
        beta(star_graph(4), 0)
    with pytest.raises(RuleNotApplicable, match="center"):
        beta(path_graph(5), 0)


def test_delta_prime_examples():
    assert delta_prime(cycle_graph(6)) == 2
    assert delta_prime(projective_plane(2)) == 3
    assert delta_prime(projective_plane(3)) == 4
    assert set(beta_profile(path_graph(7))) == {3}


# -- bipartite radius three ------------------------------------------------------------------


def test_bipartite_upper_examples():
    p = bipartite_radius3_upper(cycle_graph(6), 2)
    assert p.hi == 4
    p = bipartite_radius3_upper(projective_plane(2), 2)
    assert p.hi == 6 == oracle(P2, projective_plane(2))
    with pytest.raises(RuleNotApplicable, match="rule not applicable"):
        bipartite_radius3_upper(cycle_graph(4), 2)


def test_projective_like_examples():
    assert projective_like_exact(pseudo_sphere(4), 3).value == 6
    assert projective_like_exact(projective_plane(2), 2).value == 6
    assert projective_like_exact(cycle_graph(6), 2).value == 4
    assert projective_like_exact(path_graph(7), 2) is None


def test_pseudo_sphere_detection():
    for t in range(3, 8):
        assert pseudo_sphere_order(pseudo_sphere(t)) == t
    assert pseudo_sphere_order(projective_plane(2)) is None
    assert pseudo_sphere_order(path_graph(6)) is None


def test_upsilon_q2():
    r = upsilon_plane(2)
    assert r.value == 3 == r.delta_prime == r.degree
    assert r.stated_value == 2
    assert r.all_pencil_or_range and len(r.optima) == 14


def test_upsilon_q3():
    r = upsilon_plane(3)
    assert r.value == r.delta_prime == 4
    assert r.all_pencil_or_range


def test_upsilon_rejects_composite():
    with pytest.raises(Exception, match="unsupported plane order"):
        upsilon_plane(4)


def test_two_n_examples():
    assert two_n_characterization(fam("named:figure1"))
    assert two_n_characterization(path_graph(6))
    assert not two_n_characterization(projective_plane(2))
    with pytest.raises(RuleNotApplicable):
        two_n_characterization(cycle_graph(5))


def test_dim2_examples():
    assert dim2_join_characterization(fam("named:figure1"))
    assert not dim2_join_characterization(projective_plane(2))


def bipartite_radius3_population():
    out = [fam("named:figure1"), cycle_graph(6), path_graph(6), path_graph(7), pseudo_sphere(4)]
    out += [fam(f"random-bipartite:{6 + i % 4},{i}") for i in range(12)]
    out += [t for n in range(6, 9) for t in all_trees(n) if structural_invariants(t).radius == 3]
    return out


def test_structural_predicates_against_oracle():
    for h in bipartite_radius3_population():
        rep = apex_in_some_basis(h)
        assert dim2_join_characterization(h) == (rep.dim_join == 2)
        assert two_n_characterization(h) == (oracle(P2, h) == 4)
        dp = delta_prime(h)
        assert dp + 1 >= rep.dim_join
        assert (dp + 1 == rep.dim_join) == rep.apex_in_some
        if near_universal_vertex(h):
            assert rep.dim_join == 2
        if rep.dim_join == 2:
            assert not rep.apex_in_some


# -- trees -----------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "family,value,rule",
    [
        ("path:6", 4, "Tree(i)"),
        ("spider:3-3-2", 6, "Tree(ii)-h1"),
        ("spider:3-3-3", 6, "Tree(ii)-other"),
    ],
)
def test_tree_examples(family, value, rule):
    t = fam(family)
    p = tree_corona_dimension(t, 2)
    assert (p.value, p.rule) == (value, rule)
    assert oracle(P2, t) == value


def test_tree_profile_examples():
    p = tree_profile(fam("spider:3-3-3"))
    assert p.varsigma == 3 and set(p.phi.values()) == {1}
    p = tree_profile(fam("spider:3-3-2"))
    assert p.varsigma == 2 and sorted(p.heights.values()) == [1, 2, 2]
    p = tree_profile(path_graph(7))
    assert p.center == (3,) and p.varsigma == 2
    assert tree_profile(path_graph(6)) is None


def test_tree_theorem_all_small_trees():
    for n in range(6, 10):
        for t in all_trees(n):
            if structural_invariants(t).radius != 3:
                continue
            assert tree_corona_dimension(t, 2).value == oracle(P2, t)


def test_tree_rejects_other_inputs():
    with pytest.raises(RuleNotApplicable):
        tree_corona_dimension(cycle_graph(6), 2)
    with pytest.raises(RuleNotApplicable):
        tree_corona_dimension(path_graph(5), 2)
