import pytest

from hgraphs.errors import CyclePattern
from hgraphs.graphs import Graph, Representation, subdivide_edges
from hgraphs.domination import (
    max_independent_set_hgraph,
    min_domset_hgraph,
    min_domset_star,
    min_independent_domset_hgraph,
    normalize_representation,
)
from hgraphs.oracles import (
    brute_all_min_domsets,
    brute_ids,
    brute_min_domset,
    brute_mis,
    random_subtree_rep,
)
from hgraphs.stars import recognize_star, star_pattern

S3 = star_pattern(3)
K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_star_graph_needs_one():
    star6 = Graph(6, [(0, i) for i in range(1, 6)])
    rep = recognize_star(star6, 3)
    assert min_domset_star(star6, rep) == [0]


def test_fig_instance_matches_brute_force():
    from tests.test_stars import FIG

    rep = recognize_star(FIG, 3)
    sol = min_domset_star(FIG, rep)
    assert len(sol) == len(brute_min_domset(FIG))


def test_star_domination_matches_brute_force():
    for seed in range(200):
        n = 3 + seed % 12
        g, rep = random_subtree_rep(S3, n, seed)
        assert len(min_domset_star(g, rep)) == len(brute_min_domset(g))


def test_normalization_grows_hub_clique():
    for seed in range(50):
        g, rep = random_subtree_rep(S3, 8, seed)
        out = normalize_representation(g, rep, [0])
        hub = {v for v in g.vertices() if 0 in out.subtrees[v]}
        if g.n:
            assert g.is_clique(hub)
            assert not any(
                all(g.has_edge(v, u) for u in hub)
                for v in g.vertices() if v not in hub
            )


def test_path_host_instance():
    host = subdivide_edges(Graph(2, [(0, 1)]), [9])
    ivs = host.edge_paths[0][1:-1]
    subtrees = tuple(frozenset(ivs[2 * i: 2 * i + 3]) for i in range(5))
    p5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    rep = Representation(host, subtrees)
    assert len(min_domset_hgraph(p5, rep)) == 2


def test_cycle_pattern_redirects():
    g, rep = random_subtree_rep(K3, 5, 1)
    with pytest.raises(CyclePattern):
        min_domset_hgraph(g, rep)


def test_hgraph_variants_match_brute_force():
    for seed in range(120):
        n = 3 + seed % 7
        g, rep = random_subtree_rep(S3, n, seed * 11 + 1)
        assert len(min_domset_hgraph(g, rep)) == len(brute_min_domset(g))
        assert len(max_independent_set_hgraph(g, rep)) == len(brute_mis(g))
        assert len(min_independent_domset_hgraph(g, rep)) == len(brute_ids(g))


def test_mis_on_complete_graph():
    k5 = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    rep = recognize_star(k5, 3)
    assert max_independent_set_hgraph(k5, rep) == [0]


def test_high_node_charging_bound():
    from hgraphs.domination import _host_paths

    for seed in range(40):
        n = 3 + seed % 7
        g, rep = random_subtree_rep(S3, n, seed + 500)
        high, _ = _host_paths(rep)
        cap = 2 * rep.host.pattern.m
        optima = brute_all_min_domsets(g)
        assert any(
            sum(1 for v in s if rep.subtrees[v] & high) <= cap for s in optima
        )


def test_invalid_representation_rejected():
    g, rep = random_subtree_rep(S3, 5, 3)
    wrong = Graph(g.n, [])
    if g.m:
        with pytest.raises(ValueError):
            min_domset_star(wrong, rep)
