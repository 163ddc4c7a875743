import pytest

from hgraphs.errors import OracleCapError
from hgraphs.graphs import Graph, verify_representation
from hgraphs.constructions import t3_gadget
from hgraphs.oracles import (
    brute_chain_cover,
    brute_ids,
    brute_list_coloring,
    brute_max_clique,
    brute_membership,
    brute_min_domset,
    brute_minimal_separators,
    brute_mis,
    random_height1_poset,
    random_subtree_rep,
)
from hgraphs.posets import Poset
from hgraphs.rng import SplitMix64
from hgraphs.stars import star_pattern

K2 = Graph(2, [(0, 1)])
S3 = star_pattern(3)
K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_rng_is_pinned():
    # first two outputs of the reference stream for seed 0
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    a = SplitMix64(42)
    b = SplitMix64(42)
    assert [a.randrange(10) for _ in range(8)] == [
        b.randrange(10) for _ in range(8)
    ]


def test_generator_determinism_and_validity():
    for seed in (0, 1, 7, 1234):
        a = random_subtree_rep(S3, 9, seed)
        b = random_subtree_rep(S3, 9, seed)
        assert a[0] == b[0] and a[1].subtrees == b[1].subtrees
        assert verify_representation(*a).valid
    g, rep = random_subtree_rep(K2, 0, 5)
    assert g.n == 0 and rep.subtrees == ()


def test_interval_generator_gives_interval_graphs():
    from hgraphs.intervals import Refutation, interval_order

    for seed in range(100):
        g, _ = random_subtree_rep(K2, 8, seed)
        assert not isinstance(interval_order(g), Refutation)


def test_cycle_host_sometimes_breaks_chordality():
    from hgraphs.intervals import Refutation, is_chordal

    hits = sum(
        isinstance(is_chordal(random_subtree_rep(K3, 8, seed)[0]), Refutation)
        for seed in range(300)
    )
    assert hits > 0


def test_poset_generator():
    p = random_height1_poset(3, 4, 0.5, 9)
    assert p.n == 7 and p.height() <= 1
    full = random_height1_poset(2, 2, 1.1, 0)
    assert len(full.lt) == 4


def test_membership_fixtures():
    t3 = t3_gadget()
    assert brute_membership(t3, K2, sub_cap=3) is False
    assert brute_membership(t3, S3, sub_cap=3) is True
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert brute_membership(c4, K2, sub_cap=2) is False
    assert brute_membership(c4, K3, sub_cap=2) is True
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert brute_membership(p4, K2, sub_cap=2) is True
    assert brute_membership(Graph(0), K2, sub_cap=1) is True


def test_oracle_identities():
    k1 = Graph(1)
    assert brute_max_clique(k1) == {0}
    assert brute_min_domset(k1) == {0}
    assert brute_mis(k1) == {0}
    assert brute_ids(k1) == {0}
    assert brute_list_coloring(K2, {0: {1}, 1: {1}}) is None
    assert brute_chain_cover(Poset(1, [])) == 1
    p3 = Graph(3, [(0, 1), (1, 2)])
    assert brute_minimal_separators(p3) == {frozenset({1})}


def test_caps_refuse_loudly():
    big = Graph(30, [(i, i + 1) for i in range(29)])
    with pytest.raises(OracleCapError):
        brute_min_domset(big)
    with pytest.raises(OracleCapError):
        brute_minimal_separators(big)
