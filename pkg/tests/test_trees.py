import pytest

from hgraphs.graphs import Graph, verify_representation
from hgraphs.intervals import Refutation
from hgraphs.constructions import t3_gadget
from hgraphs.oracles import brute_membership, random_subtree_rep
from hgraphs.rng import SplitMix64
from hgraphs.stars import star_pattern
from hgraphs.trees import (
    ReducedInstance,
    TreeRefutation,
    build_restricted_stars,
    middle_components,
    preprocess,
    recognize_tree,
    smooth_tree,
)

S3 = star_pattern(3)
DOUBLE_STAR = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
PATH2 = Graph(2, [(0, 1)])
# caterpillar with three branch points, for assignment-validity fixtures
CATERPILLAR = Graph(9, [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (1, 6),
                        (2, 7), (2, 8)])


def test_smoothing():
    sub = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert smooth_tree(sub).n == 2
    assert smooth_tree(DOUBLE_STAR) == DOUBLE_STAR


def test_preprocess_identity_and_split():
    # connected graph, injective assignment: one hub per branch point
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)])
    cliques = [frozenset({0, 1, 2}), frozenset({1, 2, 3})]
    out = preprocess(g, DOUBLE_STAR, {0: cliques[0], 1: cliques[1]})
    assert isinstance(out, ReducedInstance)
    assert len(out.hubs) == 2
    # two components on a path host: two parts
    g2 = Graph(4, [(0, 1), (2, 3)])
    out = preprocess(g2, PATH2, {})
    assert isinstance(out, ReducedInstance) and len(out.parts) == 2


def test_preprocess_rejects_broken_assignments():
    g = Graph(3, [(0, 1), (1, 2)])
    a, b = frozenset({0, 1}), frozenset({1, 2})
    # same clique on branch points 0 and 2 of the caterpillar, different in
    # between: the connecting region hits a foreign branch point
    out = preprocess(g, CATERPILLAR, {0: a, 1: b, 2: a})
    assert isinstance(out, Refutation) and out.reason == "hub-region-conflict"


def test_middle_components_fixture():
    # two hub cliques with a private pull on each side force the component
    # between them
    edges = [(0, 1), (0, 2), (1, 2),       # hub clique A = {0,1,2}
             (3, 4),                       # hub clique B = {3,4}
             (5, 0), (5, 1), (5, 3),       # forced middle {5}
             (6, 0)]                       # free component {6}
    g = Graph(7, edges)
    f = {0: frozenset({0, 1, 2}), 1: frozenset({3, 4})}
    out = middle_components(g, DOUBLE_STAR, f)
    assert not isinstance(out, Refutation)
    reduced, forced = out
    middle_edge = next(
        k for k, (x, y) in enumerate(DOUBLE_STAR.edges())
        if {x, y} == {0, 1}
    )
    assert forced == {middle_edge: [frozenset({5})]}
    # a component pulled only inside the shared part is not forced
    edges2 = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (5, 2)]
    g2 = Graph(6, edges2)
    f2 = {0: frozenset({0, 1, 2}), 1: frozenset({2, 3, 4})}
    out2 = middle_components(g2, DOUBLE_STAR, f2)
    assert not isinstance(out2, Refutation)
    assert out2[1] == {}


def test_restricted_stars_fixture():
    edges = [(0, 1), (0, 2), (1, 2),
             (3, 4),
             (5, 0), (5, 1), (5, 3),
             (6, 0), (6, 1)]
    g = Graph(7, edges)
    f = {0: frozenset({0, 1, 2}), 1: frozenset({3, 4})}
    out = build_restricted_stars(g, DOUBLE_STAR, f)
    assert not isinstance(out, Refutation)
    cut = [s for s in out.segments if not s.toward_leaf and s.hub == 0]
    assert len(cut) == 1
    # restriction on the hub-A side names the middle's neighbours {0,1}
    assert cut[0].restriction == frozenset({0, 1})
    free_class = next(
        i for i, cls in enumerate(out.classes) if cls[0] == frozenset({6})
    )
    # {6} sees the whole restriction, so every segment of hub A admits it
    hub_a_segments = {i + 1 for i, s in enumerate(out.segments) if s.hub == 0}
    assert hub_a_segments <= out.lists[free_class]


def test_recognize_tree_fixtures():
    t3 = t3_gadget()
    assert not isinstance(recognize_tree(t3, S3), TreeRefutation)
    assert isinstance(recognize_tree(t3, PATH2), TreeRefutation)
    # intervals on the path host
    p5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    rep = recognize_tree(p5, PATH2)
    assert verify_representation(p5, rep).valid
    # the recognizer accepts through a subdivided input tree too
    sub_s3 = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert not isinstance(recognize_tree(t3, sub_s3), TreeRefutation)
    with pytest.raises(ValueError):
        recognize_tree(t3, Graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_refutation_counts_stages():
    out = recognize_tree(t3_gadget(), PATH2)
    assert out.reason in ("not-interval", "no-assignment")
    # four length-2 legs cannot pack into three branches
    spider4 = Graph(9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6),
                        (0, 7), (7, 8)])
    out = recognize_tree(spider4, S3)
    assert isinstance(out, TreeRefutation)
    assert sum(out.stage_counts.values()) > 0
    assert brute_membership(spider4, S3, sub_cap=3) is False


def test_agreement_with_membership_oracle():
    rng = SplitMix64(77)
    for _ in range(250):
        n = 1 + rng.randrange(6)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                      if rng.randrange(100) < 25 + 20 * rng.randrange(3)])
        for tree in (S3, DOUBLE_STAR):
            mine = recognize_tree(g, tree)
            accepted = not isinstance(mine, TreeRefutation)
            if accepted:
                assert verify_representation(g, mine).valid
            assert accepted == brute_membership(g, tree, sub_cap=3), (
                g.edges(), tree.edges(),
            )


def test_generator_instances_accepted():
    for seed in range(120):
        n = 4 + seed % 17
        g, _ = random_subtree_rep(DOUBLE_STAR, n, seed)
        rep = recognize_tree(g, DOUBLE_STAR)
        assert not isinstance(rep, TreeRefutation)
        assert verify_representation(g, rep).valid
