import pytest

from hgraphs import serialize
from hgraphs.errors import StructuralError
from hgraphs.graphs import (
    Graph,
    HostModel,
    Representation,
    canonical_subdivision,
    connected_components,
    contract_interiors,
    resubdivide_representation,
    subdivide_edges,
    verify_representation,
)
from hgraphs.oracles import random_subtree_rep
from hgraphs.stars import star_pattern


def test_graph_rejects_malformed():
    with pytest.raises(StructuralError):
        Graph(2, [(0, 0)])
    with pytest.raises(StructuralError):
        Graph(2, [(0, 3)])
    g = Graph(3, [(0, 1), (1, 0)])  # parallel collapses
    assert g.m == 1


def test_connected_components():
    assert connected_components(Graph(0)) == []
    p3 = Graph(3, [(0, 1), (1, 2)])
    assert [len(c) for c in connected_components(p3)] == [3]
    both = Graph(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    assert sorted(len(c) for c in connected_components(both)) == [2, 3]


def test_canonical_subdivision_sizes():
    k2 = Graph(2, [(0, 1)])
    assert canonical_subdivision(k2, 1).subdivision.n == 4
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_subdivision(k3, 2).subdivision.n == 15
    diamond = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert canonical_subdivision(diamond, 3).subdivision.n == 34


def test_contract_recovers_pattern():
    diamond = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    model = canonical_subdivision(diamond, 2)
    assert contract_interiors(model) == diamond


def test_verify_examples():
    k2 = Graph(2, [(0, 1)])
    host = subdivide_edges(k2, [0])
    rep = Representation(host, (frozenset({0}), frozenset({0, 1})))
    assert verify_representation(k2, rep).valid
    # two isolated vertices sharing a node: the missing edge is flagged
    iso = Graph(2, [])
    rep2 = Representation(host, (frozenset({0}), frozenset({0})))
    report = verify_representation(iso, rep2)
    assert not report.valid
    assert ("extra-intersection", 0, 1) in report.violations
    with pytest.raises(StructuralError):
        verify_representation(Graph(3, []), rep2)


def test_verify_flags_disconnected_and_empty():
    k2 = Graph(2, [(0, 1)])
    host = subdivide_edges(k2, [2])
    rep = Representation(host, (frozenset({0, 1}), frozenset()))
    report = verify_representation(k2, rep)
    kinds = {v[0] for v in report.violations}
    assert "empty" in kinds
    rep3 = Representation(host, (frozenset({0, 1}), frozenset({0, 1})))
    bad = Representation(host, (frozenset({0, 3}), frozenset({1})))
    report = verify_representation(k2, bad)
    assert ("disconnected", 0) in report.violations


def test_generator_reps_always_verify():
    s3 = star_pattern(3)
    for seed in range(1000):
        g, rep = random_subtree_rep(s3, 5 + seed % 8, seed)
        assert verify_representation(g, rep).valid


def test_resubdivision_preserves_graph():
    s3 = star_pattern(3)
    for seed in range(50):
        g, rep = random_subtree_rep(s3, 6, seed)
        finer = resubdivide_representation(rep, 3)
        assert finer.host.subdivision.n > rep.host.subdivision.n
        assert verify_representation(g, finer).valid


def test_json_round_trips_bit_exact():
    s3 = star_pattern(3)
    g, rep = random_subtree_rep(s3, 7, 99)
    for dump, load, obj in (
        (serialize.graph_to_json, serialize.graph_from_json, g),
        (serialize.host_to_json, serialize.host_from_json, rep.host),
        (
            serialize.representation_to_json,
            serialize.representation_from_json,
            rep,
        ),
    ):
        text = dump(obj)
        assert dump(load(text)) == text


def test_dimacs_import():
    text = "c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"
    g = serialize.graph_from_dimacs(text)
    assert g.n == 4 and g.m == 3 and g.has_edge(0, 1)
    with pytest.raises(StructuralError):
        serialize.graph_from_dimacs("e 1 2\n")
