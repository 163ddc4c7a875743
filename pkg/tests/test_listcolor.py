import itertools

import pytest

from hgraphs.graphs import Graph
from hgraphs.intervals import Refutation
from hgraphs.listcolor import (
    ThinStructure,
    build_layered_digraph,
    solve_list_coloring,
    solve_list_coloring_cocomparability,
    thin_structure_from_coloring,
)
from hgraphs.oracles import brute_list_coloring
from hgraphs.rng import SplitMix64


def random_cocomparability(rng, n, percent):
    order = list(range(n))
    rng.shuffle(order)
    lt = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.randrange(100) < percent:
                lt.add((order[i], order[j]))
    changed = True
    while changed:
        changed = False
        for a, b in list(lt):
            for b2, c in list(lt):
                if b2 == b and (a, c) not in lt:
                    lt.add((a, c))
                    changed = True
    comp = Graph(n, [(min(a, b), max(a, b)) for a, b in lt])
    return comp.complement()


def test_thin_structure_examples():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    co_p4 = p4.complement()
    ts = thin_structure_from_coloring(co_p4)
    assert len(ts.classes) <= 2
    k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    ts = thin_structure_from_coloring(k4)
    assert len(ts.classes) == 4
    empty = Graph(4, [])
    ts = thin_structure_from_coloring(empty)
    assert len(ts.classes) == 1


def test_digraph_tiny_examples():
    single = Graph(1, [])
    ts = thin_structure_from_coloring(single)
    digraph = build_layered_digraph(single, ts, {0: {1, 2}})
    # the single non-source layer is the target with one arc per color
    assert len(digraph.nodes[digraph.target]) == 2
    k2 = Graph(2, [(0, 1)])
    ts = thin_structure_from_coloring(k2)
    assert solve_list_coloring(k2, ts, {0: {1}, 1: {1}}) is None


def test_feasibility_examples():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    out = solve_list_coloring_cocomparability(c4, {v: {1, 2} for v in range(4)})
    assert out is not None
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert solve_list_coloring_cocomparability(k3, {v: {1, 2} for v in range(3)}) is None
    empty = Graph(3, [])
    out = solve_list_coloring_cocomparability(empty, {v: {v % 2 + 1} for v in range(3)})
    assert out == {0: 1, 1: 2, 2: 1}


def test_transition_formula_against_independent_coding():
    # second, case-by-case coding of the arc-source counters
    def reference(beta, i_star, j_r, lower_count, s, k):
        out = [[None] * k for _ in range(s)]
        for i in range(s):
            for j in range(k):
                if i == i_star:
                    out[i][j] = max(lower_count[j], beta[i][j])
                else:
                    if j == j_r:
                        out[i][j] = beta[i][j] - 1 if beta[i][j] > 0 else 0
                    else:
                        out[i][j] = beta[i][j]
        return tuple(tuple(row) for row in out)

    from hgraphs.listcolor import _predecessor

    s, k = 2, 2
    deltas = (2, 1)
    lowers = [(0, 0), (1, 1), (2, 0), (2, 1)]
    for beta in itertools.product(
        *[range(deltas[j] + 1) for j in range(k) for _ in range(s)]
    ):
        matrix = tuple(
            tuple(beta[i * k + j] for j in range(k)) for i in range(s)
        )
        ok = all(matrix[i][j] <= deltas[j] for i in range(s) for j in range(k))
        if not ok:
            continue
        for i_star in range(s):
            for j_r in range(k):
                for lower in lowers:
                    assert _predecessor(matrix, i_star, j_r, lower, s, k) == (
                        reference(matrix, i_star, j_r, lower, s, k)
                    )


def test_layer_size_formula_and_indegree():
    rng = SplitMix64(5)
    g = random_cocomparability(rng, 6, 40)
    ts = thin_structure_from_coloring(g)
    lists = {v: {1, 2} for v in g.vertices()}
    digraph = build_layered_digraph(g, ts, lists)
    s = 2
    expected = 1
    for j in range(len(ts.classes)):
        expected *= (ts.delta_less[j] + 1) ** s
    assert digraph.layer_size_formula == expected
    for key, arcs in digraph.nodes.items():
        assert len(arcs) <= s
        r, beta = key
        for i in range(s):
            for j in range(len(ts.classes)):
                assert 0 <= beta[i][j] <= ts.delta_less[j]


def test_against_brute_force_and_lexicographic():
    rng = SplitMix64(4242)
    done = 0
    while done < 200:
        n = 1 + rng.randrange(9)
        g = random_cocomparability(rng, n, 20 + 20 * rng.randrange(3))
        s = 1 + rng.randrange(3)
        lists = {
            v: set(rng.sample(range(1, s + 1), 1 + rng.randrange(s)))
            for v in g.vertices()
        }
        union = sorted(set().union(*lists.values()))
        remap = {c: i + 1 for i, c in enumerate(union)}
        lists = {v: {remap[c] for c in cs} for v, cs in lists.items()}
        got = solve_list_coloring_cocomparability(g, lists)
        assert not isinstance(got, Refutation)
        want = brute_list_coloring(g, lists)
        assert (got is None) == (want is None), (g.edges(), lists)
        if got is not None and n <= 7:
            ts = thin_structure_from_coloring(g)
            best = None
            for combo in itertools.product(*[sorted(lists[v]) for v in ts.order]):
                cand = dict(zip(ts.order, combo))
                if all(cand[u] != cand[v] for u, v in g.edges()):
                    best = combo
                    break
            assert tuple(got[v] for v in ts.order) == best
        done += 1


def test_consistency_is_verified():
    # 0 and 1 share a class, 2 sees 0 but not 1: inconsistent
    bad = ThinStructure(order=(0, 1, 2), classes=((0, 1), (2,)), delta_less=(1, 1))
    with pytest.raises(AssertionError):
        bad.verify_consistent(Graph(3, [(0, 2)]))
