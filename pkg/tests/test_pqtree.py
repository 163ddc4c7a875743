import itertools

from hgraphs.pqtree import PQTree
from hgraphs.rng import SplitMix64


def brute_orders(universe, constraints):
    out = []
    for perm in itertools.permutations(universe):
        pos = {x: i for i, x in enumerate(perm)}
        ok = True
        for s in constraints:
            ps = sorted(pos[x] for x in s)
            if ps[-1] - ps[0] != len(s) - 1:
                ok = False
                break
        if ok:
            out.append(perm)
    return out


def test_against_brute_force_with_pins():
    rng = SplitMix64(7)
    for trial in range(800):
        n = 1 + rng.randrange(6)
        universe = list(range(n))
        constraints = [
            frozenset(rng.sample(universe, 1 + rng.randrange(n)))
            for _ in range(rng.randrange(5))
        ]
        valid = brute_orders(universe, constraints)
        tree = PQTree(universe)
        ok = all(tree.reduce(s) for s in constraints)
        assert ok == bool(valid), (n, constraints)
        if not ok:
            continue
        valid_set = set(valid)
        assert tuple(tree.frontier()) in valid_set
        for first in universe:
            got = tree.ordering(first=first)
            expect = any(p[0] == first for p in valid)
            assert (got is not None) == expect
            if got is not None:
                assert tuple(got) in valid_set and got[0] == first
        for first in universe:
            for last in universe:
                got = tree.ordering(first=first, last=last)
                if first == last and n > 1:
                    assert got is None
                    continue
                expect = any(p[0] == first and p[-1] == last for p in valid)
                assert (got is not None) == expect
                if got is not None:
                    assert tuple(got) in valid_set


def test_degenerate_trees():
    empty = PQTree([])
    assert empty.frontier() == []
    single = PQTree([5])
    assert single.reduce({5})
    assert single.ordering(first=5, last=5) == [5]
