"""Strict partial orders: incomparability graphs, transitive orientation by
forcing, Dilworth chain covers via bipartite matching, and an exact
interval-dimension solver for height-1 posets.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .errors import StructuralError
from .graphs import Graph
from .intervals import Refutation


class Poset:
    """Strict order on dense ids 0..n-1; `lt` holds all (a, b) with a < b."""

    __slots__ = ("n", "lt", "below", "above")

    def __init__(self, n: int, lt):
        self.n = n
        self.lt = frozenset((int(a), int(b)) for a, b in lt)
        for a, b in self.lt:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise StructuralError(f"bad relation ({a},{b})")
            if (b, a) in self.lt:
                raise StructuralError(f"antisymmetry violated on ({a},{b})")
        for a, b in self.lt:
            for c in range(n):
                if (b, c) in self.lt and (a, c) not in self.lt:
                    raise StructuralError(f"transitivity fails: {a}<{b}<{c}")
        self.below = tuple(
            frozenset(a for a in range(n) if (a, b) in self.lt) for b in range(n)
        )
        self.above = tuple(
            frozenset(b for b in range(n) if (a, b) in self.lt) for a in range(n)
        )

    @classmethod
    def from_cover(cls, n: int, cover_pairs) -> "Poset":
        """Build from any relation pairs, taking the transitive closure."""
        lt = {(a, b) for a, b in cover_pairs}
        changed = True
        while changed:
            changed = False
            for a, b in list(lt):
                for b2, c in list(lt):
                    if b2 == b and (a, c) not in lt:
                        lt.add((a, c))
                        changed = True
        return cls(n, lt)

    def height(self) -> int:
        """Longest chain length minus one."""
        memo = {}

        def depth(v):
            if v not in memo:
                memo[v] = 1 + max((depth(u) for u in self.below[v]), default=0)
            return memo[v]

        return max((depth(v) for v in range(self.n)), default=1) - 1

    def minimals(self):
        return [v for v in range(self.n) if not self.below[v]]

    def maximals(self):
        """Elements with something below; isolated elements count as minimal."""
        return [v for v in range(self.n) if self.below[v]]

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.lt or (b, a) in self.lt

    def to_obj(self):
        return {"n": self.n, "lt": sorted([a, b] for a, b in self.lt)}


def incomparability_graph(p: Poset) -> Graph:
    """Edge for every incomparable pair."""
    return Graph(
        p.n,
        [
            (a, b)
            for a in range(p.n)
            for b in range(a + 1, p.n)
            if not p.comparable(a, b)
        ],
    )


def transitive_orientation(g: Graph):
    """Acyclic transitively-closed orientation, or a Refutation.

    Forcing rule: a->b forces a->c for c in N(a)\\N[b] and c->b for
    c in N(b)\\N[a]; a contradiction refutes, and the final orientation is
    checked for transitivity before being returned.
    """
    orient = {}

    def push(a, b):
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if (x, y) in orient:
                continue
            if (y, x) in orient:
                return (x, y)
            orient[(x, y)] = True
            for c in g.adj[x]:
                if c != y and c not in g.adj[y] and (x, c) not in orient:
                    queue.append((x, c))
            for c in g.adj[y]:
                if c != x and c not in g.adj[x] and (c, y) not in orient:
                    queue.append((c, y))
        return None

    for u, v in g.edges():
        if (u, v) in orient or (v, u) in orient:
            continue
        clash = push(u, v)
        if clash is not None:
            return Refutation("forcing-contradiction", clash)
    for a, b in list(orient):
        for c in g.adj[b]:
            if (b, c) in orient and (a, c) not in orient:
                return Refutation("not-transitive", (a, b, c))
    # acyclicity comes with transitivity + irreflexivity on finite graphs
    return orient


def comparability_ordering(g: Graph):
    """Topological order of a transitive orientation of g, or Refutation."""
    orient = transitive_orientation(g)
    if isinstance(orient, Refutation):
        return orient
    indeg = [0] * g.n
    for _, b in orient:
        indeg[b] += 1
    heap = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for u in g.adj[v]:
            if (v, u) in orient:
                indeg[u] -= 1
                if indeg[u] == 0:
                    heapq.heappush(heap, u)
    assert len(order) == g.n
    return order


def min_chain_cover(p: Poset) -> list[list[int]]:
    """Partition into the fewest chains (= max antichain, by Dilworth).

    Kuhn matching on the split bipartite graph of the order relation.
    """
    match_right = {}
    match_left = {}

    def augment(a, seen):
        for b in sorted(p.above[a]):
            if b in seen:
                continue
            seen.add(b)
            if b not in match_right or augment(match_right[b], seen):
                match_right[b] = a
                match_left[a] = b
                return True
        return False

    for a in range(p.n):
        augment(a, set())
    starts = [v for v in range(p.n) if v not in match_right]
    chains = []
    for s in sorted(starts):
        chain = [s]
        while chain[-1] in match_left:
            chain.append(match_left[chain[-1]])
        chains.append(chain)
    assert sum(len(c) for c in chains) == p.n
    return chains


@dataclass(frozen=True)
class IntervalOrderSpec:
    """Closed intervals indexed by element; x < y iff right(x) < left(y)."""

    endpoints: tuple[tuple[Fraction, Fraction], ...]

    def order_pairs(self) -> frozenset[tuple[int, int]]:
        n = len(self.endpoints)
        return frozenset(
            (a, b)
            for a in range(n)
            for b in range(n)
            if a != b and self.endpoints[a][1] < self.endpoints[b][0]
        )

    def to_obj(self):
        return [[str(l), str(r)] for l, r in self.endpoints]


def _nested_families(minimals, maximals, p: Poset):
    """All maps maximal -> predecessor superset forming an inclusion chain.

    Each such family is one bipartite interval order containing p: the
    distinct predecessor sets of an interval order are totally ordered by
    inclusion (no 2+2), and conversely.
    """
    min_list = sorted(minimals)
    forced = {y: frozenset(p.below[y]) for y in maximals}
    # depth-first over maximals: each picks a superset of its forced set such
    # that all picks stay pairwise comparable
    subsets = []
    for mask in range(1 << len(min_list)):
        s = frozenset(min_list[i] for i in range(len(min_list)) if mask >> i & 1)
        subsets.append(s)

    def chain_compatible(lower, chosen):
        for s in subsets:
            if lower <= s and all(s <= t or t <= s for t in chosen):
                yield s

    results = []

    def dfs(i, assignment, chosen):
        if i == len(maximals):
            results.append(dict(assignment))
            return
        y = maximals[i]
        for cand in chain_compatible(forced[y], chosen):
            assignment[y] = cand
            chosen.append(cand)
            dfs(i + 1, assignment, chosen)
            chosen.pop()

    dfs(0, {}, [])
    return results


def _family_to_spec(p: Poset, family, minimals, maximals) -> IntervalOrderSpec:
    """Integer endpoints: minimals get [0, r], maximals [l, n]."""
    n = p.n
    levels = sorted({family[y] for y in maximals}, key=lambda s: (len(s), sorted(s)))
    level_of = {s: i for i, s in enumerate(levels)}
    endpoints = [None] * n
    for x in minimals:
        # levels form an inclusion chain, so "levels missing x" is a prefix
        r = sum(1 for s in levels if x not in s)
        endpoints[x] = (Fraction(0), Fraction(r))
    for y in maximals:
        l = level_of[family[y]] + 1
        endpoints[y] = (Fraction(l), Fraction(max(n, 1)))
    return IntervalOrderSpec(tuple(endpoints))


def interval_dimension_height1(p: Poset, k: int):
    """Realizer of at most k bipartite interval orders, or a Refutation.

    Exact for k <= 3 at desk scale.  A height-1 realizer may be normalized so
    each order only relates minimals to maximals; such orders are exactly the
    nested predecessor-set families, which are enumerated outright.
    """
    if p.height() > 1:
        raise ValueError("poset must have height at most 1")
    if k < 1 or k > 3:
        raise ValueError("only k in 1..3 supported")
    minimals = sorted(set(range(p.n)) - {y for y in range(p.n) if p.below[y]})
    maximals = sorted(y for y in range(p.n) if p.below[y])
    if len(minimals) > 8 or len(maximals) > 8:
        raise ValueError("desk-scale solver: at most 8 minimals/maximals")
    q_all = {
        (x, y)
        for x in minimals
        for y in maximals
        if (x, y) not in p.lt
    }
    families = _nested_families(minimals, maximals, p)
    # extras(J) = pairs in J beyond p; keep inclusion-minimal extras only
    extras = {}
    for fam in families:
        e = frozenset(
            (x, y) for y in maximals for x in fam[y] if (x, y) not in p.lt
        )
        if e not in extras:
            extras[e] = fam
    keys = sorted(extras, key=lambda e: (len(e), sorted(e)))
    minimal_keys = [
        e for e in keys if not any(e2 < e for e2 in keys)
    ]

    def search(chosen, remaining_pairs, depth):
        if not remaining_pairs:
            return list(chosen)
        if depth == 0:
            return None
        for e in minimal_keys:
            if depth == 1 and (e & remaining_pairs):
                continue
            out = search(chosen + [e], remaining_pairs & e, depth - 1)
            if out is not None:
                return out
        return None

    picked = search([], frozenset(q_all), k)
    if picked is None:
        return Refutation("dimension-exceeds", k)
    if not picked:
        # p is already an interval order: its own family has no extras
        assert frozenset() in extras
        picked = [frozenset()]
    while len(picked) < k:
        picked.append(picked[-1])
    specs = []
    for e in picked:
        fam = extras[e]
        spec = _family_to_spec(p, fam, minimals, maximals)
        assert spec.order_pairs() == frozenset(p.lt) | e
        specs.append(spec)
    inter = specs[0].order_pairs()
    for s in specs[1:]:
        inter &= s.order_pairs()
    assert inter == frozenset(p.lt)
    return specs
