"""Chordality, maximal cliques, interval orders with end constraints, and
interval dominating-set primitives.

Interval recognition goes through maximal-clique consecutive arrangement on a
PQ-tree; end-constrained variants pin a clique to the front (and optionally
one to the back) of the arrangement.
"""

import heapq
from dataclasses import dataclass, field

from .errors import StructuralError
from .graphs import Graph
from .pqtree import PQTree


@dataclass
class Refutation:
    """Why a recognizer said no; `witness` depends on `reason`."""

    reason: str
    witness: object = None


@dataclass(frozen=True)
class CliqueOrder:
    """Left-to-right consecutive arrangement of maximal cliques."""

    cliques: tuple[frozenset[int], ...]

    def span(self, v: int) -> tuple[int, int]:
        """(first, last) clique index containing v."""
        idx = [i for i, c in enumerate(self.cliques) if v in c]
        return idx[0], idx[-1]

    def validate(self, g: Graph) -> None:
        first = {}
        last = {}
        for i, c in enumerate(self.cliques):
            for v in c:
                first.setdefault(v, i)
                last[v] = i
        for v in g.vertices():
            if v not in first:
                raise StructuralError(f"vertex {v} in no clique")
            count = sum(1 for c in self.cliques if v in c)
            if count != last[v] - first[v] + 1:
                raise StructuralError(f"cliques of {v} not consecutive")
        for u, v in g.edges():
            if not any(u in c and v in c for c in self.cliques):
                raise StructuralError(f"edge ({u},{v}) covered by no clique")

    def to_obj(self):
        return [sorted(c) for c in self.cliques]


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to smallest id)."""
    weight = [0] * g.n
    visited = [False] * g.n
    heap = [(0, v) for v in range(g.n)]
    heapq.heapify(heap)
    order = []
    while heap:
        w, v = heapq.heappop(heap)
        if visited[v] or -w != weight[v]:
            continue
        visited[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not visited[u]:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    return order


def _find_hole(g: Graph) -> list[int]:
    """A chordless cycle of length >= 4 in a non-chordal graph."""
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if g.has_edge(a, b):
                    continue
                # shortest a-b path avoiding N[v] minus the two ends
                banned = (set(g.adj[v]) | {v}) - {a, b}
                prev = {a: None}
                queue = [a]
                while queue:
                    nxt = []
                    for x in queue:
                        for y in g.adj[x]:
                            if y in banned or y in prev:
                                continue
                            prev[y] = x
                            nxt.append(y)
                    if b in prev:
                        break
                    queue = nxt
                if b not in prev:
                    continue
                path = [b]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                if len(path) >= 3:
                    return [v] + path[::-1]
    raise AssertionError("hole search called on a chordal graph")


def is_chordal(g: Graph):
    """Perfect elimination ordering, or a Refutation carrying a hole."""
    order = _mcs_order(g)[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if not g.has_edge(a, b):
                    return Refutation("hole", _find_hole(g))
    return order


def peo_cliques(g: Graph, peo: list[int]) -> list[frozenset[int]]:
    """Maximal cliques of a chordal graph from a perfect elimination ordering."""
    pos = {v: i for i, v in enumerate(peo)}
    candidates = []
    for v in peo:
        candidates.append(frozenset([v] + [u for u in g.adj[v] if pos[u] > pos[v]]))
    out = []
    for c in candidates:
        if not any(c < d for d in candidates):
            out.append(c)
    seen = set()
    uniq = []
    for c in out:
        if c not in seen:
            seen.add(c)
            uniq.append(c)
    return sorted(uniq, key=sorted)


@dataclass
class CliqueEnumeration:
    cliques: list[frozenset[int]]
    overflow: bool = False


def maximal_cliques(g: Graph, cutoff: int | None = None) -> CliqueEnumeration:
    """All maximal cliques, or an overflow signal once cutoff+1 are found.

    Chordal inputs take the elimination-ordering route (at most n cliques);
    otherwise Bron-Kerbosch with pivoting, stopped at the cutoff.
    """
    if g.n == 0:
        return CliqueEnumeration([])
    peo = is_chordal(g)
    if not isinstance(peo, Refutation):
        cliques = peo_cliques(g, peo)
        if cutoff is not None and len(cliques) > cutoff:
            return CliqueEnumeration(cliques[: cutoff + 1], overflow=True)
        return CliqueEnumeration(cliques)
    found = []

    def expand(r, p, x):
        if cutoff is not None and len(found) > cutoff:
            return
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(g.adj[u] & p))
        for v in sorted(p - g.adj[pivot]):
            expand(r + [v], p & g.adj[v], x & g.adj[v])
            if cutoff is not None and len(found) > cutoff:
                return
            p = p - {v}
            x = x | {v}

    expand([], set(g.vertices()), set())
    if cutoff is not None and len(found) > cutoff:
        return CliqueEnumeration(found, overflow=True)
    return CliqueEnumeration(sorted(found, key=sorted))


def _clique_tree_query(g: Graph, left=None, right=None):
    """Shared PQ-tree plumbing for the interval-order entry points."""
    peo = is_chordal(g)
    if isinstance(peo, Refutation):
        return peo
    cliques = peo_cliques(g, peo)
    if not cliques:
        return CliqueOrder(())
    if len(cliques) == 1:
        if left is not None and not left <= cliques[0]:
            return Refutation("no-arrangement", ("left", sorted(left)))
        if right is not None and not right <= cliques[0]:
            return Refutation("no-arrangement", ("right", sorted(right)))
        return CliqueOrder(tuple(cliques))
    tree = PQTree(range(len(cliques)))
    for v in g.vertices():
        member = [i for i, c in enumerate(cliques) if v in c]
        if not tree.reduce(member):
            return Refutation("no-arrangement", ("vertex", v))
    if left is None and right is None:
        order = tree.frontier()
        return CliqueOrder(tuple(cliques[i] for i in order))
    first_ok = (
        [i for i, c in enumerate(cliques) if left <= c]
        if left is not None
        else [None]
    )
    last_ok = (
        [i for i, c in enumerate(cliques) if right <= c]
        if right is not None
        else [None]
    )
    for i in first_ok:
        for j in last_ok:
            if i is not None and i == j:
                continue
            order = tree.ordering(first=i, last=j)
            if order is not None:
                return CliqueOrder(tuple(cliques[k] for k in order))
    return Refutation("no-arrangement", ("ends", left, right))


def interval_order(g: Graph):
    """CliqueOrder certifying g interval, or a Refutation."""
    out = _clique_tree_query(g)
    if isinstance(out, CliqueOrder):
        out.validate(g)
    return out


def interval_order_with_ends(g: Graph, left, right=None):
    """Arrangement whose first clique contains `left` (and last `right`).

    `left`/`right` must be cliques of g.
    """
    left = frozenset(left)
    if not g.is_clique(left):
        raise ValueError("left end-constraint is not a clique")
    if right is not None:
        right = frozenset(right)
        if not g.is_clique(right):
            raise ValueError("right end-constraint is not a clique")
    out = _clique_tree_query(g, left=left, right=right)
    if isinstance(out, CliqueOrder):
        out.validate(g)
    return out


def _interval_spans(g: Graph, order: CliqueOrder) -> dict[int, tuple[int, int]]:
    spans = {}
    for i, c in enumerate(order.cliques):
        for v in c:
            lo, _ = spans.get(v, (i, i))
            spans[v] = (lo, i)
    return spans


def _cover_greedy(g, spans, demands, chosen):
    """Min extra picks so chosen+picks dominate every demand vertex.

    Exact on interval graphs: process demands by right endpoint, always pick
    the neighbour reaching farthest right (ties to smallest id).
    """
    dominated = set()
    for d in chosen:
        dominated.add(d)
        dominated.update(g.adj[d])
    picks = []
    for v in sorted(demands, key=lambda v: (spans[v][1], v)):
        if v in dominated:
            continue
        best = max(g.adj[v] | {v}, key=lambda u: (spans[u][1], -u))
        picks.append(best)
        dominated.add(best)
        dominated.update(g.adj[best])
    return picks


def greedy_min_domset_interval(g: Graph, order: CliqueOrder) -> list[int]:
    """Minimum dominating set of an interval graph, deterministic ties."""
    order.validate(g)
    if g.n == 0:
        return []
    spans = _interval_spans(g, order)
    return sorted(_cover_greedy(g, spans, list(g.vertices()), []))


def domset_including(g: Graph, order: CliqueOrder, x: int, y: int | None = None):
    """Dominating set minimum subject to containing x (and y).

    x must lie in the first clique; y, if given, in the last clique, and the
    arrangement must have at least two cliques.  Realized by appending two
    pendant twins at each forced vertex and running the plain greedy.
    """
    order.validate(g)
    if x not in order.cliques[0]:
        raise ValueError("x must lie in the first clique")
    if y is not None:
        if len(order.cliques) < 2:
            raise ValueError("second forced vertex needs at least two cliques")
        if y not in order.cliques[-1]:
            raise ValueError("y must lie in the last clique")
    n = g.n
    extra_edges = [(n, x), (n + 1, x)]
    extra_n = 2
    new_cliques = [frozenset({n, x}), frozenset({n + 1, x})] + list(order.cliques)
    if y is not None:
        w, w2 = n + 2, n + 3
        extra_edges += [(w, y), (w2, y)]
        extra_n = 4
        new_cliques += [frozenset({w, y}), frozenset({w2, y})]
    gadget = Graph(n + extra_n, list(g.edges()) + extra_edges)
    gadget_order = CliqueOrder(tuple(new_cliques))
    gadget_order.validate(gadget)
    sol = greedy_min_domset_interval(gadget, gadget_order)
    assert all(v < n for v in sol), "gadget vertices must never be chosen"
    assert x in sol and (y is None or y in sol)
    return sorted(sol)
