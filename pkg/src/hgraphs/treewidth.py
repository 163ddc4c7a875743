"""Tree decompositions, exact desk-scale treewidth, and the FPT routines for
k-clique and list-k-coloring over treewidth-bounded classes.

Exact treewidth: chordal shortcut, simplicial reductions, degeneracy lower
bound, min-fill upper bound, then branch and bound over elimination orders
with subset memoization.  The decomposition contract is: a verified
decomposition of width at most 5*target, or a correct "treewidth exceeds
target" refusal.
"""

import itertools
from dataclasses import dataclass

from .errors import OracleCapError, PromiseViolation
from .graphs import Graph, is_connected_subset
from .intervals import Refutation, is_chordal, peo_cliques
from .oracles import brute_max_clique


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph
    bags: tuple[frozenset[int], ...]
    width: int

    def validate(self, g: Graph) -> None:
        assert self.tree.n == len(self.bags)
        assert self.tree.m == self.tree.n - 1 and (
            self.tree.n <= 1 or is_connected_subset(self.tree, range(self.tree.n))
        ), "decomposition graph must be a tree"
        assert self.width == max((len(b) for b in self.bags), default=0) - 1
        for v in g.vertices():
            holding = [i for i, b in enumerate(self.bags) if v in b]
            assert holding, f"vertex {v} in no bag"
            assert is_connected_subset(self.tree, holding), f"bags of {v} scattered"
        for u, v in g.edges():
            assert any(u in b and v in b for b in self.bags), f"edge ({u},{v}) uncovered"


@dataclass
class TwRefusal:
    target: int
    lower_bound: int


def _degeneracy(g: Graph) -> int:
    deg = {v: g.degree(v) for v in g.vertices()}
    alive = set(g.vertices())
    out = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        out = max(out, deg[v])
        alive.discard(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
    return out


def _min_fill_order(adj: dict) -> list[int]:
    adj = {v: set(s) for v, s in adj.items()}
    order = []
    while adj:
        best = None
        for v in sorted(adj):
            nb = adj[v]
            fill = sum(
                1
                for a, b in itertools.combinations(sorted(nb), 2)
                if b not in adj[a]
            )
            if best is None or (fill, len(nb), v) < best[0]:
                best = ((fill, len(nb), v), v)
        v = best[1]
        nb = sorted(adj[v])
        for a, b in itertools.combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        for a in nb:
            adj[a].discard(v)
        del adj[v]
        order.append(v)
    return order


def _order_width(g: Graph, order: list[int]) -> int:
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    width = -1
    for v in order:
        nb = sorted(adj[v])
        width = max(width, len(nb))
        for a, b in itertools.combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        for a in nb:
            adj[a].discard(v)
        del adj[v]
    return width


def exact_treewidth(g: Graph, hard_cap: int = 32):
    """(treewidth, elimination order); exact, with a hard size cap."""
    if g.n == 0:
        return -1, []
    if g.n > hard_cap:
        raise OracleCapError(f"exact treewidth capped at n={hard_cap}")
    peo = is_chordal(g)
    if not isinstance(peo, Refutation):
        width = max(len(c) for c in peo_cliques(g, peo)) - 1
        return width, peo
    # simplicial eliminations are always safe
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    prefix = []
    floor = 0
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            nb = adj[v]
            if all(b in adj[a] for a in nb for b in nb if a < b):
                floor = max(floor, len(nb))
                for a in nb:
                    adj[a].discard(v)
                del adj[v]
                prefix.append(v)
                changed = True
                break
    rest = sorted(adj)
    if not rest:
        return floor, prefix
    sub_edges = [(u, v) for u in rest for v in adj[u] if u < v]
    index = {v: i for i, v in enumerate(rest)}
    core = Graph(len(rest), [(index[u], index[v]) for u, v in sub_edges])
    lower = max(floor, _degeneracy(core))
    mf = _min_fill_order({v: set(core.adj[v]) for v in core.vertices()})
    upper = max(floor, _order_width(core, mf))
    best_order = mf
    if lower < upper:
        upper, best_order = _branch_bound_width(core, lower, upper, mf)
        upper = max(upper, floor)
    return upper, prefix + [rest[v] for v in best_order]


def _branch_bound_width(core: Graph, lower: int, upper: int, warm: list[int]):
    n = core.n
    adjm = [0] * n
    for v in range(n):
        for u in core.adj[v]:
            adjm[v] |= 1 << u
    full = (1 << n) - 1
    best = upper
    best_order = list(warm)
    memo: dict[int, int] = {}

    def reach_degree(eliminated: int, v: int) -> int:
        seen = 1 << v
        frontier = adjm[v]
        out = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            u = low.bit_length() - 1
            if seen >> u & 1:
                continue
            seen |= low
            if eliminated >> u & 1:
                frontier |= adjm[u] & ~seen
            else:
                out += 1
        return out

    def dfs(eliminated: int, cur: int, order: list[int]):
        nonlocal best, best_order
        if cur >= best:
            return
        remaining = full & ~eliminated
        cnt = remaining.bit_count()
        if cnt <= cur + 1:
            # any completion keeps the width
            tail = [v for v in range(n) if remaining >> v & 1]
            if cur < best:
                best = cur
                best_order = order + tail
            return
        prev = memo.get(eliminated)
        if prev is not None and prev <= cur:
            return
        memo[eliminated] = cur
        cands = sorted(
            (reach_degree(eliminated, v), v)
            for v in range(n)
            if remaining >> v & 1
        )
        for q, v in cands:
            new_cur = max(cur, q)
            if new_cur >= best:
                continue
            dfs(eliminated | (1 << v), new_cur, order + [v])

    dfs(0, lower, [])
    return best, best_order


def decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Standard bags-from-elimination construction, then validated."""
    if g.n == 0:
        return TreeDecomposition(Graph(1), (frozenset(),), -1)
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    bags = []
    stamps = []
    for v in order:
        nb = sorted(adj[v])
        bags.append(frozenset([v] + nb))
        stamps.append(v)
        for a, b in itertools.combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        for a in nb:
            adj[a].discard(v)
        del adj[v]
    pos = {v: i for i, v in enumerate(order)}
    edges = []
    roots = []
    for i, bag in enumerate(bags):
        later = [u for u in bag if u != stamps[i]]
        if later:
            j = pos[min(later, key=lambda u: pos[u])]
            edges.append((i, j))
        else:
            roots.append(i)
    # disconnected graphs produce one root per component: chain them so the
    # decomposition is a single tree
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    td = TreeDecomposition(
        Graph(len(bags), edges),
        tuple(bags),
        max((len(b) for b in bags), default=0) - 1,
    )
    td.validate(g)
    return td


def tree_decomposition(g: Graph, target: int):
    """Decomposition of width <= 5*target, or a correct refusal (tw > target).

    Exact (width <= target or refusal) up to n = 25; heuristic with a
    verified output beyond that, escalating to exact only when neither the
    heuristic nor the lower bound answers.
    """
    if g.n <= 25:
        width, order = exact_treewidth(g)
        if width <= target:
            return decomposition_from_order(g, order)
        return TwRefusal(target=target, lower_bound=width)
    mf = _min_fill_order({v: set(g.adj[v]) for v in g.vertices()})
    width = _order_width(g, mf)
    if width <= 5 * target:
        return decomposition_from_order(g, mf)
    if _degeneracy(g) > target:
        return TwRefusal(target=target, lower_bound=_degeneracy(g))
    width, order = exact_treewidth(g)  # may raise OracleCapError
    if width <= target:
        return decomposition_from_order(g, order)
    return TwRefusal(target=target, lower_bound=width)


def width_fn_for_pattern(h: Graph):
    """Default width function: (tw(pattern)+1) * k - 1."""
    tw_h, _ = exact_treewidth(h)
    return lambda k: (tw_h + 1) * k - 1


def k_clique_fpt(g: Graph, k: int, width_fn):
    """A k-clique, or None, for graphs promised treewidth-bounded by width_fn.

    A refused decomposition means the promise puts a k-clique somewhere; the
    refusal branch finds it by direct search and reports a promise violation
    if none exists.
    """
    if k <= 0:
        return []
    t = width_fn(k)
    td = tree_decomposition(g, t)
    if isinstance(td, TwRefusal):
        clique = sorted(brute_max_clique(g))
        if len(clique) >= k:
            return clique[:k]
        raise PromiseViolation(
            f"width exceeds {t} but no {k}-clique found: promise violated"
        )
    for bag in sorted(td.bags, key=sorted):
        if len(bag) < k:
            continue
        for combo in itertools.combinations(sorted(bag), k):
            if g.is_clique(combo):
                return list(combo)
    return None


def list_k_coloring_fpt(g: Graph, lists: dict, k: int, width_fn):
    """Proper list coloring with lists inside 1..k, or None.

    A clique of size k+1 rejects immediately; otherwise dynamic programming
    over a tree decomposition of width at most 5*width_fn(k).
    """
    if g.n == 0:
        return {}
    if any(not (set(lists[v]) <= set(range(1, k + 1))) for v in g.vertices()):
        raise ValueError("lists must be subsets of 1..k")
    t = width_fn(k)
    td = tree_decomposition(g, t)
    if isinstance(td, TwRefusal):
        clique = sorted(brute_max_clique(g))
        if len(clique) >= k + 1:
            return None
        raise PromiseViolation(
            f"width exceeds {t} with no ({k + 1})-clique: promise violated"
        )
    # bottom-up table per bag: feasible list colorings consistent with children
    order = []
    seen = {0}
    stack = [(0, None)]
    children = {i: [] for i in range(td.tree.n)}
    while stack:
        node, parent = stack.pop()
        order.append((node, parent))
        for w in td.tree.adj[node]:
            if w not in seen:
                seen.add(w)
                children[node].append(w)
                stack.append((w, node))
    tables = {}
    picks = {}

    def bag_colorings(bag):
        bag = sorted(bag)
        for combo in itertools.product(*[sorted(lists[v]) for v in bag]):
            phi = dict(zip(bag, combo))
            if all(
                phi[u] != phi[w]
                for u, w in itertools.combinations(bag, 2)
                if g.has_edge(u, w)
            ):
                yield phi

    for node, _ in reversed(order):
        bag = td.bags[node]
        table = []
        pick = []
        for phi in bag_colorings(bag):
            chosen = []
            ok = True
            for c in children[node]:
                shared = bag & td.bags[c]
                match = None
                for j, psi in enumerate(tables[c]):
                    if all(psi[v] == phi[v] for v in shared):
                        match = j
                        break
                if match is None:
                    ok = False
                    break
                chosen.append(match)
            if ok:
                table.append(phi)
                pick.append(chosen)
        tables[node] = table
        picks[node] = pick
        if not table:
            return None
    coloring = {}
    stack = [(0, 0)]
    while stack:
        node, idx = stack.pop()
        coloring.update(tables[node][idx])
        for c, j in zip(children[node], picks[node][idx]):
            stack.append((c, j))
    for v in g.vertices():
        assert coloring[v] in lists[v]
    for u, v in g.edges():
        assert coloring[u] != coloring[v]
    return coloring
