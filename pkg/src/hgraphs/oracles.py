"""Seeded instance generators and independent brute-force oracles.

The oracles share only the core graph types with the production algorithms:
each is a direct exhaustive search with a hard cap, refusing (never guessing)
past it.  Generators emit ground-truth representations alongside graphs.
"""

import itertools

from .errors import OracleCapError
from .graphs import (
    Graph,
    HostModel,
    Representation,
    canonical_subdivision,
    connected_components,
    is_connected_subset,
    verify_representation,
)
from .posets import Poset
from .rng import SplitMix64


# --- generators -------------------------------------------------------------


def random_subtree_rep(h: Graph, n: int, seed: int, sub: int | None = None):
    """Random n-vertex intersection graph of connected node sets plus its
    representation; `sub` overrides the host granularity (default n).
    """
    host = canonical_subdivision(h, max(sub if sub is not None else n, 1))
    rng = SplitMix64(seed)
    subtrees = []
    hs = host.subdivision
    # size cap scales with the host so subtrees keep intersecting as the
    # subdivision grows (total coverage around twice the host)
    cap = max(2, (4 * hs.n) // max(n, 1))
    for _ in range(n):
        start = rng.randrange(hs.n)
        tree = {start}
        frontier = sorted(hs.adj[start])
        target = 1 + rng.randrange(cap)
        while frontier and len(tree) < target:
            nxt = frontier[rng.randrange(len(frontier))]
            tree.add(nxt)
            frontier = sorted(
                {w for x in tree for w in hs.adj[x]} - tree
            )
        subtrees.append(frozenset(tree))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if subtrees[u] & subtrees[v]
    ]
    g = Graph(n, edges)
    rep = Representation(host, tuple(subtrees))
    report = verify_representation(g, rep)
    assert report.valid, report.violations
    return g, rep


def random_graph(n: int, p_numerator: int, seed: int) -> Graph:
    """Erdos-Renyi-style graph with edge probability p_numerator/100."""
    rng = SplitMix64(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.randrange(100) < p_numerator
    ]
    return Graph(n, edges)


def random_height1_poset(n_min: int, n_max: int, density: float, seed: int) -> Poset:
    """Bipartite strict order: n_min minimals, n_max maximals."""
    rng = SplitMix64(seed)
    lt = [
        (a, n_min + b)
        for a in range(n_min)
        for b in range(n_max)
        if rng.random() < density
    ]
    return Poset(n_min + n_max, lt)


# --- membership oracle --------------------------------------------------------


def _connected_node_sets(host: Graph, cap: int) -> list[int]:
    """All connected vertex subsets as bitmasks, canonical enumeration."""
    adj_mask = [0] * host.n
    for v in range(host.n):
        for u in host.adj[v]:
            adj_mask[v] |= 1 << u
    out = []

    def grow(current: int, frontier: int, banned: int):
        if len(out) > cap:
            raise OracleCapError(f"more than {cap} connected node sets")
        out.append(current)
        f = frontier
        while f:
            low = f & -f
            f ^= low
            v = low.bit_length() - 1
            new_frontier = (frontier | adj_mask[v]) & ~(current | low) & ~(banned | f)
            grow(current | low, new_frontier, banned | f)

    for v in range(host.n):
        below = (1 << v) - 1
        grow(1 << v, adj_mask[v] & ~below, below)
    return out


def _pattern_automorphisms(h: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving permutations of a tiny pattern (n <= 7)."""
    if h.n > 7:
        return [tuple(range(h.n))]
    degs = [h.degree(v) for v in range(h.n)]
    out = []
    for perm in itertools.permutations(range(h.n)):
        if any(degs[v] != degs[perm[v]] for v in range(h.n)):
            continue
        if all(h.has_edge(perm[u], perm[v]) for u, v in h.edges()):
            out.append(perm)
    return out


def _host_node_maps(host: HostModel) -> list[list[int]]:
    """Subdivision node permutations induced by pattern automorphisms."""
    pat = host.pattern
    edge_index = {}
    for k, (u, v) in enumerate(pat.edges()):
        edge_index[(u, v)] = k
        edge_index[(v, u)] = k
    maps = []
    for perm in _pattern_automorphisms(pat):
        node_map = list(range(host.subdivision.n))
        for v in range(pat.n):
            node_map[v] = perm[v]
        ok = True
        for k, (u, v) in enumerate(pat.edges()):
            iu, iv = perm[u], perm[v]
            k2 = edge_index.get((iu, iv))
            if k2 is None or len(host.edge_paths[k2]) != len(host.edge_paths[k]):
                ok = False
                break
            src = host.edge_paths[k][1:-1]
            dst = host.edge_paths[k2][1:-1]
            if pat.edges()[k2][0] != iu:
                dst = dst[::-1]
            for a, b in zip(src, dst):
                node_map[a] = b
        if ok:
            maps.append(node_map)
    return maps


def _remap_mask(mask: int, node_map: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        mask ^= low
        out |= 1 << node_map[low.bit_length() - 1]
    return out


def _induced_hole_exists(g: Graph, max_n: int = 16) -> bool:
    """Exhaustive search for a chordless cycle of length >= 4 (own code)."""
    if g.n > max_n:
        raise OracleCapError("hole search capped")
    for size in range(4, g.n + 1):
        for vs in itertools.combinations(range(g.n), size):
            degs = [sum(1 for u in vs if g.has_edge(v, u)) for v in vs]
            if any(d != 2 for d in degs):
                continue
            if is_connected_subset(g, vs):
                return True
    return False


def _is_tree_pattern(h: Graph) -> bool:
    return h.n >= 1 and h.m == h.n - 1 and len(connected_components(h)) == 1


def brute_membership(g: Graph, h: Graph, sub_cap: int, set_cap: int = 400_000):
    """Exhaustive test for a representation on the canonical subdivision.

    The host subdivides every pattern edge 2*min(n, sub_cap) times.  A yes is
    certified (the found representation verifies); a no is exact only when the
    cap admits some representation of every member, which holds whenever
    2*min(n, sub_cap) interiors per edge can hold one node per maximal clique
    (tree patterns need at most n) and in general at the 2n sufficiency bound.

    Tree patterns only host graphs with no induced cycle >= 4 (connected
    subtrees of a tree pairwise intersect through shared nodes), so those are
    refuted by a direct forbidden-structure search before assignment search.
    """
    if g.n == 0:
        return True
    if _is_tree_pattern(h) and g.n <= 16 and _induced_hole_exists(g):
        return False
    host = canonical_subdivision(h, max(min(g.n, sub_cap), 1))
    raw = _connected_node_sets(host.subdivision, set_cap)
    # big sets first: solutions tend to use branching subtrees for hub vertices
    sets = sorted(raw, key=lambda s: (-s.bit_count(), s))
    node_masks = [0] * host.subdivision.n
    for idx, s in enumerate(sets):
        m = s
        while m:
            low = m & -m
            m ^= low
            node_masks[low.bit_length() - 1] |= 1 << idx
    meets_cache: dict[int, int] = {}

    def meets_mask(set_idx: int) -> int:
        if set_idx not in meets_cache:
            acc = 0
            s = sets[set_idx]
            while s:
                low = s & -s
                s ^= low
                acc |= node_masks[low.bit_length() - 1]
            meets_cache[set_idx] = acc
        return meets_cache[set_idx]

    full = (1 << len(sets)) - 1
    # host symmetry: the first assigned vertex only tries orbit representatives
    root = max(g.vertices(), key=lambda v: (g.degree(v), -v))
    root_domain = full
    node_maps = _host_node_maps(host)
    if len(node_maps) > 1:
        root_domain = 0
        for i, s in enumerate(sets):
            if all(s <= _remap_mask(s, nm) for nm in node_maps):
                root_domain |= 1 << i
    domains = [full] * g.n
    domains[root] = root_domain
    assignment = [None] * g.n

    def dfs(remaining: list[int], domains: list[int]) -> bool:
        if not remaining:
            return True
        v = min(remaining, key=lambda u: domains[u].bit_count())
        dom = domains[v]
        if dom == 0:
            return False
        rest = [u for u in remaining if u != v]
        while dom:
            low = dom & -dom
            dom ^= low
            idx = low.bit_length() - 1
            assignment[v] = idx
            mm = meets_mask(idx)
            new_domains = list(domains)
            ok = True
            for u in rest:
                if g.has_edge(u, v):
                    new_domains[u] &= mm
                else:
                    new_domains[u] &= ~mm
                if new_domains[u] == 0:
                    ok = False
                    break
            if ok and dfs(rest, new_domains):
                return True
        assignment[v] = None
        return False

    order = [root] + [u for u in g.vertices() if u != root]
    found = dfs(order, domains)
    if not found:
        return False
    subtrees = tuple(frozenset(_bits(sets[assignment[v]])) for v in g.vertices())
    rep = Representation(host, subtrees)
    assert verify_representation(g, rep).valid
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


# --- optimization oracles ----------------------------------------------------

_DEFAULT_CAP = 20


def _check_cap(g: Graph, cap: int):
    if g.n > cap:
        raise OracleCapError(f"oracle cap {cap} exceeded by n={g.n}")


def brute_max_clique(g: Graph, cap: int = _DEFAULT_CAP) -> set[int]:
    _check_cap(g, cap)
    best: set[int] = set()

    def extend(clique: set[int], candidates: list[int]):
        nonlocal best
        if len(clique) > len(best):
            best = set(clique)
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i <= len(best):
                break
            if all(g.has_edge(v, u) for u in clique):
                extend(clique | {v}, candidates[i + 1:])

    extend(set(), list(g.vertices()))
    return best


def _dominates(g: Graph, s) -> bool:
    dom = set(s)
    for v in s:
        dom |= g.adj[v]
    return len(dom) == g.n


def brute_min_domset(g: Graph, cap: int = 16) -> set[int]:
    _check_cap(g, cap)
    for size in range(g.n + 1):
        for vs in itertools.combinations(range(g.n), size):
            if _dominates(g, vs):
                return set(vs)
    return set(range(g.n))


def brute_all_min_domsets(g: Graph, cap: int = 14) -> list[set[int]]:
    _check_cap(g, cap)
    out = []
    for size in range(g.n + 1):
        for vs in itertools.combinations(range(g.n), size):
            if _dominates(g, vs):
                out.append(set(vs))
        if out:
            return out
    return [set()]


def brute_mis(g: Graph, cap: int = _DEFAULT_CAP) -> set[int]:
    _check_cap(g, cap)
    best: set[int] = set()
    for size in range(g.n, -1, -1):
        if size <= len(best):
            break
        for vs in itertools.combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(vs, 2)):
                return set(vs)
    return best


def brute_ids(g: Graph, cap: int = 14):
    """Minimum independent dominating set (always exists)."""
    _check_cap(g, cap)
    for size in range(g.n + 1):
        for vs in itertools.combinations(range(g.n), size):
            if _dominates(g, vs) and all(
                not g.has_edge(u, v) for u, v in itertools.combinations(vs, 2)
            ):
                return set(vs)
    return set()


def brute_list_coloring(g: Graph, lists: dict, cap: int = 14):
    _check_cap(g, cap)
    verts = list(g.vertices())
    for combo in itertools.product(*[sorted(lists[v]) for v in verts]):
        coloring = dict(zip(verts, combo))
        if all(coloring[u] != coloring[v] for u, v in g.edges()):
            return coloring
    return None


def brute_chain_cover(p: Poset, cap: int = 12) -> int:
    """Minimum chain-cover size by maximum-antichain search (Dilworth)."""
    if p.n > cap:
        raise OracleCapError(f"oracle cap {cap} exceeded by n={p.n}")
    best = 0
    for size in range(p.n, 0, -1):
        for vs in itertools.combinations(range(p.n), size):
            if all(
                not p.comparable(a, b) for a, b in itertools.combinations(vs, 2)
            ):
                return size
    return best


def brute_minimal_separators(g: Graph, cap: int = 12) -> set[frozenset[int]]:
    """All minimal (u,v)-separators, by definition, for n <= cap."""
    _check_cap(g, cap)
    out = set()
    verts = list(g.vertices())

    def separates(s, u, v):
        blocked = set(s)
        if u in blocked or v in blocked:
            return False
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                return False
            for w in g.adj[x]:
                if w not in blocked and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return v not in seen

    for size in range(g.n - 1):
        for vs in itertools.combinations(verts, size):
            s = set(vs)
            pairs = [
                (u, v)
                for u in verts
                for v in verts
                if u < v and u not in s and v not in s and separates(s, u, v)
            ]
            for u, v in pairs:
                if all(not separates(s - {x}, u, v) for x in s):
                    out.add(frozenset(s))
                    break
    return out
