"""Executable gadget builders: the interval-dimension membership reduction on
the diamond host, the blocker construction for general patterns with a
diamond minor, and complements of 2-subdivisions on patterns with a
double-triangle minor.  Constructive outputs always carry representations
that pass the verifier.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    Graph,
    HostModel,
    Representation,
    connected_components,
    is_connected_subset,
    subdivide_edges,
    verify_representation,
)
from .posets import IntervalOrderSpec, Poset


def t3_gadget() -> Graph:
    """Three-leg spider with each leg of length two (degree-3 hub forced)."""
    return Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def diamond_pattern() -> Graph:
    """Two degree-3 nodes joined by an edge and two length-2 paths."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _poset_sides(p: Poset):
    minimals = [v for v in range(p.n) if not p.below[v]]
    maximals = [v for v in range(p.n) if p.below[v]]
    return minimals, maximals


def build_membership_instance(p: Poset) -> Graph:
    """Incomparability graph plus two spider gadgets joined to its two sides."""
    if p.height() > 1:
        raise ValueError("poset must have height at most 1")
    minimals, maximals = _poset_sides(p)
    n = p.n
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if not p.comparable(a, b)
    ]
    t3 = t3_gadget()

    def add_gadget(base, joined):
        for u, v in t3.edges():
            edges.append((base + u, base + v))
        for x in joined:
            for u in range(7):
                edges.append((x, base + u))

    add_gadget(n, minimals)       # low-side spider
    add_gadget(n + 7, maximals)   # high-side spider
    return Graph(n + 14, edges)


def _diamond_host(n: int):
    """Subdivided diamond with labelled route nodes.

    Route r in {alpha, beta, gamma}: nodes r_min, r'_min, r_0..r_n, r'_max,
    r_max between hub 0 (low) and hub 1 (high); beta passes through pattern
    node 2 and gamma through 3 (as r_0).
    """
    pat = diamond_pattern()
    # edges sorted: (0,1) (0,2) (0,3) (1,2) (1,3)
    host = subdivide_edges(pat, [n + 5, 2, 2, n + 2, n + 2])
    labels = {}
    direct = host.edge_paths[0][1:-1]
    labels["alpha"] = list(direct)  # r_min, r'_min, r_0..r_n, r'_max, r_max
    for name, low_edge, high_edge, mid_node in (
        ("beta", 1, 3, 2),
        ("gamma", 2, 4, 3),
    ):
        low = list(host.edge_paths[low_edge][1:-1])      # r_min, r'_min
        high = list(host.edge_paths[high_edge][1:-1])    # r_max, r'_max, r_n..r_1
        labels[name] = (
            low + [mid_node] + list(reversed(high[2:])) + [high[1], high[0]]
        )
    return host, labels


def _route_nodes(labels, route):
    """(r_min, r'_min, [r_0..r_n], r'_max, r_max) for one route."""
    seq = labels[route]
    return seq[0], seq[1], seq[2:-2], seq[-2], seq[-1]


def realize_diamond_representation(p: Poset, realizer) -> Representation:
    """Representation of the membership instance on the subdivided diamond.

    The realizer must be three interval orders whose intersection is p, with
    minimal elements as [0, r] (r integral, 0 <= r <= n) and maximals as
    [l, n] (1 <= l <= n).
    """
    if p.height() > 1:
        raise ValueError("poset must have height at most 1")
    realizer = list(realizer)
    if len(realizer) != 3:
        raise ValueError("need exactly three interval orders")
    inter = realizer[0].order_pairs()
    for spec in realizer[1:]:
        inter &= spec.order_pairs()
    if inter != frozenset(p.lt):
        raise ValueError("realizer intersection must equal the poset")
    minimals, maximals = _poset_sides(p)
    n = p.n
    ends = []
    for spec in realizer:
        cur = {}
        for x in minimals:
            lo, hi = spec.endpoints[x]
            if lo != 0 or hi.denominator != 1 or not (0 <= hi <= n):
                raise ValueError(f"minimal {x} not normalized in {spec}")
            cur[x] = int(hi)
        for y in maximals:
            lo, hi = spec.endpoints[y]
            if hi != max(n, 1) or lo.denominator != 1 or not (1 <= lo <= n):
                raise ValueError(f"maximal {y} not normalized in {spec}")
            cur[y] = int(lo)
        ends.append(cur)
    host, labels = _diamond_host(n)
    routes = ["alpha", "beta", "gamma"]
    subtrees = []
    for x in range(p.n):
        tree = set()
        if x in minimals:
            tree.add(0)
            for i, route in enumerate(routes):
                r_min, r_min2, mids, _, _ = _route_nodes(labels, route)
                tree.update([r_min, r_min2])
                tree.update(mids[: ends[i][x] + 1])
        else:
            tree.add(1)
            for i, route in enumerate(routes):
                _, _, mids, r_max2, r_max = _route_nodes(labels, route)
                tree.update([r_max, r_max2])
                tree.update(mids[ends[i][x]:])
        subtrees.append(frozenset(tree))
    for hub, base in ((0, p.n), (1, p.n + 7)):
        gadget_trees = _spider_subtrees(labels, hub)
        subtrees.extend(gadget_trees)
    g = build_membership_instance(p)
    rep = Representation(host, tuple(subtrees))
    report = verify_representation(g, rep)
    assert report.valid, report.violations
    return rep


def _spider_subtrees(labels, hub):
    """Subtrees of one seven-vertex spider gadget around a degree-3 hub."""
    routes = ["alpha", "beta", "gamma"]
    mids = []
    leaves = []
    center = {hub}
    for route in routes:
        r_min, r_min2, _, r_max2, r_max = _route_nodes(labels, route)
        near, near2 = (r_min, r_min2) if hub == 0 else (r_max, r_max2)
        center.add(near)
        mids.append(frozenset({near, near2}))
        leaves.append(frozenset({near2}))
    out = [frozenset(center)]
    for i in range(3):
        out.append(mids[i])
        out.append(leaves[i])
    return out


@dataclass(frozen=True)
class BlockerSpec:
    base: Graph
    witness: tuple  # (d_min, d_max, three node paths)
    b0: Graph
    star_edges: tuple[tuple[int, int], ...]  # middle edges in b1 ids
    b1: Graph
    blocker: Graph
    d_min_vertices: frozenset[int]  # in blocker ids
    d_max_vertices: frozenset[int]


def find_diamond_witness(h: Graph):
    """Three internally disjoint paths between some node pair, or None."""

    def paths_between(a, b, banned, cap=4000):
        out = []
        stack = [(a, [a])]
        while stack and len(out) < cap:
            v, path = stack.pop()
            if v == b:
                out.append(path)
                continue
            for w in sorted(h.adj[v]):
                if w in banned or w in path:
                    continue
                if w != b and w in (a, b):
                    continue
                stack.append((w, path + [w]))
        return out

    for a in range(h.n):
        for b in range(a + 1, h.n):
            routes = paths_between(a, b, set())
            for trio in itertools.combinations(routes, 3):
                interiors = [set(p[1:-1]) for p in trio]
                if (
                    not (interiors[0] & interiors[1])
                    and not (interiors[0] & interiors[2])
                    and not (interiors[1] & interiors[2])
                ):
                    return (a, b, tuple(tuple(p) for p in trio))
    return None


def _subdivide_listed_edges(g: Graph, targets: list[tuple[int, int]], times: int):
    """Subdivide only the listed edges `times` each; returns (graph, paths)."""
    next_id = g.n
    edges = []
    paths = {}
    target_set = {tuple(sorted(e)) for e in targets}
    for u, v in g.edges():
        if (u, v) in target_set:
            interior = list(range(next_id, next_id + times))
            next_id += times
            path = [u] + interior + [v]
            paths[(u, v)] = path
            edges.extend(zip(path, path[1:]))
        else:
            edges.append((u, v))
    return Graph(next_id, edges), paths


def build_blocker(h: Graph, witness=None) -> BlockerSpec:
    """Blocker graph that pins every high-degree node of the pattern.

    Subdivide the three witness edges at d_min twice, delete the three middle
    edges, then subdivide everything five times.
    """
    if witness is None:
        witness = find_diamond_witness(h)
        if witness is None:
            raise ValueError("pattern has no diamond witness")
    d_min, d_max, paths = witness
    for p in paths:
        if p[0] != d_min or p[-1] != d_max:
            raise ValueError("witness paths must join d_min to d_max")
        for a, b in zip(p, p[1:]):
            if not h.has_edge(a, b):
                raise ValueError(f"witness uses a missing edge ({a},{b})")
    inner = [set(p[1:-1]) for p in paths]
    if inner[0] & inner[1] or inner[0] & inner[2] or inner[1] & inner[2]:
        raise ValueError("witness paths must be internally disjoint")
    first_edges = [tuple(sorted((d_min, p[1]))) for p in paths]
    if len(set(first_edges)) != 3:
        raise ValueError("witness paths must leave d_min on distinct edges")
    b0, sub_paths = _subdivide_listed_edges(h, first_edges, 2)
    star_edges = []
    for e in first_edges:
        path = sub_paths[e]
        s1, s2 = path[1], path[2]
        star_edges.append(tuple(sorted((s1, s2))))
    b1 = Graph(
        b0.n,
        [e for e in b0.edges() if e not in star_edges],
    )
    blocker, b1_paths = _subdivide_listed_edges(b1, list(b1.edges()), 5)
    # component of the split diamond containing d_max / d_min, inside b1
    side = {}
    for start, tag in ((d_min, "min"), (d_max, "max")):
        comp_nodes = _diamond_side(b0, sub_paths, paths, d_min, d_max, start)
        side[tag] = comp_nodes
    d_sets = {"min": set(), "max": set()}
    for tag in ("min", "max"):
        nodes = side[tag]
        d_sets[tag].update(nodes)
        for (u, v), path in b1_paths.items():
            if u in nodes and v in nodes:
                d_sets[tag].update(path[1:-1])
    return BlockerSpec(
        base=h,
        witness=witness,
        b0=b0,
        star_edges=tuple(star_edges),
        b1=b1,
        blocker=blocker,
        d_min_vertices=frozenset(d_sets["min"]),
        d_max_vertices=frozenset(d_sets["max"]),
    )


def _diamond_side(b0, sub_paths, witness_paths, d_min, d_max, start):
    """Nodes of the split subdivided diamond on one side of the star edges."""
    # the subdivided diamond inside b0
    nodes = set()
    edges = set()
    for p, e in zip(witness_paths, [tuple(sorted((d_min, p[1]))) for p in witness_paths]):
        route = list(sub_paths[e])  # d_min, s1, s2, p[1] (maybe reversed)
        if route[0] != d_min:
            route.reverse()
        full = route + list(p[1:])
        seen = set()
        full2 = [x for x in full if not (x in seen or seen.add(x))]
        nodes.update(full2)
        edges.update(
            tuple(sorted(pair)) for pair in zip(full2, full2[1:])
        )
        # remove the middle star edge
        edges.discard(tuple(sorted((route[1], route[2]))))
    comp_adj = {x: set() for x in nodes}
    for u, v in edges:
        comp_adj[u].add(v)
        comp_adj[v].add(u)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in comp_adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def build_gstar(p: Poset, spec: BlockerSpec) -> Graph:
    """Blocker-based membership instance for patterns with a diamond minor."""
    if p.height() > 1:
        raise ValueError("poset must have height at most 1")
    minimals, maximals = _poset_sides(p)
    n = p.n
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if not p.comparable(a, b)
    ]
    for u, v in spec.blocker.edges():
        edges.append((n + u, n + v))
    for y in maximals:
        for w in sorted(spec.d_max_vertices):
            edges.append((y, n + w))
    for x in minimals:
        for w in sorted(spec.d_min_vertices):
            edges.append((x, n + w))
    return Graph(n + spec.blocker.n, edges)


def complement_2subdiv_representation(g: Graph, h: Graph, partition):
    """Complement of the 2-subdivision of g, represented on a subdivision of h.

    `partition` is three connected vertex sets of h with at least two edges
    between each pair; the six connector edges are subdivided (four n times,
    two m times) and each vertex class nests along opposite ends of its two
    connector paths.
    """
    parts = [frozenset(p) for p in partition]
    if len(parts) != 3:
        raise ValueError("need exactly three parts")
    if frozenset().union(*parts) != frozenset(h.vertices()) or (
        sum(len(p) for p in parts) != h.n
    ):
        raise ValueError("parts must partition the pattern nodes")
    for part in parts:
        if not is_connected_subset(h, part):
            raise ValueError("each part must induce a connected subgraph")
    connectors = {}
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        between = [
            e
            for e in h.edges()
            if (e[0] in parts[i] and e[1] in parts[j])
            or (e[0] in parts[j] and e[1] in parts[i])
        ]
        if len(between) < 2:
            raise ValueError(f"parts {i},{j} joined by fewer than two edges")
        connectors[(i, j)] = sorted(between)[:2]
    n, m = g.n, g.m
    edge_list = list(h.edges())
    counts = [0] * len(edge_list)
    for (i, j), pair in connectors.items():
        for e in pair:
            counts[edge_list.index(e)] = m if (i, j) == (1, 2) else n
    host = subdivide_edges(h, counts)

    def oriented(eidx, from_part):
        path = list(host.edge_paths[eidx])
        if path[0] in parts[from_part]:
            return path
        return path[::-1]

    p12 = oriented(edge_list.index(connectors[(0, 1)][0]), 0)
    q12 = oriented(edge_list.index(connectors[(0, 1)][1]), 0)
    p13 = oriented(edge_list.index(connectors[(0, 2)][0]), 0)
    q13 = oriented(edge_list.index(connectors[(0, 2)][1]), 0)
    p23 = oriented(edge_list.index(connectors[(1, 2)][0]), 1)
    q23 = oriented(edge_list.index(connectors[(1, 2)][1]), 1)
    alpha, beta = p12[1:-1], q12[1:-1]
    gamma, eta = p13[1:-1], q13[1:-1]
    mu, nu = p23[1:-1], q23[1:-1]
    # the 2-subdivision and its complement
    sub_n = n + 2 * m
    sub_edges = []
    for k, (lv, rv) in enumerate(g.edges()):
        a_k, b_k = n + k, n + m + k
        sub_edges += [(lv, a_k), (a_k, b_k), (b_k, rv)]
    g2 = Graph(sub_n, sub_edges)
    comp = g2.complement()
    subtrees = [None] * sub_n
    for i0 in range(n):
        i = i0 + 1
        tree = set(parts[0])
        tree.update(alpha[:i])
        tree.update(beta[: n - i])
        tree.update(gamma[:i])
        tree.update(eta[: n - i])
        subtrees[i0] = frozenset(tree)
    for k in range(m):
        j = k + 1
        lj = g.edges()[k][0] + 1
        rj = g.edges()[k][1] + 1
        atree = set(parts[1])
        atree.update(alpha[lj:])     # alpha_{l+1} .. alpha_n
        atree.update(beta[n - lj + 1 - 1:])
        atree.update(mu[:j])
        atree.update(nu[: m - j])
        subtrees[n + k] = frozenset(atree)
        btree = set(parts[2])
        btree.update(gamma[rj:])
        btree.update(eta[n - rj + 1 - 1:])
        btree.update(mu[j + 1 - 1:])
        btree.update(nu[m - j + 1 - 1:])
        subtrees[n + m + k] = frozenset(btree)
    rep = Representation(host, tuple(subtrees))
    report = verify_representation(comp, rep)
    assert report.valid, report.violations
    return comp, rep
