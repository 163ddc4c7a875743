"""Dominating-set optimization driven by a representation.

Star hosts get the FPT routine: per-branch interval minima, the sets of hub
vertices usable by some branch optimum, and an exact cover over those sets.
General hosts get the XP routine: enumerate the sub-solution on high-degree
nodes plus first/last picks per low-degree path, sanity-check, and complete
each residual interval piece greedily.  The same skeleton with the interval
subroutine swapped solves maximum independent set and minimum independent
dominating set.
"""

import itertools

from .errors import CyclePattern
from .graphs import Graph, Representation, connected_components, verify_representation
from .intervals import (
    CliqueOrder,
    Refutation,
    _cover_greedy,
    domset_including,
    greedy_min_domset_interval,
    is_chordal,
    peo_cliques,
)


def _helly_node(rep: Representation, clique) -> int:
    inter = None
    for v in clique:
        inter = rep.subtrees[v] if inter is None else inter & rep.subtrees[v]
    assert inter, "clique subtrees on a tree host must share a node"
    return min(inter)


def normalize_representation(g: Graph, rep: Representation, nodes) -> Representation:
    """Grow subtrees so each requested host node carries a maximal clique.

    Tree hosts only.  Repeatedly extends the subtrees of a missing clique
    along the path toward its shared node; every步 preserves validity.
    """
    subtrees = [set(t) for t in rep.subtrees]
    if g.n == 0:
        return rep
    peo = is_chordal(g)
    assert not isinstance(peo, Refutation), "tree-host guests are chordal"
    cliques = peo_cliques(g, peo)
    sub = rep.host.subdivision
    for b in nodes:
        while True:
            v_b = {v for v in g.vertices() if b in subtrees[v]}
            target = None
            for c in cliques:
                if v_b < c:
                    target = c
                    break
            if target is None:
                break
            inter = None
            for v in target:
                s = frozenset(subtrees[v])
                inter = s if inter is None else inter & s
            a = min(inter)
            # walk from b toward a; the first node whose vertex set strictly
            # grows past v_b absorbs the stretch
            prev = {b: None}
            queue = [b]
            while a not in prev:
                nxt = []
                for x in queue:
                    for y in sub.adj[x]:
                        if y not in prev:
                            prev[y] = x
                            nxt.append(y)
                queue = nxt
            path = [a]
            while path[-1] != b:
                path.append(prev[path[-1]])
            path.reverse()
            for idx in range(1, len(path)):
                x = path[idx]
                v_x = {v for v in g.vertices() if x in subtrees[v]}
                if v_x > v_b:
                    for v in v_x - v_b:
                        subtrees[v].update(path[: idx + 1])
                    break
            else:
                raise AssertionError("no growth point on the clique path")
    out = Representation(rep.host, tuple(frozenset(t) for t in subtrees))
    report = verify_representation(g, out)
    assert report.valid, report.violations
    return out


def _star_center(rep: Representation) -> int:
    pat = rep.host.pattern
    hubs = [v for v in pat.vertices() if pat.degree(v) == pat.m and pat.m >= 2]
    if pat.n < 3 or pat.m != pat.n - 1 or not hubs:
        raise ValueError("host pattern is not a star")
    if pat.m == 2:
        # path pattern: the middle node acts as the hub
        return next(v for v in pat.vertices() if pat.degree(v) == 2)
    return hubs[0]


def _exact_cover(traces: dict, ground: int):
    """Smallest vertex set whose traces cover all `ground` branch bits."""
    full = (1 << ground) - 1
    best = {0: (0, ())}
    for _ in range(ground):
        for mask, (size, picks) in sorted(best.items()):
            for x, tr in traces.items():
                cand = (size + 1, tuple(sorted(picks + (x,))))
                new = mask | tr
                if new not in best or best[new] > cand:
                    best[new] = cand
    return best.get(full)


def min_domset_star(g: Graph, rep: Representation) -> list[int]:
    """Minimum dominating set of a star-host guest, from its representation."""
    report = verify_representation(g, rep)
    if not report.valid:
        raise ValueError(f"invalid representation: {report.violations[:3]}")
    if g.n == 0:
        return []
    center = _star_center(rep)
    rep = normalize_representation(g, rep, [center])
    hub_clique = frozenset(
        v for v in g.vertices() if center in rep.subtrees[v]
    )
    peo = is_chordal(g)
    cliques = peo_cliques(g, peo)
    assert hub_clique in cliques, "normalization must leave a maximal clique"
    branch_nodes = []
    for k in range(rep.host.pattern.m):
        path = rep.host.edge_paths[k]
        nodes = list(path)
        if path[0] != center:
            nodes.reverse()
        assert nodes[0] == center
        branch_nodes.append(nodes[1:])
    branch_cliques = [[] for _ in branch_nodes]
    for c in cliques:
        if c == hub_clique:
            continue
        spot = None
        for v in c:
            spot = rep.subtrees[v] if spot is None else spot & rep.subtrees[v]
        assert spot and center not in spot
        for i, nodes in enumerate(branch_nodes):
            here = [pos for pos, nd in enumerate(nodes) if nd in spot]
            if here:
                branch_cliques[i].append((min(here), c))
                break
        else:
            raise AssertionError("clique nodes on no branch")
    # per-branch subproblem: dominate the branch's NON-hub vertices; hub
    # vertices can be reached from any branch through the shared node, so
    # their coverage is settled globally afterwards
    chosen: list[int] = []
    ground_branches = []
    arbitrary_parts = []
    for i, pairs in enumerate(branch_cliques):
        if not pairs:
            continue
        pairs.sort(key=lambda pc: pc[0])
        verts = sorted({v for _, c in pairs for v in c})
        piece, ids = g.induced(verts)
        order = CliqueOrder(
            tuple(frozenset(ids.index(v) for v in c) for _, c in pairs)
        )
        order.validate(piece)
        spans = {v: order.span(v) for v in piece.vertices()}
        demands = [ids.index(v) for v in verts if v not in hub_clique]
        base = _cover_greedy(piece, spans, demands, [])
        d_i = len(base)
        b_i = []
        for x in sorted(hub_clique):
            if x not in verts:
                continue
            nx = ids.index(x)
            assert nx in order.cliques[0], "hub vertices start every branch"
            forced = _cover_greedy(piece, spans, demands, [nx])
            if 1 + len(forced) == d_i:
                b_i.append(x)
        if b_i:
            ground_branches.append((piece, ids, spans, demands, d_i, b_i))
        else:
            # any optimum works; prefer one that also covers hub members at
            # the branch head when that is free
            extended = demands + [
                ids.index(x) for x in sorted(hub_clique) if x in verts
            ]
            wide = _cover_greedy(piece, spans, extended, [])
            pick = wide if len(wide) == d_i else base
            arbitrary_parts.append([ids[v] for v in pick])
    if ground_branches:
        # one vertex per distinct usable-branch trace (smallest id wins)
        inv = {}
        for x in sorted(hub_clique):
            tr = 0
            for gi, (_, _, _, _, _, b_i) in enumerate(ground_branches):
                if x in b_i:
                    tr |= 1 << gi
            if tr:
                inv.setdefault(tr, x)
        picked = _exact_cover({x: tr for tr, x in inv.items()},
                              len(ground_branches))
        assert picked is not None, "nonempty usable sets always admit a cover"
        _, hit = picked
        for piece, ids, spans, demands, d_i, b_i in ground_branches:
            x = min(v for v in hit if v in b_i)
            nx = ids.index(x)
            part = [nx] + _cover_greedy(piece, spans, demands, [nx])
            assert len(part) == d_i
            chosen.extend(ids[v] for v in part)
    for part in arbitrary_parts:
        chosen.extend(part)
    solution = sorted(set(chosen))
    if not _dominates(g, solution):
        solution = sorted(set(solution) | {min(hub_clique)})
    assert _dominates(g, solution)
    return solution


def _dominates(g: Graph, s) -> bool:
    dom = set(s)
    for v in s:
        dom |= g.adj[v]
    return len(dom) == g.n


# --- general hosts -----------------------------------------------------------


def _host_paths(rep: Representation):
    """Low-degree paths of the host, the high nodes, and per-path candidates."""
    sub = rep.host.subdivision
    pat = rep.host.pattern
    if pat.n >= 3 and pat.m == pat.n and all(pat.degree(v) == 2 for v in pat.vertices()):
        raise CyclePattern("cycle pattern: use a circular-arc routine")
    high = frozenset(v for v in range(pat.n) if pat.degree(v) >= 3)
    low_nodes = [x for x in sub.vertices() if x not in high]
    piece, ids = sub.induced(low_nodes)
    paths = []
    for comp in connected_components(piece):
        comp_old = sorted(ids[x] for x in comp)
        degs = {x: sum(1 for y in sub.adj[x] if y in comp_old) for x in comp_old}
        if any(d > 2 for d in degs.values()) or (
            len(comp_old) >= 3 and all(d == 2 for d in degs.values())
        ):
            raise CyclePattern("host has a cycle without high-degree nodes")
        start = min(x for x in comp_old if degs[x] <= 1)
        ordered = [start]
        while len(ordered) < len(comp_old):
            ordered.append(
                next(y for y in sub.adj[ordered[-1]]
                     if y in degs and y not in ordered)
            )
        paths.append(ordered)
    paths.sort(key=lambda p: p[0])
    return high, paths


def _path_candidates(g: Graph, rep: Representation, paths):
    infos = []
    for path in paths:
        nodes = set(path)
        pos = {x: i for i, x in enumerate(path)}
        cand = []
        for v in g.vertices():
            if rep.subtrees[v] <= nodes:
                ps = [pos[x] for x in rep.subtrees[v]]
                cand.append((v, min(ps), max(ps)))
        infos.append(cand)
    return infos


def _closed_nb(g: Graph, vs) -> set[int]:
    out = set(vs)
    for v in vs:
        out |= g.adj[v]
    return out


def _path_options_domset(g, cand, base_dominated, u_verts):
    """Per-path pick options: (cost, picks+extras tuple, covered-U bitmask).

    Dominators for the residual sweep are restricted to this path's own
    candidates; subtrees on other paths cannot reach here.
    """
    u_index = {v: i for i, v in enumerate(u_verts)}
    spans = {v: (lo, hi) for v, lo, hi in cand}
    verts = sorted(spans)
    piece, ids = g.induced(verts)
    to_new = {old: new for new, old in enumerate(ids)}
    piece_spans = {to_new[v]: spans[v] for v in verts}
    options = []

    def coverage(picks):
        mask = 0
        for p in picks:
            for w in _closed_nb(g, [p]):
                if w in u_index:
                    mask |= 1 << u_index[w]
        return mask

    def residual(picks):
        demands = [to_new[v] for v in verts if v not in base_dominated
                   and v not in _closed_nb(g, picks)]
        extra = _cover_greedy(piece, piece_spans, demands,
                              [to_new[p] for p in picks])
        return [ids[e] for e in extra]

    if all(v in base_dominated for v in verts):
        options.append((0, (), 0))
    for u in verts:
        if all(v in base_dominated or v in _closed_nb(g, [u]) for v in verts):
            options.append((1, (u,), coverage([u])))
    lo_key = {v: (spans[v][0], spans[v][1], v) for v in verts}
    hi_key = {v: (spans[v][1], spans[v][0], v) for v in verts}
    for f in verts:
        for l in verts:
            if f == l or lo_key[f] > lo_key[l] or hi_key[f] > hi_key[l]:
                continue
            # strictly outside the picks' span everything must be pre-dominated
            ok = all(
                v in base_dominated
                for v in verts
                if spans[v][1] < spans[f][0] or spans[v][0] > spans[l][1]
            )
            if not ok:
                continue
            extra = residual([f, l])
            picks = tuple(sorted({f, l} | set(extra)))
            options.append((len(picks), picks, coverage([f, l])))
    return options


def _xp_skeleton(g: Graph, rep: Representation, per_path_options, seed_sets,
                 better, seed_cost):
    """Enumerate high-node sub-solutions and combine per-path options by DP."""
    high, paths = _host_paths(rep)
    cand_infos = _path_candidates(g, rep, paths)
    v_hi = sorted(
        v for v in g.vertices() if any(x in high for x in rep.subtrees[v])
    )
    reach = set()
    for cand in cand_infos:
        for v, _, _ in cand:
            reach |= _closed_nb(g, [v])
    best = None
    for seed in seed_sets(v_hi):
        base_dom = _closed_nb(g, seed)
        u_verts = sorted(v for v in v_hi if v not in base_dom)
        # high vertices unreachable from any path must already be dominated
        if any(v not in reach for v in u_verts):
            continue
        full = (1 << len(u_verts)) - 1
        states = {0: (seed_cost(seed), tuple(sorted(seed)))}
        feasible = True
        for cand in cand_infos:
            options = per_path_options(g, cand, base_dom, u_verts, seed)
            if options is None:
                feasible = False
                break
            nxt = {}
            for mask, (cost, picks) in states.items():
                for ocost, opicks, omask in options:
                    key = mask | omask
                    val = (cost + ocost, tuple(sorted(picks + opicks)))
                    if key not in nxt or better(val, nxt[key]):
                        nxt[key] = val
            states = nxt
            if not states:
                feasible = False
                break
        if not feasible:
            continue
        for mask, val in states.items():
            if mask == full and (best is None or better(val, best)):
                best = val
    return best


def min_domset_hgraph(g: Graph, rep: Representation) -> list[int]:
    """Minimum dominating set via high-node enumeration plus interval pieces."""
    report = verify_representation(g, rep)
    if not report.valid:
        raise ValueError(f"invalid representation: {report.violations[:3]}")
    if g.n == 0:
        return []
    cap = 2 * rep.host.pattern.m

    def seeds(v_hi):
        for size in range(min(cap, len(v_hi)) + 1):
            yield from itertools.combinations(v_hi, size)

    def options(g_, cand, base_dom, u_verts, seed):
        return _path_options_domset(g_, cand, base_dom, u_verts)

    def better(a, b):
        return (a[0], a[1]) < (b[0], b[1])

    best = _xp_skeleton(g, rep, options, seeds, better, lambda s: len(s))
    assert best is not None, "a dominating set always exists"
    solution = sorted(set(best[1]))
    assert _dominates(g, solution)
    return solution


def max_independent_set_hgraph(g: Graph, rep: Representation) -> list[int]:
    """Maximum independent set via the same high/low decomposition."""
    report = verify_representation(g, rep)
    if not report.valid:
        raise ValueError(f"invalid representation: {report.violations[:3]}")
    if g.n == 0:
        return []
    high, paths = _host_paths(rep)
    cand_infos = _path_candidates(g, rep, paths)
    v_hi = sorted(
        v for v in g.vertices() if any(x in high for x in rep.subtrees[v])
    )
    best = None
    for size in range(len(v_hi), -1, -1):
        for seed in itertools.combinations(v_hi, size):
            if any(g.has_edge(a, b) for a, b in itertools.combinations(seed, 2)):
                continue
            banned = _closed_nb(g, seed)
            total = list(seed)
            for cand in cand_infos:
                # subtrees inside one path are intervals: right-endpoint greedy
                free = sorted(
                    ((v, lo, hi) for v, lo, hi in cand if v not in banned),
                    key=lambda t: (t[2], t[0]),
                )
                last_end = -1
                for v, lo, hi in free:
                    if lo > last_end:
                        total.append(v)
                        last_end = hi
            cur = (len(total), tuple(sorted(total)))
            if best is None or (-cur[0], cur[1]) < (-best[0], best[1]):
                best = cur
    assert best is not None
    out = sorted(best[1])
    assert all(not g.has_edge(a, b) for a, b in itertools.combinations(out, 2))
    return out


def min_independent_domset_hgraph(g: Graph, rep: Representation) -> list[int]:
    """Minimum independent dominating set via per-path exact enumeration."""
    report = verify_representation(g, rep)
    if not report.valid:
        raise ValueError(f"invalid representation: {report.violations[:3]}")
    if g.n == 0:
        return []

    def seeds(v_hi):
        for size in range(len(v_hi) + 1):
            for seed in itertools.combinations(v_hi, size):
                if not any(
                    g.has_edge(a, b) for a, b in itertools.combinations(seed, 2)
                ):
                    yield seed

    def options(g_, cand, base_dom, u_verts, seed):
        u_index = {v: i for i, v in enumerate(u_verts)}
        verts = [v for v, _, _ in cand]
        usable = [v for v in verts if not any(g_.has_edge(v, s) for s in seed)]
        if len(usable) > 18:
            raise ValueError("per-path enumeration capped at 18 candidates")
        out = []
        for r in range(len(usable) + 1):
            for s in itertools.combinations(usable, r):
                if any(g_.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                    continue
                covered = _closed_nb(g_, s)
                if any(v not in base_dom and v not in covered for v in verts):
                    continue
                mask = 0
                for w in covered:
                    if w in u_index:
                        mask |= 1 << u_index[w]
                out.append((len(s), tuple(sorted(s)), mask))
        return out

    def better(a, b):
        return (a[0], a[1]) < (b[0], b[1])

    best = _xp_skeleton(g, rep, options, seeds, better, lambda s: len(s))
    assert best is not None, "greedy maximal independent sets dominate"
    out = sorted(set(best[1]))
    assert _dominates(g, out)
    assert all(not g.has_edge(a, b) for a, b in itertools.combinations(out, 2))
    return out
