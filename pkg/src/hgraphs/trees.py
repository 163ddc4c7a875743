"""Recognition of intersection graphs of subdivided trees (XP in the tree size).

For each assignment of maximal cliques to the tree's branching points, the
pipeline (a) validates the assignment structurally, (b) pins down the
components forced between two assigned cliques, (c) reduces each remaining
component to a list of star segments that could host it, and (d) discharges
the per-segment chain packing as list coloring of a co-comparability graph.
Accepted graphs always come with a verified representation.

Degree-2 tree nodes are smoothed away up front; branch points mapped to a
common clique act as one merged hub whose whole region the clique occupies.
"""

import itertools
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    Representation,
    connected_components,
    subdivide_edges,
    verify_representation,
)
from .intervals import (
    CliqueOrder,
    Refutation,
    interval_order,
    interval_order_with_ends,
    is_chordal,
    peo_cliques,
)
from .listcolor import solve_list_coloring_cocomparability
from .posets import Poset


def smooth_tree(t: Graph) -> Graph:
    """Suppress degree-2 nodes; hosts of a subdivision are hosts of the tree."""
    if t.n == 0:
        return t
    keep = [v for v in t.vertices() if t.degree(v) != 2]
    if not keep:
        # t is a cycle-free chain of degree-2 nodes only: impossible for trees
        raise ValueError("not a tree")
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    seen = set()
    for v in keep:
        for w in t.adj[v]:
            prev, cur = v, w
            while t.degree(cur) == 2:
                prev, cur = cur, next(x for x in t.adj[cur] if x != prev)
            key = tuple(sorted((v, cur)))
            if key not in seen:
                seen.add(key)
                edges.append((index[v], index[cur]))
    return Graph(len(keep), edges)


def _validate_tree(t: Graph) -> None:
    if t.n == 0:
        raise ValueError("tree must have at least one node")
    if t.m != t.n - 1 or len(connected_components(t)) != 1:
        raise ValueError("pattern is not a tree")


def _tree_path(t: Graph, a: int, b: int) -> list[int]:
    prev = {a: None}
    queue = [a]
    while queue:
        nxt = []
        for x in queue:
            for y in t.adj[x]:
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        queue = nxt
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def _steiner_nodes(t: Graph, nodes) -> frozenset[int]:
    nodes = sorted(set(nodes))
    out = set(nodes[:1])
    for v in nodes[1:]:
        out.update(_tree_path(t, nodes[0], v))
    return frozenset(out)


@dataclass(frozen=True)
class Hub:
    clique: frozenset[int]
    nodes: frozenset[int]  # Steiner region of its branch points


@dataclass(frozen=True)
class ReducedInstance:
    hubs: tuple[Hub, ...]
    parts: tuple[frozenset[int], ...]  # graph components; hub-anchored first


@dataclass
class TreeRefutation:
    reason: str
    stage_counts: dict = field(default_factory=dict)

    def to_obj(self):
        return {
            "accepted": False,
            "reason": self.reason,
            "eliminated_per_stage": dict(self.stage_counts),
        }


def preprocess(g: Graph, t: Graph, f: dict):
    """Hub formation and structural validity of a branch-point assignment.

    Merges branch points sharing a clique into one hub (their connecting
    region must contain no differently-assigned branch point), checks every
    vertex's assigned cliques sit on a connected region, and splits g into its
    components (hub-anchored parts first).  Returns ReducedInstance or a
    Refutation.
    """
    branch_points = sorted(b for b in t.vertices() if t.degree(b) >= 3)
    if set(f) != set(branch_points):
        raise ValueError("assignment must cover exactly the branching points")
    groups: dict[frozenset, list[int]] = {}
    for b in branch_points:
        groups.setdefault(frozenset(f[b]), []).append(b)
    hubs = []
    for clique, members in sorted(groups.items(), key=lambda kv: sorted(kv[0])):
        region = _steiner_nodes(t, members)
        for x in region:
            if t.degree(x) >= 3 and x not in members:
                return Refutation("hub-region-conflict", (sorted(clique), x))
        hubs.append(Hub(clique=clique, nodes=region))
    for h1, h2 in itertools.combinations(hubs, 2):
        if h1.nodes & h2.nodes:
            return Refutation("hub-overlap", (sorted(h1.clique), sorted(h2.clique)))
    # each vertex's hubs must span a region whose branch points all carry it
    for v in g.vertices():
        mine = [h for h in hubs if v in h.clique]
        if len(mine) <= 1:
            continue
        region = _steiner_nodes(t, frozenset().union(*(h.nodes for h in mine)))
        for x in region:
            if t.degree(x) >= 3 and v not in f[x]:
                return Refutation("vertex-span-conflict", (v, x))
    anchored = []
    free = []
    for comp in connected_components(g):
        if any(h.clique <= comp for h in hubs):
            anchored.append(comp)
        else:
            free.append(comp)
    return ReducedInstance(hubs=tuple(hubs), parts=tuple(anchored + free))


def middle_components(g: Graph, t: Graph, f: dict):
    """Forced placements of components between two hubs, or a Refutation.

    A component adjacent to a private vertex of each of two hub cliques can
    only live on the path between them; two such pulls, or a pull across
    non-adjacent hubs, refute the assignment.
    """
    reduced = preprocess(g, t, f)
    if isinstance(reduced, Refutation):
        return reduced
    hubs = reduced.hubs
    union = frozenset().union(*(h.clique for h in hubs)) if hubs else frozenset()
    rest = [v for v in g.vertices() if v not in union]
    sub, ids = g.induced(rest)
    comps = sorted(
        (frozenset(ids[v] for v in comp) for comp in connected_components(sub)),
        key=sorted,
    )
    adjacency = {}
    for k, (x, y) in enumerate(t.edges()):
        hx = next((i for i, h in enumerate(hubs) if x in h.nodes), None)
        hy = next((i for i, h in enumerate(hubs) if y in h.nodes), None)
        if hx is not None and hy is not None and hx != hy:
            adjacency[frozenset((hx, hy))] = k
    forced: dict[int, list[frozenset[int]]] = {}
    for comp in comps:
        hood = frozenset().union(*(g.adj[v] for v in comp)) & union
        pulls = []
        for i, j in itertools.combinations(range(len(hubs)), 2):
            ci, cj = hubs[i].clique, hubs[j].clique
            if (ci - cj) & hood and (cj - ci) & hood:
                pulls.append((i, j))
        if not pulls:
            continue
        if len(pulls) > 1:
            return Refutation("forced-two-places", sorted(comp))
        pair = frozenset(pulls[0])
        if pair not in adjacency:
            return Refutation("forced-across-hubs", sorted(comp))
        forced.setdefault(adjacency[pair], []).append(comp)
    return reduced, forced


@dataclass(frozen=True)
class Segment:
    """One branch of a hub's star: a side of a tree edge."""

    hub: int
    edge: int
    toward_leaf: bool
    restriction: frozenset[int]


@dataclass
class RestrictedStarInstance:
    hubs: tuple[Hub, ...]
    segments: tuple[Segment, ...]
    middle_orders: dict  # edge index -> CliqueOrder of the forced middle graph
    classes: tuple[tuple[frozenset[int], ...], ...]
    class_hoods: tuple[frozenset[int], ...]
    relation: frozenset[tuple[int, int]]
    lists: dict  # class index -> set of segment indices (1-based colors)


def _left_ids(ids, clique):
    return [k for k, old in enumerate(ids) if old in clique]


def build_restricted_stars(g: Graph, t: Graph, f: dict, forced_input=None):
    """Reduce to disjoint stars with per-segment restrictions and color lists.

    Returns RestrictedStarInstance or a Refutation of this assignment.
    """
    out = middle_components(g, t, f) if forced_input is None else forced_input
    if isinstance(out, Refutation):
        return out
    reduced, forced = out
    hubs = reduced.hubs
    union = frozenset().union(*(h.clique for h in hubs)) if hubs else frozenset()
    hub_of_node = {}
    for i, h in enumerate(hubs):
        for x in h.nodes:
            hub_of_node[x] = i
    # interval test for every hub-hub edge, forced middle included
    middle_orders = {}
    segments = []
    for k, (x, y) in enumerate(t.edges()):
        hx, hy = hub_of_node.get(x), hub_of_node.get(y)
        if hx is not None and hy is not None and hx == hy:
            continue  # interior to a hub region
        if hx is not None and hy is not None:
            ci, cj = hubs[hx].clique, hubs[hy].clique
            mids = sorted(v for comp in forced.get(k, []) for v in comp)
            piece, ids = g.induced(sorted(ci | cj) + mids)
            order = interval_order_with_ends(
                piece, left=_left_ids(ids, ci), right=_left_ids(ids, cj)
            )
            if isinstance(order, Refutation):
                return Refutation("middle-interval", k)
            middle_orders[k] = (order, ids)
            shared = ci & cj
            hood_mid = frozenset(
                w for comp in forced.get(k, []) for v in comp for w in g.adj[v]
            )
            segments.append(
                Segment(hub=hx, edge=k, toward_leaf=False,
                        restriction=frozenset((hood_mid & ci) | shared))
            )
            segments.append(
                Segment(hub=hy, edge=k, toward_leaf=False,
                        restriction=frozenset((hood_mid & cj) | shared))
            )
        elif hx is not None or hy is not None:
            hub = hx if hx is not None else hy
            segments.append(
                Segment(hub=hub, edge=k, toward_leaf=True,
                        restriction=frozenset())
            )
    segments = tuple(
        sorted(segments, key=lambda s: (s.hub, s.edge, s.toward_leaf))
    )
    # remaining components -> equivalence classes under the domination order
    placed = {v for comps in forced.values() for comp in comps for v in comp}
    rest = [v for v in g.vertices() if v not in union and v not in placed]
    sub, ids = g.induced(rest)
    comps = sorted(
        (frozenset(ids[v] for v in comp) for comp in connected_components(sub)),
        key=sorted,
    )
    nb = {v: frozenset(g.adj[v] & union) for v in rest}
    grouped: dict[object, list[frozenset[int]]] = {}
    for comp in comps:
        hoods = {nb[v] for v in comp}
        key = ("uniform", next(iter(hoods))) if len(hoods) == 1 else ("own", comp)
        grouped.setdefault(key, []).append(comp)
    classes = tuple(
        tuple(cs) for cs in sorted(grouped.values(), key=lambda cs: sorted(cs[0]))
    )
    class_hoods = tuple(
        frozenset().union(*(nb[v] for v in cls[0])) for cls in classes
    )
    relation = set()
    for i, cls_i in enumerate(classes):
        for j in range(len(classes)):
            if i != j and all(class_hoods[j] <= nb[u] for u in cls_i[0]):
                relation.add((i, j))
    lists = {}
    for ci, cls in enumerate(classes):
        members = sorted(v for comp in cls for v in comp)
        usable = set()
        for si, seg in enumerate(segments):
            chub = hubs[seg.hub].clique
            if not class_hoods[ci] <= chub:
                continue
            # restriction vertices span the whole segment, so they must see
            # every member (the end-constrained test would refuse anyway)
            if seg.restriction and not all(
                seg.restriction <= g.adj[u] for u in members
            ):
                continue
            piece, pids = g.induced(sorted(chub) + members)
            order = interval_order_with_ends(
                piece,
                left=_left_ids(pids, chub),
                right=_left_ids(pids, seg.restriction) or None,
            )
            if not isinstance(order, Refutation):
                usable.add(si + 1)
        if not usable:
            return Refutation("class-unplaceable", ci)
        lists[ci] = usable
    return RestrictedStarInstance(
        hubs=hubs,
        segments=segments,
        middle_orders=middle_orders,
        classes=classes,
        class_hoods=class_hoods,
        relation=frozenset(relation),
        lists=lists,
    )


def _interval_route(g: Graph, t_smooth: Graph):
    """Hosts with no branching point: plain interval layout on one edge."""
    order = interval_order(g)
    if isinstance(order, Refutation):
        return TreeRefutation(reason="not-interval")
    if t_smooth.n == 1:
        if g.n and not g.is_clique(range(g.n)):
            return TreeRefutation(reason="single-node-host-needs-clique")
        host = subdivide_edges(t_smooth, [])
        return Representation(host, tuple(frozenset({0}) for _ in g.vertices()))
    k = max(len(order.cliques), 1)
    host = subdivide_edges(t_smooth, [k] + [1] * (t_smooth.m - 1))
    interiors = host.edge_paths[0][1:-1]
    subtrees = []
    for v in g.vertices():
        lo, hi = order.span(v)
        subtrees.append(frozenset(interiors[lo: hi + 1]))
    rep = Representation(host, tuple(subtrees))
    report = verify_representation(g, rep)
    assert report.valid, report.violations
    return rep


def _assemble_tree(g: Graph, t: Graph, instance, coloring) -> Representation:
    """Build and verify a representation from a feasible coloring."""
    hubs = instance.hubs
    segments = instance.segments
    n = max(g.n, 1)
    seg_members = {si: [] for si in range(len(segments))}
    for ci, color in coloring.items():
        seg_members[color - 1].extend(
            v for comp in instance.classes[ci] for v in comp
        )
    # per-segment joint layouts (must exist: members chain along the order)
    seg_orders = {}
    for si, seg in enumerate(segments):
        chub = hubs[seg.hub].clique
        members = sorted(seg_members[si])
        piece, ids = g.induced(sorted(chub) + members)
        new_c = frozenset(_left_ids(ids, chub))
        order = interval_order_with_ends(
            piece,
            left=new_c,
            right=_left_ids(ids, seg.restriction) or None,
        )
        if isinstance(order, Refutation):
            return Refutation("segment-assembly", si)
        assert order.cliques[0] == new_c, "hub clique must stay maximal"
        seg_orders[si] = (order, ids)
    # host sizing: per edge, both sides plus the forced middle plus slack
    side_index = {}
    for si, seg in enumerate(segments):
        side_index[(seg.edge, seg.hub)] = si
    counts = []
    for k in range(t.m):
        size = 2
        for si, seg in enumerate(segments):
            if seg.edge == k:
                size += len(seg_orders[si][0].cliques) + 1
        if k in instance.middle_orders:
            size += len(instance.middle_orders[k][0].cliques)
        counts.append(size)
    host = subdivide_edges(t, counts)
    subtrees = [set() for _ in range(g.n)]
    hub_of_node = {}
    for i, h in enumerate(hubs):
        for nd in h.nodes:
            hub_of_node[nd] = i
    # hub regions: every clique vertex covers its hub's region entirely
    for i, h in enumerate(hubs):
        region_nodes = set(h.nodes)
        for k, (x, y) in enumerate(t.edges()):
            if x in h.nodes and y in h.nodes:
                region_nodes.update(host.edge_paths[k])
        for v in h.clique:
            subtrees[v].update(region_nodes)
    for k, (x, y) in enumerate(t.edges()):
        hx, hy = hub_of_node.get(x), hub_of_node.get(y)
        if hx is not None and hy is not None and hx == hy:
            continue
        interiors = list(host.edge_paths[k][1:-1])

        def place_side(si, near):
            """Lay a segment's clique order onto `near` (hub-first node list).

            Returns how many positions were consumed.
            """
            order, ids = seg_orders[si]
            chub = hubs[segments[si].hub].clique
            slots = near[: len(order.cliques) - 1]
            for new_v in range(len(ids)):
                old_v = ids[new_v]
                lo, hi = order.span(new_v)
                if old_v in chub:
                    subtrees[old_v].update(slots[:hi])
                    if old_v in segments[si].restriction:
                        subtrees[old_v].update(slots)
                else:
                    subtrees[old_v].update(slots[lo - 1: hi])
            return len(slots)

        if hx is not None and hy is not None:
            used_x = place_side(side_index[(k, hx)], interiors)
            used_y = place_side(side_index[(k, hy)], interiors[::-1])
            order, ids = instance.middle_orders[k]
            m = len(order.cliques)
            ci_hub, cj_hub = hubs[hx].clique, hubs[hy].clique
            new_cx = frozenset(_left_ids(ids, ci_hub))
            new_cy = frozenset(_left_ids(ids, cj_hub))
            assert order.cliques[0] == new_cx and order.cliques[-1] == new_cy
            base = used_x + 1  # one spare node after the x side
            assert base + (m - 2) <= len(interiors) - used_y - 1
            # middle clique j (1..m-2) sits at interiors[base + j - 1]
            for new_v in range(len(ids)):
                old_v = ids[new_v]
                lo, hi = order.span(new_v)
                in_x = old_v in ci_hub
                in_y = old_v in cj_hub
                if in_x and in_y:
                    subtrees[old_v].update(interiors)
                elif in_x:
                    assert lo == 0
                    if hi >= 1:
                        # contiguous from the x end through its last middle clique
                        subtrees[old_v].update(interiors[: base + hi])
                elif in_y:
                    assert hi == m - 1
                    if lo <= m - 2:
                        subtrees[old_v].update(interiors[base + lo - 1:])
                else:
                    assert 1 <= lo and hi <= m - 2
                    subtrees[old_v].update(
                        interiors[base + lo - 1: base + hi]
                    )
        else:
            hub = hx if hx is not None else hy
            near = interiors if hx is not None else interiors[::-1]
            place_side(side_index[(k, hub)], near)
    rep = Representation(host, tuple(frozenset(s) for s in subtrees))
    report = verify_representation(g, rep)
    if not report.valid:
        return Refutation("verification", report.violations)
    return rep


def recognize_tree(g: Graph, t: Graph):
    """Representation of g on a subdivision of the tree t, or TreeRefutation."""
    _validate_tree(t)
    ts = smooth_tree(t)
    if g.n == 0:
        host = subdivide_edges(ts, [1] * ts.m)
        return Representation(host, ())
    branch_points = sorted(b for b in ts.vertices() if ts.degree(b) >= 3)
    if not branch_points:
        return _interval_route(g, ts)
    peo = is_chordal(g)
    if isinstance(peo, Refutation):
        return TreeRefutation(reason="not-chordal")
    cliques = peo_cliques(g, peo)
    stages = {"structural": 0, "middle": 0, "interval": 0, "coloring": 0,
              "assembly": 0}
    for combo in itertools.product(cliques, repeat=len(branch_points)):
        f = dict(zip(branch_points, combo))
        out = middle_components(g, ts, f)
        if isinstance(out, Refutation):
            key = "middle" if out.reason.startswith("forced") else "structural"
            stages[key] += 1
            continue
        instance = build_restricted_stars(g, ts, f, forced_input=out)
        if isinstance(instance, Refutation):
            stages["interval" if instance.reason == "middle-interval"
                   else "coloring"] += 1
            continue
        if instance.classes:
            incomp = Graph(
                len(instance.classes),
                [
                    (i, j)
                    for i in range(len(instance.classes))
                    for j in range(i + 1, len(instance.classes))
                    if (i, j) not in instance.relation
                    and (j, i) not in instance.relation
                ],
            )
            lists = {i: set(instance.lists[i]) for i in range(len(instance.classes))}
            # colors must be dense 1..s for the solver
            used = sorted(set().union(*lists.values()))
            remap = {c: i + 1 for i, c in enumerate(used)}
            dense = {i: {remap[c] for c in cs} for i, cs in lists.items()}
            coloring = solve_list_coloring_cocomparability(incomp, dense)
            if coloring is None or isinstance(coloring, Refutation):
                stages["coloring"] += 1
                continue
            back = {i + 1: c for i, c in enumerate(used)}
            coloring = {ci: back[col] for ci, col in coloring.items()}
        else:
            coloring = {}
        rep = _assemble_tree(g, ts, instance, coloring)
        if isinstance(rep, Refutation):
            stages["assembly"] += 1
            continue
        return rep
    return TreeRefutation(reason="no-assignment", stage_counts=stages)
