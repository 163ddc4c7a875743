"""Recognition of intersection graphs of subdivided stars.

Pipeline, per candidate maximal clique C placed at the hub: group the
components of G - C into equivalence classes by neighbourhood, order the
classes by the domination relation (a class precedes another when each of its
vertices sees the other's whole neighbourhood in C), cover that order by at
most d chains, and lay every chain out on one branch as an interval model
with C leftmost.  Accepted graphs always come with a verified representation.
"""

from dataclasses import dataclass, field

from .graphs import (
    Graph,
    HostModel,
    Representation,
    connected_components,
    subdivide_edges,
    verify_representation,
)
from .intervals import (
    CliqueOrder,
    Refutation,
    interval_order_with_ends,
    is_chordal,
    peo_cliques,
)
from .posets import Poset, min_chain_cover


def star_pattern(d: int) -> Graph:
    """K_{1,d}: hub 0, leaves 1..d."""
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


@dataclass(frozen=True)
class ComponentPoset:
    """Equivalence classes of G - C components under the domination order."""

    clique: frozenset[int]
    classes: tuple[tuple[frozenset[int], ...], ...]
    neighborhoods: tuple[frozenset[int], ...]
    relation: frozenset[tuple[int, int]]  # (i, j): class i dominates class j

    def poset(self) -> Poset:
        return Poset(len(self.classes), self.relation)

    def members(self, i: int) -> list[int]:
        return sorted(v for comp in self.classes[i] for v in comp)


def component_poset(g: Graph, c) -> ComponentPoset:
    """Classes and domination relation of the components of g - c.

    c must be a maximal clique.  Components whose vertices all share one
    neighbourhood set are equivalent and merged; the relation is evaluated on
    one representative per class.
    """
    c = frozenset(c)
    if not g.is_clique(c):
        raise ValueError("c is not a clique")
    if any(all(g.has_edge(v, u) for u in c) for v in g.vertices() if v not in c):
        raise ValueError("c is not a maximal clique")
    rest = [v for v in g.vertices() if v not in c]
    sub, old_ids = g.induced(rest)
    comps = [
        frozenset(old_ids[v] for v in comp) for comp in connected_components(sub)
    ]
    comps.sort(key=sorted)
    nb = {v: frozenset(g.adj[v] & c) for v in rest}
    groups: dict[object, list[frozenset[int]]] = {}
    for comp in comps:
        hoods = {nb[v] for v in comp}
        if len(hoods) == 1:
            key = ("uniform", next(iter(hoods)))
        else:
            key = ("own", comp)
        groups.setdefault(key, []).append(comp)
    classes = tuple(tuple(v) for v in
                    sorted(groups.values(), key=lambda cs: sorted(cs[0])))
    hood_of = tuple(
        frozenset().union(*(nb[v] for v in cls[0])) for cls in classes
    )
    relation = set()
    for i, cls_i in enumerate(classes):
        rep_i = cls_i[0]
        for j in range(len(classes)):
            if i == j:
                continue
            if all(hood_of[j] <= nb[u] for u in rep_i):
                relation.add((i, j))
    cp = ComponentPoset(
        clique=c,
        classes=classes,
        neighborhoods=hood_of,
        relation=frozenset(relation),
    )
    # the merge step must leave a strict order (mutual domination means
    # equivalence, which merging removed)
    cp.poset()
    return cp


def build_branch_representation(g: Graph, cp: ComponentPoset, chain):
    """Integer interval layout of G[C, chain classes] with C leftmost.

    Returns {vertex: (lo, hi)} over clique positions; C occupies position 0.
    """
    chain = list(chain)
    for a in range(len(chain)):
        for b in range(a + 1, len(chain)):
            if (chain[a], chain[b]) not in cp.relation:
                raise ValueError("chain is not monotone in the domination order")
    members = [v for i in chain for v in cp.members(i)]
    for i in chain:
        piece, ids = g.induced(sorted(cp.clique) + cp.members(i))
        out = interval_order_with_ends(
            piece, left=[k for k, old in enumerate(ids) if old in cp.clique]
        )
        if isinstance(out, Refutation):
            raise ValueError(f"class {i} admits no C-leftmost interval model")
    sub, old_ids = g.induced(sorted(cp.clique) + members)
    back = {new: old for new, old in enumerate(old_ids)}
    new_c = [k for k, old in enumerate(old_ids) if old in cp.clique]
    order = interval_order_with_ends(sub, left=new_c)
    assert not isinstance(order, Refutation), "chain layout must exist"
    layout = {}
    for new_v in sub.vertices():
        lo, hi = order.span(new_v)
        layout[back[new_v]] = (lo, hi)
    for u, (lo, hi) in layout.items():
        for v, (lo2, hi2) in layout.items():
            if u < v:
                meets = lo <= hi2 and lo2 <= hi
                assert meets == g.has_edge(u, v), "layout intersection check"
    return layout


@dataclass
class StarRefutation:
    reason: str
    hole: list | None = None
    per_clique: dict = field(default_factory=dict)

    def to_obj(self):
        return {
            "accepted": False,
            "reason": self.reason,
            "per_clique": {
                ",".join(map(str, sorted(k))): v for k, v in self.per_clique.items()
            },
        }


def _assemble_star(g: Graph, cp: ComponentPoset, chains, d: int) -> Representation:
    """Representation on a subdivided star from per-branch clique orders."""
    budget = max(3 * g.n, 1)
    pattern = star_pattern(d)
    host = subdivide_edges(pattern, [budget] * d)
    center = 0
    subtrees = [set() for _ in range(g.n)]
    for v in cp.clique:
        subtrees[v].add(center)
    for branch, chain in enumerate(chains):
        path = host.edge_paths[branch]
        interiors = path[1:-1]
        members = [v for i in chain for v in cp.members(i)]
        sub, old_ids = g.induced(sorted(cp.clique) + members)
        new_c = frozenset(k for k, old in enumerate(old_ids) if old in cp.clique)
        order = interval_order_with_ends(sub, left=new_c)
        assert not isinstance(order, Refutation)
        assert order.cliques[0] == new_c
        assert len(order.cliques) - 1 <= len(interiors)
        for new_v in sub.vertices():
            lo, hi = order.span(new_v)
            old_v = old_ids[new_v]
            if old_v in cp.clique:
                assert lo == 0
                subtrees[old_v].update(interiors[: hi])
            else:
                assert lo >= 1
                subtrees[old_v].update(interiors[lo - 1: hi])
    rep = Representation(host, tuple(frozenset(t) for t in subtrees))
    report = verify_representation(g, rep)
    assert report.valid, report.violations
    return rep


def recognize_star(g: Graph, d: int):
    """Representation of g on a subdivided d-star, or a StarRefutation.

    Tries every maximal clique as the hub clique; a clique fails on the
    interval condition (some class has no C-leftmost model) or on the chain
    cover (domination order needs more than d chains).
    """
    if d < 2:
        raise ValueError("star recognition needs d >= 2")
    if g.n == 0:
        pattern = star_pattern(d)
        host = subdivide_edges(pattern, [1] * d)
        return Representation(host, ())
    peo = is_chordal(g)
    if isinstance(peo, Refutation):
        return StarRefutation(reason="not-chordal", hole=peo.witness)
    failures = {}
    for c in peo_cliques(g, peo):
        cp = component_poset(g, c)
        cond1 = True
        for i in range(len(cp.classes)):
            piece, ids = g.induced(sorted(c) + cp.members(i))
            order = interval_order_with_ends(
                piece, left=[k for k, old in enumerate(ids) if old in c]
            )
            if isinstance(order, Refutation):
                cond1 = False
                break
        if not cond1:
            failures[c] = "interval-condition"
            continue
        chains = min_chain_cover(cp.poset())
        if len(chains) > d:
            failures[c] = "chain-cover"
            continue
        while len(chains) < d:
            chains.append([])
        return _assemble_star(g, cp, chains, d)
    return StarRefutation(reason="no-hub-clique", per_clique=failures)
