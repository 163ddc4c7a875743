"""Bounded list coloring on k-thin and co-comparability graphs.

The solver reduces an instance to reachability in a layered acyclic digraph:
layer r holds one node per matrix of per-color, per-class suffix-forbiddance
counters, and an arc into a node tells which color vertex r can take.  Layers
are astronomically large, so only nodes on the backward closure of the target
are ever materialized; every materialized node still satisfies the declared
counter bounds and the at-most-s-incoming-arcs law.
"""

from dataclasses import dataclass

from .graphs import Graph
from .intervals import Refutation
from .posets import comparability_ordering, min_chain_cover, Poset


@dataclass(frozen=True)
class ThinStructure:
    """Consistent vertex order and class partition with per-class degree caps."""

    order: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    delta_less: tuple[int, ...]

    def class_of(self, v: int) -> int:
        for j, cls in enumerate(self.classes):
            if v in cls:
                return j
        raise ValueError(f"vertex {v} in no class")

    def verify_consistent(self, g: Graph) -> None:
        pos = {v: i for i, v in enumerate(self.order)}
        cls = {}
        for j, c in enumerate(self.classes):
            for v in c:
                cls[v] = j
        for r in self.order:
            for p in self.order:
                for q in self.order:
                    if pos[p] < pos[q] < pos[r] and cls[p] == cls[q]:
                        if g.has_edge(r, p) and not g.has_edge(r, q):
                            raise AssertionError(
                                f"ordering/partition inconsistent at {p},{q},{r}"
                            )


def lower_neighbors(g: Graph, ts: ThinStructure, r_idx: int, j: int) -> int:
    """|N(v_r, j)_<|: earlier neighbours of the r-th vertex inside class j."""
    v = ts.order[r_idx]
    earlier = set(ts.order[:r_idx])
    return sum(1 for u in g.adj[v] if u in earlier and u in ts.classes[j])


def thin_structure_from_coloring(g: Graph):
    """Thin structure for a co-comparability graph, or a Refutation.

    Order: a comparability ordering of the complement.  Classes: chains of the
    complement order, i.e. a proper coloring of g with chi(g) classes.
    """
    comp = g.complement()
    order = comparability_ordering(comp)
    if isinstance(order, Refutation):
        return order
    pos = {v: i for i, v in enumerate(order)}
    oriented = [(u, v) if pos[u] < pos[v] else (v, u) for u, v in comp.edges()]
    poset = Poset(g.n, oriented)
    chains = min_chain_cover(poset)
    classes = tuple(tuple(sorted(c, key=lambda v: pos[v])) for c in chains)
    ts = ThinStructure(order=tuple(order), classes=classes, delta_less=())
    deltas = tuple(
        max(
            (lower_neighbors(g, ts, r, j) for r in range(g.n)),
            default=0,
        )
        for j in range(len(classes))
    )
    ts = ThinStructure(order=tuple(order), classes=classes, delta_less=deltas)
    ts.verify_consistent(g)
    return ts


def _predecessor(beta, i_star, j_r, lower_count, s, k):
    """Source-node counters for the arc of color i_star into (r, beta)."""
    out = []
    for i in range(s):
        row = []
        for j in range(k):
            b = beta[i][j]
            if i == i_star:
                row.append(max(lower_count[j], b))
            elif j == j_r:
                row.append(max(0, b - 1))
            else:
                row.append(b)
        out.append(tuple(row))
    return tuple(out)


@dataclass
class LayeredDigraph:
    """Materialized part of the reachability digraph (backward from target)."""

    s: int
    k: int
    layer_size_formula: int
    nodes: dict  # (r, beta) -> list of (color, predecessor key or ('z', color))
    target: tuple


def build_layered_digraph(g: Graph, ts: ThinStructure, lists: dict):
    """Backward closure of the target node, with per-arc colors.

    `lists` maps every vertex to a subset of 1..s; s is the size of the union.
    """
    colors = sorted(set().union(*lists.values())) if lists else []
    s = len(colors)
    if any(c < 1 or c != int(c) for c in colors):
        raise ValueError("colors must be positive integers")
    if colors and colors != list(range(1, s + 1)):
        raise ValueError("colors must be dense 1..s")
    n = g.n
    k = len(ts.classes)
    if set(lists) != set(range(n)):
        raise ValueError("lists must cover every vertex")
    formula = 1
    for j in range(k):
        formula *= (ts.delta_less[j] + 1) ** s
    lower = [
        [lower_neighbors(g, ts, r, j) for j in range(k)] for r in range(n)
    ]
    class_of = {}
    for j, cls in enumerate(ts.classes):
        for v in cls:
            class_of[v] = j
    zero = tuple(tuple(0 for _ in range(k)) for _ in range(s))
    target = (n, zero)
    nodes = {}
    stack = [target]
    seen = {target}
    while stack:
        key = stack.pop()
        r, beta = key
        v = ts.order[r - 1]
        j_r = class_of[v]
        allowed = [i for i in lists[v] if beta[i - 1][j_r] == 0]
        arcs = []
        assert len(allowed) <= s, "at most s incoming arcs per node"
        for color in allowed:
            if r == 1:
                arcs.append((color, ("z", color)))
                continue
            pred_beta = _predecessor(beta, color - 1, j_r, lower[r - 1], s, k)
            for i in range(s):
                for j in range(k):
                    assert 0 <= pred_beta[i][j] <= ts.delta_less[j], (
                        "counter bound violated"
                    )
            pred = (r - 1, pred_beta)
            arcs.append((color, pred))
            if pred not in seen:
                seen.add(pred)
                stack.append(pred)
        nodes[key] = arcs
    return LayeredDigraph(
        s=s, k=k, layer_size_formula=formula, nodes=nodes, target=target
    )


def solve_list_coloring(g: Graph, ts: ThinStructure, lists: dict):
    """Proper list coloring extracted from a source-to-target path, or None.

    Among feasible colorings, returns the one whose color sequence along the
    thin order is lexicographically smallest.
    """
    if g.n == 0:
        return {}
    if any(not lists[v] for v in g.vertices()):
        return None
    digraph = build_layered_digraph(g, ts, lists)
    n = g.n
    by_layer = [set() for _ in range(n + 1)]
    for key in digraph.nodes:
        by_layer[key[0]].add(key)
    # every materialized node reaches the target; check the source side
    forward = set()
    for r in range(1, n + 1):
        nxt = set()
        for key in by_layer[r]:
            for color, pred in digraph.nodes[key]:
                if r == 1 or pred in forward:
                    nxt.add(key)
                    break
        forward = nxt
        if not forward:
            return None
    if digraph.target not in forward:
        return None
    # greedy smallest color per layer; any live node still reaches the target,
    # so a per-layer minimum is the lexicographic minimum overall
    coloring = {}
    live = set()
    for r in range(1, n + 1):
        best = None
        nxt = set()
        for key in by_layer[r]:
            for color, pred in digraph.nodes[key]:
                if r > 1 and pred not in live:
                    continue
                if best is None or color < best:
                    best = color
                    nxt = {key}
                elif color == best:
                    nxt.add(key)
        assert best is not None
        coloring[ts.order[r - 1]] = best
        live = nxt
    _check_coloring(g, lists, coloring)
    return coloring


def _check_coloring(g: Graph, lists, coloring) -> None:
    for v in g.vertices():
        assert coloring[v] in lists[v], f"color of {v} not in its list"
    for u, v in g.edges():
        assert coloring[u] != coloring[v], f"improper edge ({u},{v})"


def solve_list_coloring_cocomparability(g: Graph, lists: dict):
    """List coloring for a co-comparability graph, or None / Refutation.

    Pre-checks plain s-colorability (chains of the complement order), then
    runs the thin-structure solver.
    """
    colors = sorted(set().union(*lists.values())) if lists else []
    s = len(colors)
    if g.n == 0:
        return {}
    ts = thin_structure_from_coloring(g)
    if isinstance(ts, Refutation):
        return ts
    if len(ts.classes) > s:
        return None  # not even s-colorable, lists cannot help
    return solve_list_coloring(g, ts, lists)
