"""Minimal separators and representation-derived candidate generation.

Enumeration seeds close separators (component neighbourhoods of closed
vertex neighbourhoods) and expands each separator through its own vertices;
every emitted set is re-checked to have two full components.  Candidate
generation inverts a representation: a separator is the set of vertices whose
subtree covers one of at most two chosen host edges per pattern edge (cactus
hosts: at most two edges total, on one cycle).
"""

import itertools
from dataclasses import dataclass

from .errors import OracleCapError
from .graphs import Graph, Representation, connected_components


class SeparatorOverflow(Exception):
    def __init__(self, found):
        super().__init__(f"more than {len(found) - 1} minimal separators")
        self.found = found


def _components_after(g: Graph, removed) -> list[frozenset[int]]:
    removed = set(removed)
    seen = set(removed)
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_minimal_separator(g: Graph, s) -> bool:
    """s has at least two components seeing all of it (full components)."""
    s = frozenset(s)
    if not s:
        return False
    full = 0
    for comp in _components_after(g, s):
        hood = set()
        for v in comp:
            hood |= g.adj[v]
        if s <= hood:
            full += 1
    return full >= 2


def minimal_separators(g: Graph, cap: int = 100_000) -> set[frozenset[int]]:
    """All minimal separators of a connected graph; SeparatorOverflow past cap."""
    if g.n == 0 or len(connected_components(g)) != 1:
        raise ValueError("graph must be connected and nonempty")
    found: set[frozenset[int]] = set()
    queue: list[frozenset[int]] = []

    def offer(s):
        if s and s not in found and is_minimal_separator(g, s):
            found.add(s)
            queue.append(s)
            if len(found) > cap:
                raise SeparatorOverflow(found)

    for v in range(g.n):
        for comp in _components_after(g, g.adj[v] | {v}):
            hood = set()
            for u in comp:
                hood |= g.adj[u]
            offer(frozenset(hood - comp))
    while queue:
        s = queue.pop()
        for x in sorted(s):
            for comp in _components_after(g, s | g.adj[x]):
                hood = set()
                for u in comp:
                    hood |= g.adj[u]
                offer(frozenset(hood - comp))
    return found


@dataclass(frozen=True)
class SeparatorCandidate:
    edges: tuple[tuple[int, int], ...]  # host edges, each sorted
    vertices: frozenset[int]


def _host_edge_groups(rep: Representation):
    """Host edges grouped by pattern edge, deduplicated by covering set.

    Edges covered by no subtree are dropped: they cannot contribute vertices.
    """
    sub = rep.host.subdivision
    groups = []
    for path in rep.host.edge_paths:
        seen_covers = {}
        for a, b in zip(path, path[1:]):
            cover = frozenset(
                v for v in range(len(rep.subtrees))
                if a in rep.subtrees[v] and b in rep.subtrees[v]
            )
            if cover and cover not in seen_covers:
                seen_covers[cover] = tuple(sorted((a, b)))
        groups.append(sorted(seen_covers.items(), key=lambda kv: kv[1]))
    return groups


def _pattern_cycles(pat: Graph) -> list[list[int]]:
    """Cycles of a cactus pattern as edge-index lists."""
    edge_index = {}
    for k, (u, v) in enumerate(pat.edges()):
        edge_index[(u, v)] = k
        edge_index[(v, u)] = k
    cycles = []
    seen_edges = set()
    parent = {}
    depth = {}

    def dfs(v, par):
        for w in pat.adj[v]:
            if w == par:
                continue
            if w in depth:
                if depth[w] < depth[v]:
                    cyc = []
                    x = v
                    while x != w:
                        cyc.append(edge_index[(x, parent[x])])
                        x = parent[x]
                    cyc.append(edge_index[(v, w)])
                    if any(e in seen_edges for e in cyc):
                        raise ValueError("pattern is not a cactus")
                    seen_edges.update(cyc)
                    cycles.append(sorted(cyc))
                continue
            depth[w] = depth[v] + 1
            parent[w] = v
            dfs(w, v)

    for r in range(pat.n):
        if r not in depth:
            depth[r] = 0
            parent[r] = None
            dfs(r, None)
    return cycles


def separator_candidates(
    g: Graph, rep: Representation, cactus_mode: bool = False, cap: int = 2_000_000
) -> list[SeparatorCandidate]:
    """Distinct candidate separators derived from the representation.

    General mode picks at most two covered host edges per pattern edge; cactus
    mode picks at most two edges total, both on one pattern cycle (or a single
    edge anywhere).
    """
    groups = _host_edge_groups(rep)
    out = {}

    def emit(pairs):
        verts = frozenset().union(*(c for c, _ in pairs)) if pairs else frozenset()
        if not verts:
            return
        key = verts
        if key not in out:
            out[key] = SeparatorCandidate(
                edges=tuple(e for _, e in pairs), vertices=verts
            )

    if cactus_mode:
        _pattern_cycles(rep.host.pattern)  # raises if not a cactus
        flat = [(k, cover, e) for k, grp in enumerate(groups) for cover, e in grp]
        for _, cover, e in flat:
            emit([(cover, e)])
        cycles = _pattern_cycles(rep.host.pattern)
        for cyc in cycles:
            pool = [(cover, e) for k in cyc for cover, e in groups[k]]
            for (c1, e1), (c2, e2) in itertools.combinations(pool, 2):
                emit([(c1, e1), (c2, e2)])
        return sorted(out.values(), key=lambda c: sorted(c.vertices))

    per_edge = []
    total = 1
    for grp in groups:
        choices = [()]
        choices += [((cover, e),) for cover, e in grp]
        choices += [
            ((c1, e1), (c2, e2))
            for (c1, e1), (c2, e2) in itertools.combinations(grp, 2)
        ]
        per_edge.append(choices)
        total *= len(choices)
        if total > cap:
            raise OracleCapError(
                f"candidate space {total} exceeds cap {cap}; use a coarser host"
            )
    for combo in itertools.product(*per_edge):
        emit([pair for part in combo for pair in part])
    return sorted(out.values(), key=lambda c: sorted(c.vertices))
