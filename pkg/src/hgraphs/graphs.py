"""Simple graphs, subdivided host models, and the subtree-representation verifier.

Every other module trades in these three types.  A Representation maps each
graph vertex to a connected node set of the host subdivision; the verifier is
the universal acceptance gate: recognizers and constructions must emit
representations that pass it.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import StructuralError


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Immutable after construction; labels are metadata only.
    """

    __slots__ = ("n", "adj", "labels", "_edges")

    def __init__(self, n: int, edges=(), labels=None):
        if n < 0:
            raise StructuralError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise StructuralError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise StructuralError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        self.labels = dict(labels) if labels else {}
        self._edges = tuple(
            (u, v) for u in range(n) for v in sorted(self.adj[u]) if u < v
        )

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self):
        return self._edges

    def vertices(self):
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v):
        return self.adj[v]

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            [
                (u, v)
                for u in range(self.n)
                for v in range(u + 1, self.n)
                if v not in self.adj[u]
            ],
        )

    def induced(self, vertices):
        """Induced subgraph plus the old-id list indexed by new id."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v]) for u, v in self._edges if u in index and v in index
        ]
        return Graph(len(keep), edges), keep

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_connected_subset(g: Graph, nodes) -> bool:
    """Whether `nodes` induces a connected nonempty subgraph of g."""
    nodes = set(nodes)
    if not nodes:
        return False
    start = next(iter(nodes))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in nodes and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == nodes


@dataclass(frozen=True)
class HostModel:
    """A pattern graph, one of its subdivisions, and the edge-to-path map.

    Convention: subdivision node i < pattern.n is the image of pattern vertex
    i; edge_paths[k] is the full node path (u, interior..., v) replacing
    pattern edge k in pattern.edges() order.
    """

    pattern: Graph
    subdivision: Graph
    edge_paths: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        pat, sub = self.pattern, self.subdivision
        if len(self.edge_paths) != pat.m:
            raise StructuralError("edge_paths must align with pattern edges")
        seen_interior = set()
        for (u, v), path in zip(pat.edges(), self.edge_paths):
            if path[0] != u or path[-1] != v:
                raise StructuralError(f"path for edge ({u},{v}) has wrong endpoints")
            for a, b in zip(path, path[1:]):
                if not sub.has_edge(a, b):
                    raise StructuralError(f"path step ({a},{b}) missing in subdivision")
            for x in path[1:-1]:
                if x < pat.n or x in seen_interior:
                    raise StructuralError(f"interior node {x} reused or not fresh")
                if sub.degree(x) != 2:
                    raise StructuralError(f"interior node {x} must have degree 2")
                seen_interior.add(x)
        if pat.n + len(seen_interior) != sub.n:
            raise StructuralError("subdivision has nodes on no edge path")
        for v in range(pat.n):
            if sub.degree(v) != pat.degree(v):
                raise StructuralError(f"pattern node {v} changed degree")

    def pattern_size(self) -> tuple[int, int]:
        """(|V|, |E|) of the pattern, kept separate on purpose."""
        return self.pattern.n, self.pattern.m

    def path_of_edge(self, k: int) -> tuple[int, ...]:
        return self.edge_paths[k]


@dataclass(frozen=True)
class Representation:
    """vertex -> connected node set of host.subdivision, adjacency by intersection."""

    host: HostModel
    subtrees: tuple[frozenset[int], ...]


@dataclass
class VerificationReport:
    valid: bool
    violations: list = field(default_factory=list)


def verify_representation(g: Graph, rep: Representation) -> VerificationReport:
    """Check rep certifies g: connected subtrees, intersection iff adjacency.

    Raises StructuralError on a vertex-key mismatch; any semantic failure is
    reported as a violation instead.
    """
    if len(rep.subtrees) != g.n:
        raise StructuralError(
            f"representation keys {len(rep.subtrees)} != vertex count {g.n}"
        )
    sub = rep.host.subdivision
    violations = []
    for v, tree in enumerate(rep.subtrees):
        if not tree:
            violations.append(("empty", v))
            continue
        if any(x < 0 or x >= sub.n for x in tree):
            violations.append(("outside-host", v))
            continue
        if not is_connected_subset(sub, tree):
            violations.append(("disconnected", v))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            meets = bool(rep.subtrees[u] & rep.subtrees[v])
            if meets and not g.has_edge(u, v):
                violations.append(("extra-intersection", u, v))
            elif not meets and g.has_edge(u, v):
                violations.append(("missing-intersection", u, v))
    return VerificationReport(valid=not violations, violations=violations)


def canonical_subdivision(h: Graph, n: int) -> HostModel:
    """Subdivide every edge of h exactly 2n times (enough for n-vertex guests)."""
    if n < 1:
        raise ValueError("subdivision parameter must be >= 1")
    next_id = h.n
    paths = []
    edges = []
    for u, v in h.edges():
        interior = list(range(next_id, next_id + 2 * n))
        next_id += 2 * n
        path = [u] + interior + [v]
        paths.append(tuple(path))
        edges.extend(zip(path, path[1:]))
    model = HostModel(h, Graph(next_id, edges), tuple(paths))
    model.validate()
    return model


def subdivide_edges(h: Graph, counts) -> HostModel:
    """Host with counts[k] interior nodes on pattern edge k (0 allowed)."""
    next_id = h.n
    paths = []
    edges = []
    for k, (u, v) in enumerate(h.edges()):
        interior = list(range(next_id, next_id + counts[k]))
        next_id += counts[k]
        path = [u] + interior + [v]
        paths.append(tuple(path))
        edges.extend(zip(path, path[1:]))
    model = HostModel(h, Graph(next_id, edges), tuple(paths))
    model.validate()
    return model


def resubdivide_representation(
    rep: Representation, extra: int
) -> Representation:
    """Re-express rep on a finer host with `extra` more interiors per edge.

    Each old node owns a segment of the new path (itself plus the fresh nodes
    inserted after it), so intersections are preserved exactly.
    """
    host = rep.host
    pat = host.pattern
    counts = [len(p) - 2 + extra for p in host.edge_paths]
    fine = subdivide_edges(pat, counts)
    # each old node owns a contiguous run of the finer path
    segment: dict[int, set[int]] = {v: {v} for v in range(pat.n)}
    for old_path, new_path in zip(host.edge_paths, fine.edge_paths):
        old_in, new_in = list(old_path[1:-1]), list(new_path[1:-1])
        if not old_in:
            # no old interior to stretch: hang the fresh nodes off the near end
            segment[old_path[0]].update(new_in)
            continue
        for i, x in enumerate(old_in):
            segment[x] = {new_in[i]}
        segment[old_in[-1]].update(new_in[len(old_in):])
    subtrees = tuple(
        frozenset().union(*(segment[x] for x in tree)) if tree else frozenset()
        for tree in rep.subtrees
    )
    return Representation(fine, subtrees)


def contract_interiors(model: HostModel) -> Graph:
    """Contract every edge path back to a single edge; recovers the pattern."""
    return Graph(
        model.pattern.n, [(p[0], p[-1]) for p in model.edge_paths]
    )
