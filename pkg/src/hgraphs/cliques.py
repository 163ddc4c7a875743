"""Maximum clique via clique-count bounds (Helly hosts) and clique-cutset
decomposition (cactus hosts).

The Helly route never needs a representation: enumerate maximal cliques with
the |V(H)| + |E(H)|*n cutoff; blowing past it proves no Helly representation
exists.  The cactus route decomposes on clique minimal separators and solves
each atom exactly.
"""

from dataclasses import dataclass

from .graphs import Graph, connected_components
from .intervals import Refutation, is_chordal, maximal_cliques, peo_cliques
from .separators import minimal_separators


@dataclass
class NotHelly:
    """Maximal-clique count exceeded the Helly bound for this pattern."""

    bound: int
    found: int


def max_clique_helly(g: Graph, h: Graph):
    """Largest clique, or a NotHelly signal past the clique-count bound.

    Staying under the bound proves nothing about Helly-ness; exceeding it is a
    certificate that no Helly representation on h exists.
    """
    if g.n == 0:
        return []
    bound = h.n + h.m * g.n
    enum = maximal_cliques(g, cutoff=bound)
    if enum.overflow:
        return NotHelly(bound=bound, found=len(enum.cliques))
    best = max(enum.cliques, key=lambda c: (len(c), [-v for v in sorted(c)]))
    return sorted(best)


@dataclass(frozen=True)
class AtomDecomposition:
    atoms: tuple[frozenset[int], ...]

    def separators(self):
        out = []
        for i, a in enumerate(self.atoms):
            for b in self.atoms[i + 1:]:
                if a & b:
                    out.append(a & b)
        return out

    def validate(self, g: Graph) -> None:
        union = set()
        for a in self.atoms:
            union |= a
        assert union == set(g.vertices()), "atoms must cover the graph"
        covered = set(g.edges())
        for a in self.atoms:
            for u in sorted(a):
                for v in sorted(a):
                    if u < v and g.has_edge(u, v):
                        covered.discard((u, v))
        assert not covered, "every edge must lie inside an atom"
        for s in self.separators():
            assert g.is_clique(s), "atom intersections must be cliques"


def _find_clique_separator(g: Graph):
    if g.n <= 1 or len(connected_components(g)) != 1:
        return None
    for s in sorted(minimal_separators(g), key=lambda s: (len(s), sorted(s))):
        if g.is_clique(s):
            return s
    return None


def clique_cutset_decomposition(g: Graph) -> AtomDecomposition:
    """Atoms of g: split on clique minimal separators until none remain."""
    atoms = []
    stack = [frozenset(g.vertices())]
    while stack:
        part = stack.pop()
        piece, ids = g.induced(sorted(part))
        comps = connected_components(piece)
        if len(comps) > 1:
            stack.extend(frozenset(ids[v] for v in comp) for comp in comps)
            continue
        sep = _find_clique_separator(piece)
        if sep is None:
            atoms.append(part)
            continue
        sep_old = frozenset(ids[v] for v in sep)
        for comp in connected_components(Graph(
            piece.n,
            [(u, v) for u, v in piece.edges() if u not in sep and v not in sep],
        )):
            comp = comp - sep
            if comp:
                stack.append(frozenset(ids[v] for v in comp) | sep_old)
    decomposition = AtomDecomposition(atoms=tuple(sorted(atoms, key=sorted)))
    decomposition.validate(g)
    return decomposition


def _branch_bound_clique(g: Graph, cap: int = 64) -> list[int]:
    """Exact maximum clique by branch and bound (size-capped stand-in for a
    dedicated circular-arc routine)."""
    if g.n > cap:
        raise ValueError(f"atom too large for exact search ({g.n} > {cap})")
    best: list[int] = []

    def extend(clique, candidates):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i <= len(best):
                return
            extend(clique + [v], [u for u in candidates[i + 1:] if g.has_edge(u, v)])

    extend([], list(g.vertices()))
    return best


def max_clique_cactus(g: Graph) -> list[int]:
    """Largest clique of a cactus-host guest via clique-cutset decomposition.

    Chordal atoms go through the elimination ordering; others through exact
    branch and bound.
    """
    if g.n == 0:
        return []
    best = []
    for atom in clique_cutset_decomposition(g).atoms:
        piece, ids = g.induced(sorted(atom))
        peo = is_chordal(piece)
        if not isinstance(peo, Refutation):
            cliques = peo_cliques(piece, peo)
            local = max(cliques, key=lambda c: (len(c), [-v for v in sorted(c)]))
            local = sorted(local)
        else:
            local = sorted(_branch_bound_clique(piece))
        cand = sorted(ids[v] for v in local)
        if (len(cand), [-v for v in cand]) > (len(best), [-v for v in best]):
            best = cand
    return best
