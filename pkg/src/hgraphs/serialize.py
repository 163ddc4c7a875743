"""JSON and DIMACS wire formats for the core types.

JSON dumps are canonical (sorted keys, fixed separators) so identical inputs
round-trip to identical bytes.
"""

import json

from .errors import StructuralError
from .graphs import Graph, HostModel, Representation


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def graph_to_obj(g: Graph):
    obj = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels:
        obj["labels"] = {str(k): v for k, v in g.labels.items()}
    return obj


def graph_from_obj(obj) -> Graph:
    try:
        labels = {int(k): v for k, v in obj.get("labels", {}).items()}
        return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]], labels)
    except (KeyError, TypeError) as exc:
        raise StructuralError(f"bad graph object: {exc}") from exc


def graph_to_json(g: Graph) -> str:
    return _dumps(graph_to_obj(g))


def graph_from_json(text: str) -> Graph:
    return graph_from_obj(json.loads(text))


def host_to_obj(h: HostModel):
    return {
        "pattern": graph_to_obj(h.pattern),
        "subdivision": graph_to_obj(h.subdivision),
        "edge_paths": [list(p) for p in h.edge_paths],
    }


def host_from_obj(obj) -> HostModel:
    try:
        model = HostModel(
            graph_from_obj(obj["pattern"]),
            graph_from_obj(obj["subdivision"]),
            tuple(tuple(p) for p in obj["edge_paths"]),
        )
    except (KeyError, TypeError) as exc:
        raise StructuralError(f"bad host object: {exc}") from exc
    model.validate()
    return model


def host_to_json(h: HostModel) -> str:
    return _dumps(host_to_obj(h))


def host_from_json(text: str) -> HostModel:
    return host_from_obj(json.loads(text))


def representation_to_obj(rep: Representation):
    return {
        "host": host_to_obj(rep.host),
        "subtrees": {str(v): sorted(t) for v, t in enumerate(rep.subtrees)},
    }


def representation_from_obj(obj) -> Representation:
    try:
        host = host_from_obj(obj["host"])
        raw = obj["subtrees"]
        keys = sorted(int(k) for k in raw)
    except (KeyError, TypeError, ValueError) as exc:
        raise StructuralError(f"bad representation object: {exc}") from exc
    if keys != list(range(len(keys))):
        raise StructuralError("subtree keys must be dense 0..n-1")
    subtrees = tuple(frozenset(raw[str(v)]) for v in keys)
    return Representation(host, subtrees)


def representation_to_json(rep: Representation) -> str:
    return _dumps(representation_to_obj(rep))


def representation_from_json(text: str) -> Representation:
    return representation_from_obj(json.loads(text))


def graph_from_dimacs(text: str) -> Graph:
    """DIMACS edge-list import ("p edge n m" header, "e u v" lines, 1-based)."""
    n = None
    edges = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "col"):
                raise StructuralError(f"bad problem line: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise StructuralError("edge line before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u != v and (u, v) not in edges and (v, u) not in edges:
                edges.append((u, v))
        else:
            raise StructuralError(f"unrecognized DIMACS line: {line!r}")
    if n is None:
        raise StructuralError("missing problem line")
    return Graph(n, edges)
