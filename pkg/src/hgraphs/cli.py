"""Command-line entry point: every pipeline with machine-readable JSON I/O.

Exit codes: 0 decided, 1 negative decision, 2 usage or structural error,
3 oracle/cap refusal.  Identical inputs produce byte-identical output.
"""

import argparse
import json
import sys

from . import serialize
from .cliques import NotHelly, max_clique_cactus, max_clique_helly
from .constructions import (
    build_membership_instance,
    complement_2subdiv_representation,
    realize_diamond_representation,
)
from .domination import (
    max_independent_set_hgraph,
    min_domset_hgraph,
    min_domset_star,
    min_independent_domset_hgraph,
)
from .errors import CyclePattern, OracleCapError, PromiseViolation, StructuralError
from .graphs import Graph, verify_representation
from .intervals import Refutation
from .listcolor import solve_list_coloring_cocomparability
from .oracles import (
    brute_ids,
    brute_list_coloring,
    brute_max_clique,
    brute_membership,
    brute_min_domset,
    brute_minimal_separators,
    brute_mis,
    random_height1_poset,
    random_subtree_rep,
)
from .posets import Poset, interval_dimension_height1
from .separators import SeparatorOverflow, minimal_separators, separator_candidates
from .stars import StarRefutation, recognize_star
from .trees import TreeRefutation, recognize_tree
from .treewidth import (
    TwRefusal,
    exact_treewidth,
    k_clique_fpt,
    list_k_coloring_fpt,
    tree_decomposition,
    width_fn_for_pattern,
)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _load_graph(path: str, fmt: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if fmt == "dimacs":
        return serialize.graph_from_dimacs(text)
    return serialize.graph_from_json(text)


def _load_rep(path: str):
    with open(path) as fh:
        return serialize.representation_from_json(fh.read())


def _load_poset(path: str) -> Poset:
    with open(path) as fh:
        obj = json.load(fh)
    return Poset(int(obj["n"]), [tuple(e) for e in obj["lt"]])


def _domination_witness(g: Graph, chosen):
    chosen_set = set(chosen)
    witness = {}
    for v in g.vertices():
        if v in chosen_set:
            witness[str(v)] = v
        else:
            witness[str(v)] = min(u for u in g.adj[v] if u in chosen_set)
    return witness


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    rep = _load_rep(args.rep)
    report = verify_representation(g, rep)
    _emit({"valid": report.valid,
           "violations": [list(map(str, v)) for v in report.violations]})
    return 0 if report.valid else 1


def _cmd_recognize_star(args) -> int:
    g = _load_graph(args.graph, args.format)
    out = recognize_star(g, args.d)
    if isinstance(out, StarRefutation):
        _emit(out.to_obj())
        return 1
    _emit({"accepted": True,
           "representation": serialize.representation_to_obj(out)})
    return 0


def _cmd_recognize_tree(args) -> int:
    g = _load_graph(args.graph, args.format)
    tree = _load_graph(args.tree, "json")
    out = recognize_tree(g, tree)
    if isinstance(out, TreeRefutation):
        _emit(out.to_obj())
        return 1
    _emit({"accepted": True,
           "representation": serialize.representation_to_obj(out)})
    return 0


def _cmd_domset(args) -> int:
    g = _load_graph(args.graph, args.format)
    rep = _load_rep(args.rep)
    pat = rep.host.pattern
    if args.variant == "mds":
        is_star = pat.m == pat.n - 1 and any(
            pat.degree(v) == pat.m for v in pat.vertices()
        ) and pat.n >= 3
        chosen = min_domset_star(g, rep) if is_star else min_domset_hgraph(g, rep)
        _emit({"set": chosen, "witness": _domination_witness(g, chosen)})
    elif args.variant == "mis":
        chosen = max_independent_set_hgraph(g, rep)
        _emit({"set": chosen})
    else:
        chosen = min_independent_domset_hgraph(g, rep)
        _emit({"set": chosen, "witness": _domination_witness(g, chosen)})
    return 0


def _cmd_clique(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.mode == "helly":
        pattern = _load_graph(args.pattern, "json")
        out = max_clique_helly(g, pattern)
        if isinstance(out, NotHelly):
            _emit({"signal": "not-helly", "bound": out.bound, "found": out.found})
            return 1
        _emit({"clique": out})
        return 0
    _emit({"clique": max_clique_cactus(g)})
    return 0


def _cmd_tw(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.target is None:
        width, order = exact_treewidth(g)
        _emit({"treewidth": width, "order": order})
        return 0
    out = tree_decomposition(g, args.target)
    if isinstance(out, TwRefusal):
        _emit({"refusal": True, "target": out.target,
               "lower_bound": out.lower_bound})
        return 1
    _emit({"width": out.width, "bags": [sorted(b) for b in out.bags],
           "tree_edges": [list(e) for e in out.tree.edges()]})
    return 0


def _width_fn(args):
    if args.pattern:
        return width_fn_for_pattern(_load_graph(args.pattern, "json"))
    return lambda k: 2 * k - 1  # pattern of treewidth one


def _cmd_kclique(args) -> int:
    g = _load_graph(args.graph, args.format)
    out = k_clique_fpt(g, args.k, _width_fn(args))
    if out is None:
        _emit({"clique": None})
        return 1
    _emit({"clique": out})
    return 0


def _cmd_listcolor(args) -> int:
    g = _load_graph(args.graph, args.format)
    with open(args.lists) as fh:
        lists = {int(k): set(v) for k, v in json.load(fh).items()}
    out = list_k_coloring_fpt(g, lists, args.k, _width_fn(args))
    if out is None:
        _emit({"coloring": None})
        return 1
    _emit({"coloring": {str(v): c for v, c in out.items()}})
    return 0


def _cmd_separators(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.candidates:
        rep = _load_rep(args.rep)
        cands = separator_candidates(g, rep, cactus_mode=args.cactus)
        _emit({"candidates": [
            {"edges": [list(e) for e in c.edges], "vertices": sorted(c.vertices)}
            for c in cands
        ]})
        return 0
    seps = minimal_separators(g, cap=args.cap)
    _emit({"separators": sorted(sorted(s) for s in seps)})
    return 0


def _cmd_reduce(args) -> int:
    if args.kind == "intdim":
        p = _load_poset(args.poset)
        instance = build_membership_instance(p)
        out = {"instance": serialize.graph_to_obj(instance)}
        realizer = interval_dimension_height1(p, 3)
        if isinstance(realizer, Refutation):
            out["interval_dimension_le_3"] = False
        else:
            rep = realize_diamond_representation(p, realizer)
            out["interval_dimension_le_3"] = True
            out["representation"] = serialize.representation_to_obj(rep)
        _emit(out)
        return 0
    g = _load_graph(args.graph, args.format)
    pattern = _load_graph(args.pattern, "json")
    with open(args.partition) as fh:
        partition = [set(part) for part in json.load(fh)]
    comp, rep = complement_2subdiv_representation(g, pattern, partition)
    _emit({"instance": serialize.graph_to_obj(comp),
           "representation": serialize.representation_to_obj(rep)})
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "subtree":
        pattern = _load_graph(args.pattern, "json")
        g, rep = random_subtree_rep(pattern, args.n, args.seed, sub=args.sub)
        _emit({"graph": serialize.graph_to_obj(g),
               "representation": serialize.representation_to_obj(rep),
               "manifest": {"host": serialize.graph_to_obj(pattern),
                            "n": args.n, "seed": args.seed}})
        return 0
    p = random_height1_poset(args.n, args.n_max, args.density / 100.0, args.seed)
    _emit({"poset": p.to_obj(),
           "manifest": {"n_min": args.n, "n_max": args.n_max,
                        "density_percent": args.density, "seed": args.seed}})
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.op == "membership":
        pattern = _load_graph(args.pattern, "json")
        answer = brute_membership(g, pattern, sub_cap=args.sub_cap)
        _emit({"member": answer})
        return 0 if answer else 1
    if args.op == "maxclique":
        _emit({"clique": sorted(brute_max_clique(g))})
    elif args.op == "domset":
        _emit({"set": sorted(brute_min_domset(g))})
    elif args.op == "mis":
        _emit({"set": sorted(brute_mis(g))})
    elif args.op == "ids":
        _emit({"set": sorted(brute_ids(g))})
    elif args.op == "listcolor":
        with open(args.lists) as fh:
            lists = {int(k): set(v) for k, v in json.load(fh).items()}
        out = brute_list_coloring(g, lists)
        if out is None:
            _emit({"coloring": None})
            return 1
        _emit({"coloring": {str(v): c for v, c in out.items()}})
    elif args.op == "separators":
        _emit({"separators": sorted(sorted(s) for s in brute_minimal_separators(g))})
    else:
        raise StructuralError(f"unknown oracle op {args.op}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hgraphs",
        description="Recognition, optimization, and gadget construction for "
                    "intersection graphs of subdivided patterns.",
    )
    top.add_argument("--jobs", type=int, default=1,
                     help="accepted for compatibility; execution is serial")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, rep=False, tree=False, pattern=False):
        p.add_argument("--graph", required=True)
        p.add_argument("--format", choices=["json", "dimacs"], default="json")
        if rep:
            p.add_argument("--rep", required=True)
        if tree:
            p.add_argument("--tree", required=True)
        if pattern:
            p.add_argument("--pattern")

    p = sub.add_parser("verify");            common(p, rep=True); p.set_defaults(fn=_cmd_verify)
    p = sub.add_parser("recognize-star");    common(p); p.add_argument("--d", type=int, required=True); p.set_defaults(fn=_cmd_recognize_star)
    p = sub.add_parser("recognize-tree");    common(p, tree=True); p.set_defaults(fn=_cmd_recognize_tree)
    p = sub.add_parser("domset");            common(p, rep=True); p.add_argument("--variant", choices=["mds", "mis", "ids"], default="mds"); p.set_defaults(fn=_cmd_domset)
    p = sub.add_parser("clique");            common(p, pattern=True); p.add_argument("--mode", choices=["helly", "cactus"], required=True); p.set_defaults(fn=_cmd_clique)
    p = sub.add_parser("tw");                common(p); p.add_argument("--target", type=int); p.set_defaults(fn=_cmd_tw)
    p = sub.add_parser("kclique");           common(p, pattern=True); p.add_argument("--k", type=int, required=True); p.set_defaults(fn=_cmd_kclique)
    p = sub.add_parser("listcolor");         common(p, pattern=True); p.add_argument("--k", type=int, required=True); p.add_argument("--lists", required=True); p.set_defaults(fn=_cmd_listcolor)
    p = sub.add_parser("separators");        common(p, rep=False); p.add_argument("--candidates", action="store_true"); p.add_argument("--cactus", action="store_true"); p.add_argument("--rep"); p.add_argument("--cap", type=int, default=100000); p.set_defaults(fn=_cmd_separators)
    p = sub.add_parser("reduce")
    p.add_argument("--kind", choices=["intdim", "cosubdiv"], required=True)
    p.add_argument("--poset")
    p.add_argument("--graph")
    p.add_argument("--pattern")
    p.add_argument("--partition")
    p.add_argument("--format", choices=["json", "dimacs"], default="json")
    p.set_defaults(fn=_cmd_reduce)
    p = sub.add_parser("gen")
    p.add_argument("--kind", choices=["subtree", "poset"], default="subtree")
    p.add_argument("--pattern")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int, default=3, dest="n_max")
    p.add_argument("--density", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sub", type=int)
    p.set_defaults(fn=_cmd_gen)
    p = sub.add_parser("oracle")
    p.add_argument("--op", required=True,
                   choices=["membership", "maxclique", "domset", "mis", "ids",
                            "listcolor", "separators"])
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern")
    p.add_argument("--lists")
    p.add_argument("--sub-cap", type=int, default=4, dest="sub_cap")
    p.add_argument("--format", choices=["json", "dimacs"], default="json")
    p.set_defaults(fn=_cmd_oracle)
    return top


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (StructuralError, ValueError, FileNotFoundError, KeyError,
            json.JSONDecodeError, CyclePattern, PromiseViolation) as exc:
        _emit({"error": str(exc)})
        return 2
    except (OracleCapError, SeparatorOverflow) as exc:
        _emit({"refusal": str(exc)})
        return 3


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
