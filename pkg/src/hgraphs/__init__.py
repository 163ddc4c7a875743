"""Topological intersection graphs of subdivided patterns.

Core types (Graph, HostModel, Representation), recognizers for subdivided
stars and trees, dominating-set / independence / clique optimization driven
by representations, minimal-separator machinery, hardness gadget builders,
and the seeded generators and brute-force oracles backing the test suite.
"""

from .graphs import (
    Graph,
    HostModel,
    Representation,
    canonical_subdivision,
    connected_components,
    subdivide_edges,
    verify_representation,
)
from .intervals import (
    CliqueOrder,
    Refutation,
    domset_including,
    greedy_min_domset_interval,
    interval_order,
    interval_order_with_ends,
    is_chordal,
    maximal_cliques,
)
from .posets import (
    IntervalOrderSpec,
    Poset,
    incomparability_graph,
    interval_dimension_height1,
    min_chain_cover,
    transitive_orientation,
)
from .listcolor import (
    ThinStructure,
    build_layered_digraph,
    solve_list_coloring,
    solve_list_coloring_cocomparability,
    thin_structure_from_coloring,
)
from .stars import (
    ComponentPoset,
    StarRefutation,
    build_branch_representation,
    component_poset,
    recognize_star,
    star_pattern,
)
from .trees import (
    RestrictedStarInstance,
    TreeRefutation,
    build_restricted_stars,
    middle_components,
    preprocess,
    recognize_tree,
)
from .domination import (
    max_independent_set_hgraph,
    min_domset_hgraph,
    min_domset_star,
    min_independent_domset_hgraph,
    normalize_representation,
)
from .cliques import (
    AtomDecomposition,
    NotHelly,
    clique_cutset_decomposition,
    max_clique_cactus,
    max_clique_helly,
)
from .constructions import (
    BlockerSpec,
    build_blocker,
    build_gstar,
    build_membership_instance,
    complement_2subdiv_representation,
    diamond_pattern,
    find_diamond_witness,
    realize_diamond_representation,
    t3_gadget,
)
from .treewidth import (
    TreeDecomposition,
    TwRefusal,
    exact_treewidth,
    k_clique_fpt,
    list_k_coloring_fpt,
    tree_decomposition,
    width_fn_for_pattern,
)
from .separators import (
    SeparatorCandidate,
    SeparatorOverflow,
    minimal_separators,
    separator_candidates,
)
from . import oracles, serialize

__all__ = [name for name in dir() if not name.startswith("_")]
