"""Extremal graph theory toolkit for clique and star-forest avoidance.

Builds the conjectured extremal graphs, detects the forbidden patterns,
evaluates the closed-form edge counts, and checks everything at small
scale against exhaustive isomorph-free search.
"""

from .graphs import (
    Graph,
    bits,
    build_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    join,
    mask_of,
    respects_bipartition,
    symmetrize,
)
from .graph6 import (
    GRAPH6_MAX_N,
    from_edge_list_json,
    graph6_decode,
    graph6_encode,
    to_edge_list_json,
)
from .canonical import (
    CANONICAL_MAX_N,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_permutation,
)
from .detectors import (
    Clique,
    ForbiddenFamily,
    Matching,
    StarForest,
    contains_clique,
    contains_star_forest,
    independence_number,
    is_family_free,
    max_clique_size,
    max_matching_size,
)
from .constructions import (
    PartitionCertificate,
    SwapSupplyError,
    capped_bipartite,
    clique_matching_extremal,
    clique_star_forest_extremal,
    complete_bipartite,
    joined_capped_extremal,
    joined_regular_extremal,
    regular_triangle_free,
    turan_graph,
)
from .formulas import (
    FormulaResult,
    Validity,
    ex_clique_matching,
    ex_clique_star_forest,
    ex_star,
    ex_triangle_star_forest,
    exploration_threshold,
    extremal_family_edges,
    turan_edges,
)
from .oracle import (
    CappedJoinDescriptor,
    CompleteBipartiteDescriptor,
    ExtremalRecord,
    ORACLE_MAX_N,
    RegularJoinDescriptor,
    brute_force_ex,
    enumerate_extremal,
    enumerate_free_graphs,
    family_membership,
)
from .harness import (
    ResultCache,
    SUITE_NAMES,
    SuiteReport,
    SuiteRow,
    TOOL_VERSION,
    emit_report,
    run_suite,
)

__version__ = TOOL_VERSION

__all__ = [
    "Graph",
    "bits",
    "build_graph",
    "disjoint_union",
    "empty_graph",
    "induced_subgraph",
    "join",
    "mask_of",
    "respects_bipartition",
    "symmetrize",
    "GRAPH6_MAX_N",
    "from_edge_list_json",
    "graph6_decode",
    "graph6_encode",
    "to_edge_list_json",
    "CANONICAL_MAX_N",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_permutation",
    "Clique",
    "Matching",
    "StarForest",
    "ForbiddenFamily",
    "contains_clique",
    "contains_star_forest",
    "independence_number",
    "is_family_free",
    "max_clique_size",
    "max_matching_size",
    "PartitionCertificate",
    "SwapSupplyError",
    "capped_bipartite",
    "clique_matching_extremal",
    "clique_star_forest_extremal",
    "complete_bipartite",
    "joined_capped_extremal",
    "joined_regular_extremal",
    "regular_triangle_free",
    "turan_graph",
    "FormulaResult",
    "Validity",
    "ex_clique_matching",
    "ex_clique_star_forest",
    "ex_star",
    "ex_triangle_star_forest",
    "exploration_threshold",
    "extremal_family_edges",
    "turan_edges",
    "CappedJoinDescriptor",
    "CompleteBipartiteDescriptor",
    "RegularJoinDescriptor",
    "ExtremalRecord",
    "ORACLE_MAX_N",
    "brute_force_ex",
    "enumerate_extremal",
    "enumerate_free_graphs",
    "family_membership",
    "ResultCache",
    "SUITE_NAMES",
    "SuiteReport",
    "SuiteRow",
    "TOOL_VERSION",
    "emit_report",
    "run_suite",
]
