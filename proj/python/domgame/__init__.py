"""Exact solvers and recognizers for the domination game on small graphs."""

from ._core import (
    Graph,
    FormatError,
    PreconditionError,
    are_isomorphic,
    brute_force_gg_perfect,
    build_script,
    canonical_graph6,
    classify,
    complement,
    disjoint_union,
    domination_number,
    enumerate_nonisomorphic,
    find_min_imperfect,
    from_edge_list,
    from_graph6,
    game_value,
    induced_subgraph,
    is_connected,
    is_gg_graph,
    is_minimally_gg_imperfect,
    is_triangle_free,
    join,
    kc_graph,
    mhc_contraction,
    named_graph,
    optimal_first_moves,
    recognize_gg_perfect,
    recognize_kc,
    table1,
    total_domination_number,
)

__all__ = [
    "Graph",
    "FormatError",
    "PreconditionError",
    "are_isomorphic",
    "brute_force_gg_perfect",
    "build_script",
    "canonical_graph6",
    "classify",
    "complement",
    "disjoint_union",
    "domination_number",
    "enumerate_nonisomorphic",
    "find_min_imperfect",
    "from_edge_list",
    "from_graph6",
    "game_value",
    "induced_subgraph",
    "is_connected",
    "is_gg_graph",
    "is_minimally_gg_imperfect",
    "is_triangle_free",
    "join",
    "kc_graph",
    "mhc_contraction",
    "named_graph",
    "optimal_first_moves",
    "recognize_gg_perfect",
    "recognize_kc",
    "table1",
    "total_domination_number",
]

__version__ = "0.1.0"
