"""Exact perfect-matching tools for cubic multigraphs."""

from ._cubicpm import (
    GraphError,
    Multigraph,
    are_isomorphic,
    bridges,
    brick_count,
    check,
    count_matchings,
    cyclic_edge_connectivity,
    enumerate_matchings,
    exhaustive_cubic_bridgeless,
    is_cyclically_k_edge_connected,
    is_klee,
    is_matching_covered,
    ladder,
    lemmas,
    named,
    named_list,
    parse_edge_list,
    parse_graph6,
    random_bipartite_cubic,
    random_cubic_bridgeless,
    random_klee,
    random_twisted_net,
    sweep_random,
)

__all__ = [name for name in dir() if not name.startswith("_")]
