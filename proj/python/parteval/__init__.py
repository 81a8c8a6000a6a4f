"""Multi-criteria evaluation of community partitions.

Thin python surface over the C++ core: graph/partition parsing, the quality
metrics (precision, recall, c_size, modularity, ccs, density_gain, mdensity),
the edge-removal precision/recall protocol, Pareto-frontier selection with
alpha envelopes, benchmark generators, and three baseline detectors.
"""

from ._parteval import (
    EvalSplit,
    Graph,
    ParseError,
    Partition,
    ValidationError,
    alpha_envelope,
    evaluate_partition,
    gen_clique_chain,
    gen_fixed_clique_mu,
    gen_ring_of_cliques,
    gen_sbm,
    greedy_agglomerative,
    groups,
    label_propagation,
    load_graph,
    load_partition,
    louvain,
    make_split,
    metric_report,
    parse_graph,
    parse_partition,
    pareto_frontier,
    partition_from_groups,
    single_community,
    singletons,
    two_fq,
    write_graph,
)

__all__ = [
    "EvalSplit",
    "Graph",
    "ParseError",
    "Partition",
    "ValidationError",
    "alpha_envelope",
    "evaluate_partition",
    "gen_clique_chain",
    "gen_fixed_clique_mu",
    "gen_ring_of_cliques",
    "gen_sbm",
    "greedy_agglomerative",
    "groups",
    "label_propagation",
    "load_graph",
    "load_partition",
    "louvain",
    "make_split",
    "metric_report",
    "parse_graph",
    "parse_partition",
    "pareto_frontier",
    "partition_from_groups",
    "single_community",
    "singletons",
    "two_fq",
    "write_graph",
]
