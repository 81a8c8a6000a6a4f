#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parteval/graph.hpp"
#include "parteval/partition.hpp"

namespace parteval {

/// A generated benchmark graph with its ground-truth partition.
struct PlantedGraph {
    Graph graph;
    Partition planted;
    std::uint64_t seed = 0;
};

/// Stochastic block model: each intra-block pair is an edge with probability
/// p_in, each inter-block pair with p_out. An empty result is resampled once
/// with a derived seed, then rejected with ValidationError.
PlantedGraph gen_sbm(const std::vector<std::int64_t>& block_sizes, double p_in, double p_out,
                     std::uint64_t seed);

/// Cliques of a fixed size with externally wired extra edges: every node
/// gets round((s-1)*mu/(1-mu)) external stubs, matched uniformly at random
/// across cliques (no self/duplicate/intra-clique edges). An odd stub total
/// drops one stub; stubs that stay unmatchable after the retry cap are
/// dropped as well.
PlantedGraph gen_fixed_clique_mu(int num_cliques, int clique_size, double mu, std::uint64_t seed);

/// Ring of q cliques K_s, consecutive cliques joined by exactly one edge.
/// Deterministic. `paired` (consecutive cliques merged two by two) is
/// present when q is even.
struct RingOfCliques {
    Graph graph;
    Partition cliques;
    std::optional<Partition> paired;
};

RingOfCliques gen_ring_of_cliques(int num_cliques, int clique_size);

/// Disconnected components, each a path with a clique attached at both ends;
/// the planted partition is the components. Deterministic.
PlantedGraph gen_clique_chain(int num_components, int chain_len, int clique_size);

}  // namespace parteval
