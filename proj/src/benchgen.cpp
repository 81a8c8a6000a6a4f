#include "parteval/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "parteval/errors.hpp"
#include "parteval/pr_eval.hpp"
#include "parteval/rng.hpp"

namespace parteval {

namespace {

std::uint64_t pack_pair(NodeId u, NodeId v, std::int64_t n) {
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(v);
}

std::vector<Edge> sample_sbm_edges(const std::vector<CommunityId>& block_of, double p_in,
                                   double p_out, Rng& rng) {
    const auto n = static_cast<NodeId>(block_of.size());
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const double prob = block_of[u] == block_of[v] ? p_in : p_out;
            if (prob > 0.0 && rng.bernoulli(prob)) edges.emplace_back(u, v);
        }
    }
    return edges;
}

}  // namespace

PlantedGraph gen_sbm(const std::vector<std::int64_t>& block_sizes, double p_in, double p_out,
                     std::uint64_t seed) {
    if (!(p_in >= 0.0 && p_in <= 1.0) || !(p_out >= 0.0 && p_out <= 1.0))
        throw std::invalid_argument("sbm probabilities must lie in [0,1]");
    std::int64_t n = 0;
    for (const auto s : block_sizes) {
        if (s < 1) throw std::invalid_argument("sbm block sizes must be positive");
        n += s;
    }
    if (n < 2) throw std::invalid_argument("sbm needs at least two nodes");

    std::vector<CommunityId> block_of;
    block_of.reserve(n);
    for (std::size_t b = 0; b < block_sizes.size(); ++b)
        block_of.insert(block_of.end(), block_sizes[b], static_cast<CommunityId>(b));

    Rng rng(seed);
    std::vector<Edge> edges = sample_sbm_edges(block_of, p_in, p_out, rng);
    if (edges.empty()) {
        // one resample with a derived seed, then give up
        Rng retry(SplitMix64(seed).next());
        edges = sample_sbm_edges(block_of, p_in, p_out, retry);
    }
    if (edges.empty())
        throw ValidationError("sbm parameters produced an empty graph twice; nothing to build");

    Graph graph(n, std::move(edges));
    Partition planted = Partition::from_assignment(graph, block_of);
    return PlantedGraph{std::move(graph), std::move(planted), seed};
}

PlantedGraph gen_fixed_clique_mu(int num_cliques, int clique_size, double mu, std::uint64_t seed) {
    if (num_cliques < 2) throw std::invalid_argument("need at least two cliques");
    if (clique_size < 3) throw std::invalid_argument("clique size must be at least 3");
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("mu must lie in (0,1)");

    const std::int64_t n = static_cast<std::int64_t>(num_cliques) * clique_size;
    std::vector<CommunityId> clique_of(n);
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> edge_set;

    const auto add_edge = [&](NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        if (!edge_set.insert(pack_pair(u, v, n)).second) return false;
        edges.emplace_back(u, v);
        return true;
    };

    for (int c = 0; c < num_cliques; ++c) {
        const NodeId base = static_cast<NodeId>(c) * clique_size;
        for (int i = 0; i < clique_size; ++i) {
            clique_of[base + i] = c;
            for (int j = i + 1; j < clique_size; ++j)
                add_edge(base + i, base + j);
        }
    }

    // external stubs: round((s-1) * mu / (1 - mu)) per node, so that the
    // target mixing fraction of each node's edges leaves its clique
    const auto stubs_per_node = round_half_up((clique_size - 1) * mu / (1.0 - mu));
    std::vector<NodeId> stubs;
    stubs.reserve(n * stubs_per_node);
    for (NodeId u = 0; u < n; ++u)
        for (std::int64_t k = 0; k < stubs_per_node; ++k) stubs.push_back(u);
    if (stubs.size() % 2 == 1) stubs.pop_back();  // odd total: drop one stub

    Rng rng(seed);
    constexpr int kMaxPasses = 50;
    for (int pass = 0; pass < kMaxPasses && stubs.size() >= 2; ++pass) {
        rng.shuffle(stubs);
        std::vector<NodeId> leftover;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const NodeId u = stubs[i];
            const NodeId v = stubs[i + 1];
            if (clique_of[u] == clique_of[v] || !add_edge(u, v)) {
                leftover.push_back(u);
                leftover.push_back(v);
            }
        }
        stubs = std::move(leftover);
    }
    // whatever is left after the retry cap is dropped

    Graph graph(n, std::move(edges));
    Partition planted = Partition::from_assignment(graph, clique_of);
    return PlantedGraph{std::move(graph), std::move(planted), seed};
}

RingOfCliques gen_ring_of_cliques(int num_cliques, int clique_size) {
    if (num_cliques < 3) throw std::invalid_argument("ring needs at least three cliques");
    if (clique_size < 3) throw std::invalid_argument("clique size must be at least 3");

    const std::int64_t n = static_cast<std::int64_t>(num_cliques) * clique_size;
    std::vector<CommunityId> clique_of(n);
    std::vector<Edge> edges;

    for (int c = 0; c < num_cliques; ++c) {
        const NodeId base = static_cast<NodeId>(c) * clique_size;
        for (int i = 0; i < clique_size; ++i) {
            clique_of[base + i] = c;
            for (int j = i + 1; j < clique_size; ++j)
                edges.emplace_back(base + i, base + j);
        }
    }
    // one bridge between consecutive cliques: last node of c to first of c+1
    for (int c = 0; c < num_cliques; ++c) {
        const NodeId from = static_cast<NodeId>(c) * clique_size + clique_size - 1;
        const NodeId to = static_cast<NodeId>((c + 1) % num_cliques) * clique_size;
        edges.emplace_back(from, to);
    }

    Graph graph(n, std::move(edges));
    Partition cliques = Partition::from_assignment(graph, clique_of);

    std::optional<Partition> paired;
    if (num_cliques % 2 == 0) {
        std::vector<CommunityId> pair_of(n);
        for (std::int64_t u = 0; u < n; ++u) pair_of[u] = clique_of[u] / 2;
        paired = Partition::from_assignment(graph, pair_of);
    }
    return RingOfCliques{std::move(graph), std::move(cliques), std::move(paired)};
}

PlantedGraph gen_clique_chain(int num_components, int chain_len, int clique_size) {
    if (num_components < 1 || chain_len < 1)
        throw std::invalid_argument("component count and chain length must be positive");
    if (clique_size < 3) throw std::invalid_argument("clique size must be at least 3");

    const std::int64_t per_component = chain_len + 2 * static_cast<std::int64_t>(clique_size);
    const std::int64_t n = per_component * num_components;
    std::vector<CommunityId> component_of(n);
    std::vector<Edge> edges;

    for (int c = 0; c < num_components; ++c) {
        const NodeId base = static_cast<NodeId>(c * per_component);
        const NodeId chain0 = base;                          // chain nodes first
        const NodeId cliqueA = base + chain_len;             // then the two cliques
        const NodeId cliqueB = cliqueA + clique_size;
        for (std::int64_t u = base; u < base + per_component; ++u)
            component_of[u] = c;

        for (int i = 0; i + 1 < chain_len; ++i) edges.emplace_back(chain0 + i, chain0 + i + 1);
        for (int i = 0; i < clique_size; ++i) {
            for (int j = i + 1; j < clique_size; ++j) {
                edges.emplace_back(cliqueA + i, cliqueA + j);
                edges.emplace_back(cliqueB + i, cliqueB + j);
            }
        }
        edges.emplace_back(cliqueA, chain0);                  // attach the ends
        edges.emplace_back(cliqueB, chain0 + chain_len - 1);
    }

    Graph graph(n, std::move(edges));
    Partition planted = Partition::from_assignment(graph, component_of);
    return PlantedGraph{std::move(graph), std::move(planted), 0};
}

}  // namespace parteval
