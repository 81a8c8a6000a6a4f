#include "parteval/pr_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "parteval/errors.hpp"
#include "parteval/rng.hpp"

namespace parteval {

std::int64_t round_half_up(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }

namespace {

std::uint64_t pack_pair(NodeId u, NodeId v, std::int64_t n) {
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(v);
}

// Uniform sample (without replacement) of `count` non-edges. Enumerates the
// complement when it is small, otherwise draws pairs by rejection; both
// paths are uniform and deterministic, the split depends only on
// (n, m, count, seed).
std::vector<Edge> sample_nonedges(const Graph& g, std::int64_t count, Rng& rng) {
    std::vector<Edge> sample;
    if (count == 0) return sample;
    const std::int64_t n = g.node_count();
    const std::int64_t total = g.vertex_pair_count() - g.edge_count();

    if (total <= std::max<std::int64_t>(4 * count, 1 << 20)) {
        std::vector<Edge> nonedges;
        nonedges.reserve(total);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) nonedges.emplace_back(u, v);
        for (std::int64_t i = 0; i < count; ++i) {
            const auto j = i + static_cast<std::int64_t>(
                                   rng.uniform_index(static_cast<std::uint64_t>(total - i)));
            std::swap(nonedges[i], nonedges[j]);
        }
        nonedges.resize(count);
        return nonedges;
    }

    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count * 2);
    sample.reserve(count);
    while (static_cast<std::int64_t>(sample.size()) < count) {
        auto u = static_cast<NodeId>(rng.uniform_index(static_cast<std::uint64_t>(n)));
        auto v = static_cast<NodeId>(rng.uniform_index(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (g.has_edge(u, v)) continue;
        if (!chosen.insert(pack_pair(u, v, n)).second) continue;
        sample.emplace_back(u, v);
    }
    return sample;
}

}  // namespace

EvalSplit make_split(const Graph& g, double removal_fraction, std::uint64_t seed) {
    if (!(removal_fraction > 0.0 && removal_fraction < 1.0))
        throw std::invalid_argument("removal fraction must lie in (0,1)");
    const std::int64_t m = g.edge_count();
    if (m < 1) throw ValidationError("cannot split a graph without edges");
    const std::int64_t p = g.vertex_pair_count();

    const std::int64_t removed_count = round_half_up(removal_fraction * static_cast<double>(m));
    const std::int64_t validation_count = round_half_up(removal_fraction * static_cast<double>(p));
    const std::int64_t nonedge_count = validation_count - removed_count;
    if (nonedge_count > p - m)
        throw ValidationError("graph too dense: cannot sample " + std::to_string(nonedge_count) +
                              " non-edges from " + std::to_string(p - m));

    Rng rng(seed);

    // removed edges: partial Fisher-Yates over the edge indices
    std::vector<std::int64_t> edge_order(m);
    for (std::int64_t i = 0; i < m; ++i) edge_order[i] = i;
    for (std::int64_t i = 0; i < removed_count; ++i) {
        const auto j =
            i + static_cast<std::int64_t>(rng.uniform_index(static_cast<std::uint64_t>(m - i)));
        std::swap(edge_order[i], edge_order[j]);
    }

    std::vector<bool> removed(m, false);
    std::vector<Edge> removed_edges;
    removed_edges.reserve(removed_count);
    for (std::int64_t i = 0; i < removed_count; ++i) {
        removed[edge_order[i]] = true;
        removed_edges.push_back(g.edges()[edge_order[i]]);
    }

    std::vector<Edge> kept;
    kept.reserve(m - removed_count);
    for (std::int64_t i = 0; i < m; ++i)
        if (!removed[i]) kept.push_back(g.edges()[i]);

    std::vector<Edge> nonedges = sample_nonedges(g, nonedge_count, rng);

    std::vector<std::string> labels;
    labels.reserve(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) labels.push_back(g.label(u));

    return EvalSplit{Graph(g.node_count(), std::move(kept), std::move(labels)),
                     std::move(removed_edges), std::move(nonedges), removal_fraction, seed};
}

PRResult evaluate_partition(const EvalSplit& split, const Partition& part) {
    if (static_cast<std::int64_t>(part.assignment().size()) !=
        split.training_graph.node_count())
        throw ValidationError("partition does not cover the training graph's node set");

    PRResult r;
    for (const auto& [u, v] : split.removed_edges)
        if (part.community_of(u) == part.community_of(v)) ++r.tp;
    for (const auto& [u, v] : split.sampled_nonedges)
        if (part.community_of(u) == part.community_of(v)) ++r.fp;
    r.fn = static_cast<std::int64_t>(split.removed_edges.size()) - r.tp;
    r.tn = static_cast<std::int64_t>(split.sampled_nonedges.size()) - r.fp;
    r.precision = (r.tp + r.fp) > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp)
                                    : 0.0;
    r.recall = (r.tp + r.fn) > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn)
                                 : 0.0;
    return r;
}

TrialRun run_trials(const Graph& g, double removal_fraction,
                    std::span<const std::uint64_t> seeds, const Detector& detector) {
    if (seeds.empty()) throw std::invalid_argument("run_trials needs at least one seed");

    TrialRun run;
    run.seeds.assign(seeds.begin(), seeds.end());
    run.results.reserve(seeds.size());
    for (const std::uint64_t seed : seeds) {
        const EvalSplit split = make_split(g, removal_fraction, seed);
        const Partition part = detector(split.training_graph, seed);
        run.results.push_back(evaluate_partition(split, part));
    }
    for (const auto& r : run.results) {
        run.mean_precision += r.precision;
        run.mean_recall += r.recall;
    }
    run.mean_precision /= static_cast<double>(run.results.size());
    run.mean_recall /= static_cast<double>(run.results.size());
    return run;
}

}  // namespace parteval
