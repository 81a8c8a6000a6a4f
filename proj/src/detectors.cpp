#include "parteval/detectors.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "parteval/errors.hpp"
#include "parteval/rng.hpp"

namespace parteval {

Partition label_propagation(const Graph& g, std::uint64_t seed) {
    const std::int64_t n = g.node_count();
    std::vector<CommunityId> labels(n);
    for (std::int64_t u = 0; u < n; ++u) labels[u] = static_cast<CommunityId>(u);

    std::vector<NodeId> order(n);
    for (std::int64_t u = 0; u < n; ++u) order[u] = static_cast<NodeId>(u);

    Rng rng(seed);
    std::unordered_map<CommunityId, std::int64_t> counts;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        rng.shuffle(order);
        bool changed = false;
        for (const NodeId u : order) {
            const auto nb = g.neighbors(u);
            if (nb.empty()) continue;
            counts.clear();
            std::int64_t best_count = 0;
            for (const NodeId v : nb) best_count = std::max(best_count, ++counts[labels[v]]);
            // keep the current label when tied, otherwise smallest tied label
            if (counts[labels[u]] == best_count) continue;
            CommunityId best = labels[u];
            bool found = false;
            for (const auto& [label, count] : counts) {
                if (count == best_count && (!found || label < best)) {
                    best = label;
                    found = true;
                }
            }
            labels[u] = best;
            changed = true;
        }
        if (!changed) break;
    }
    return Partition::from_assignment(g, labels);
}

namespace {

// Incremental state for greedy agglomeration: per-community size, degree sum
// and the inter-community edge counts, plus the running null-model sum so
// modularity updates stay O(1) per merge.
struct AgglomState {
    std::vector<std::int64_t> size;
    std::vector<std::int64_t> degree_sum;
    std::vector<std::unordered_map<std::int32_t, std::int64_t>> between;  // edges to other comms
    std::int64_t internal = 0;  // edges inside communities

    double merge_gain(std::int32_t a, std::int32_t b, NullModelKind kind, double m,
                      double p) const {
        const auto it = between[a].find(b);
        const double shared = it == between[a].end() ? 0.0 : static_cast<double>(it->second);
        if (kind == NullModelKind::Configuration)
            return shared / m -
                   static_cast<double>(degree_sum[a]) * static_cast<double>(degree_sum[b]) /
                       (2.0 * m * m);
        return shared / m - static_cast<double>(size[a]) * static_cast<double>(size[b]) / p;
    }
};

}  // namespace

MergeHierarchy greedy_agglomerative(const Graph& g, NullModelKind kind) {
    const std::int64_t n = g.node_count();
    const double m = static_cast<double>(g.edge_count());
    const double p = static_cast<double>(g.vertex_pair_count());
    if (g.edge_count() < 1) throw ValidationError("greedy agglomeration needs at least one edge");

    AgglomState st;
    st.size.assign(n, 1);
    st.degree_sum.resize(n);
    st.between.resize(n);
    for (NodeId u = 0; u < n; ++u) st.degree_sum[u] = g.degree(u);
    for (const auto& [u, v] : g.edges()) {
        st.between[u][v] += 1;
        st.between[v][u] += 1;
    }

    std::vector<CommunityId> assignment(n);
    for (std::int64_t u = 0; u < n; ++u) assignment[u] = static_cast<CommunityId>(u);
    std::vector<std::vector<NodeId>> members(n);
    for (NodeId u = 0; u < n; ++u) members[u] = {u};

    // modularity of the current cut, updated incrementally
    double null_sum = 0.0;  // sum over communities of the null-model expectation
    for (NodeId u = 0; u < n; ++u) {
        if (kind == NullModelKind::Configuration)
            null_sum += static_cast<double>(st.degree_sum[u]) *
                        static_cast<double>(st.degree_sum[u]) / (4.0 * m);
    }
    double q = (static_cast<double>(st.internal) - null_sum) / m;

    MergeHierarchy hierarchy;
    hierarchy.levels.push_back(Partition::from_assignment(g, assignment));
    hierarchy.modularities.push_back(q);

    std::vector<std::int32_t> alive_ids(n);
    for (std::int64_t u = 0; u < n; ++u) alive_ids[u] = static_cast<std::int32_t>(u);

    while (alive_ids.size() > 1) {
        // pick the best merge; id order makes ties deterministic
        double best_gain = -std::numeric_limits<double>::infinity();
        std::int32_t best_a = -1, best_b = -1;
        for (std::size_t i = 0; i < alive_ids.size(); ++i) {
            for (std::size_t j = i + 1; j < alive_ids.size(); ++j) {
                const double gain = st.merge_gain(alive_ids[i], alive_ids[j], kind, m, p);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_a = alive_ids[i];
                    best_b = alive_ids[j];
                }
            }
        }

        // merge b into a (a < b by construction)
        const auto it_ab = st.between[best_a].find(best_b);
        const std::int64_t shared = it_ab == st.between[best_a].end() ? 0 : it_ab->second;
        if (kind == NullModelKind::Configuration) {
            null_sum += static_cast<double>(st.degree_sum[best_a]) *
                        static_cast<double>(st.degree_sum[best_b]) / (2.0 * m);
        } else {
            null_sum += static_cast<double>(st.size[best_a]) *
                        static_cast<double>(st.size[best_b]) * m / p;
        }
        st.internal += shared;
        st.size[best_a] += st.size[best_b];
        st.degree_sum[best_a] += st.degree_sum[best_b];
        st.between[best_a].erase(best_b);
        for (const auto& [c, count] : st.between[best_b]) {
            if (c == best_a) continue;
            st.between[c].erase(best_b);
            st.between[c][best_a] += count;
            st.between[best_a][c] += count;
        }
        st.between[best_b].clear();
        alive_ids.erase(std::find(alive_ids.begin(), alive_ids.end(), best_b));

        for (const NodeId u : members[best_b]) assignment[u] = best_a;
        members[best_a].insert(members[best_a].end(), members[best_b].begin(),
                               members[best_b].end());
        members[best_b].clear();

        q = (static_cast<double>(st.internal) - null_sum) / m;
        hierarchy.levels.push_back(Partition::from_assignment(g, assignment));
        hierarchy.modularities.push_back(q);
    }

    hierarchy.best_index = 0;
    for (std::size_t i = 1; i < hierarchy.levels.size(); ++i)
        if (hierarchy.modularities[i] > hierarchy.modularities[hierarchy.best_index])
            hierarchy.best_index = i;
    return hierarchy;
}

namespace {

// Aggregated multigraph for the local-moving phase. Self-loop weight is
// stored doubled so a node's strength is the plain sum of its incident
// weights.
struct LevelGraph {
    std::vector<std::vector<std::pair<std::int32_t, double>>> adj;
    std::vector<double> strength;
    double total = 0.0;  // sum of strengths = 2m

    std::int64_t size() const { return static_cast<std::int64_t>(adj.size()); }
};

LevelGraph level_from_graph(const Graph& g) {
    LevelGraph lg;
    lg.adj.resize(g.node_count());
    lg.strength.assign(g.node_count(), 0.0);
    for (const auto& [u, v] : g.edges()) {
        lg.adj[u].emplace_back(v, 1.0);
        lg.adj[v].emplace_back(u, 1.0);
        lg.strength[u] += 1.0;
        lg.strength[v] += 1.0;
    }
    lg.total = 2.0 * static_cast<double>(g.edge_count());
    return lg;
}

// One local-moving phase; returns the (non-dense) community of each node.
std::vector<std::int32_t> local_moving(const LevelGraph& lg, Rng& rng) {
    const std::int64_t n = lg.size();
    std::vector<std::int32_t> community(n);
    std::vector<double> community_strength(lg.strength);
    for (std::int64_t u = 0; u < n; ++u) community[u] = static_cast<std::int32_t>(u);

    std::vector<std::int32_t> order(n);
    for (std::int64_t u = 0; u < n; ++u) order[u] = static_cast<std::int32_t>(u);

    const double m2 = lg.total;
    std::unordered_map<std::int32_t, double> weight_to;
    bool moved_any = true;
    while (moved_any) {
        moved_any = false;
        rng.shuffle(order);
        for (const std::int32_t u : order) {
            const std::int32_t current = community[u];
            weight_to.clear();
            for (const auto& [v, w] : lg.adj[u])
                if (v != u) weight_to[community[v]] += w;

            // take u out, then re-insert into the best candidate
            community_strength[current] -= lg.strength[u];

            // gain of joining C, up to the constant positive factor 2/m2:
            // (links into C) - strength_u * strength(C) / m2
            double best_gain =
                weight_to[current] - lg.strength[u] * community_strength[current] / m2;
            std::int32_t best = current;
            for (const auto& [v, w] : lg.adj[u]) {
                const std::int32_t candidate = community[v];
                if (candidate == current || v == u) continue;
                const double gain =
                    weight_to[candidate] - lg.strength[u] * community_strength[candidate] / m2;
                if (gain > best_gain) {  // strict: first maximal wins
                    best_gain = gain;
                    best = candidate;
                }
            }

            community_strength[best] += lg.strength[u];
            if (best != current) {
                community[u] = best;
                moved_any = true;
            }
        }
    }
    return community;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::int32_t>& dense_community,
                     std::int32_t community_count) {
    LevelGraph agg;
    agg.adj.resize(community_count);
    agg.strength.assign(community_count, 0.0);
    agg.total = lg.total;

    std::vector<std::unordered_map<std::int32_t, double>> weights(community_count);
    for (std::int64_t u = 0; u < lg.size(); ++u) {
        const std::int32_t cu = dense_community[u];
        agg.strength[cu] += lg.strength[u];
        for (const auto& [v, w] : lg.adj[u]) {
            const std::int32_t cv = dense_community[v];
            if (u == v) {
                weights[cu][cu] += w;  // doubled self-loop carried over
            } else if (cu == cv) {
                weights[cu][cu] += w;  // each endpoint contributes once
            } else {
                weights[cu][cv] += w;
            }
        }
    }
    for (std::int32_t c = 0; c < community_count; ++c) {
        std::vector<std::pair<std::int32_t, double>> row(weights[c].begin(), weights[c].end());
        std::sort(row.begin(), row.end());
        agg.adj[c] = std::move(row);
    }
    return agg;
}

}  // namespace

std::vector<Partition> louvain_style(const Graph& g, std::uint64_t seed) {
    if (g.edge_count() < 1) throw ValidationError("louvain needs at least one edge");

    Rng rng(seed);
    LevelGraph lg = level_from_graph(g);

    // node -> current aggregated vertex, composed across levels
    std::vector<std::int32_t> flat(g.node_count());
    for (std::int64_t u = 0; u < g.node_count(); ++u) flat[u] = static_cast<std::int32_t>(u);

    std::vector<Partition> levels;
    for (;;) {
        const std::vector<std::int32_t> community = local_moving(lg, rng);

        // densify the move result
        std::vector<std::int32_t> dense(community.size());
        std::unordered_map<std::int32_t, std::int32_t> remap;
        std::int32_t next = 0;
        for (std::size_t u = 0; u < community.size(); ++u) {
            const auto [it, inserted] = remap.emplace(community[u], next);
            if (inserted) ++next;
            dense[u] = it->second;
        }
        if (next == lg.size() && !levels.empty()) break;  // no move happened

        std::vector<CommunityId> assignment(g.node_count());
        for (std::int64_t u = 0; u < g.node_count(); ++u) assignment[u] = dense[flat[u]];
        Partition level = Partition::from_assignment(g, assignment);
        if (!levels.empty() && level == levels.back()) break;
        levels.push_back(std::move(level));

        if (next == lg.size()) break;  // first phase made no move: singleton level only
        for (std::int64_t u = 0; u < g.node_count(); ++u) flat[u] = dense[flat[u]];
        lg = aggregate(lg, dense, next);
    }
    if (levels.empty()) levels.push_back(Partition::singletons(g));
    return levels;
}

}  // namespace parteval
