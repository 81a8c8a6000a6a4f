#include "parteval/metrics.hpp"

#include "parteval/errors.hpp"

namespace parteval {

double precision(const CommunityStats& stats) {
    if (stats.internal_pairs == 0) return 0.0;
    return static_cast<double>(stats.internal_edges) / static_cast<double>(stats.internal_pairs);
}

double recall(const CommunityStats& stats, const Graph& g) {
    if (g.edge_count() < 1) throw ValidationError("recall undefined for a graph without edges");
    return static_cast<double>(stats.internal_edges) / static_cast<double>(g.edge_count());
}

double c_size(const CommunityStats& stats, const Graph& g) {
    const auto p = g.vertex_pair_count();
    if (p == 0) return 1.0;
    return 1.0 - static_cast<double>(stats.internal_pairs) / static_cast<double>(p);
}

double q_prime(const CommunityStats& stats, const NullExpectation& nullexp, const Graph& g) {
    const auto m = static_cast<double>(g.edge_count());
    return (static_cast<double>(stats.internal_edges) - nullexp.expected_internal_total) / m;
}

double modularity(const CommunityStats& stats, const NullExpectation& nullexp, const Graph& g) {
    // two names for one computation, kept in lockstep on purpose
    return q_prime(stats, nullexp, g);
}

double ccs(const CommunityStats&, const NullExpectation& nullexp, const Graph& g) {
    return 1.0 - nullexp.expected_internal_total / static_cast<double>(g.edge_count());
}

double density_gain(const CommunityStats& stats, const NullExpectation& nullexp) {
    if (stats.internal_pairs == 0) return 0.0;
    return (static_cast<double>(stats.internal_edges) - nullexp.expected_internal_total) /
           static_cast<double>(stats.internal_pairs);
}

double mdensity(const CommunityStats& stats, const NullExpectation& nullexp, const Graph& g) {
    if (nullexp.corrected_pair_count == 0.0) return 0.0;
    const double gain =
        (static_cast<double>(stats.internal_edges) - nullexp.expected_internal_total) /
        nullexp.corrected_pair_count;
    return gain * recall(stats, g);
}

MetricReport metric_report(const Graph& g, const Partition& part, NullModelKind kind) {
    const CommunityStats stats = community_stats(g, part);
    const NullExpectation nullexp = expected_internal_edges(g, stats, kind);

    MetricReport report;
    report.precision = precision(stats);
    report.recall = recall(stats, g);
    report.c_size = c_size(stats, g);
    report.q_prime = q_prime(stats, nullexp, g);
    report.modularity = modularity(stats, nullexp, g);
    report.ccs = ccs(stats, nullexp, g);
    report.density_gain = density_gain(stats, nullexp);
    report.mdensity = mdensity(stats, nullexp, g);
    report.null_kind = kind;
    return report;
}

double metric_by_name(const MetricReport& report, std::string_view name) {
    if (name == "precision") return report.precision;
    if (name == "recall") return report.recall;
    if (name == "c_size") return report.c_size;
    if (name == "q_prime") return report.q_prime;
    if (name == "modularity") return report.modularity;
    if (name == "ccs") return report.ccs;
    if (name == "density_gain") return report.density_gain;
    if (name == "mdensity") return report.mdensity;
    throw ValidationError("unknown metric '" + std::string(name) + "'");
}

}  // namespace parteval
