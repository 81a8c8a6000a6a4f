#pragma once

#include <array>

#include "parteval/graph.hpp"
#include "parteval/null_model.hpp"
#include "parteval/partition.hpp"

namespace parteval {

// Scalar quality functions of a (graph, partition, null model) triple.
// Conventions for degenerate partitions: with no internal pairs (all
// singletons) precision, density_gain and mdensity are 0; mdensity is also 0
// when the corrected pair count is 0. recall requires m >= 1.

struct MetricReport {
    double precision = 0.0;     // internal edges / internal pairs
    double recall = 0.0;        // internal edges / m
    double c_size = 0.0;        // 1 - internal pairs / p
    double q_prime = 0.0;       // recall - expected recall under the null model
    double modularity = 0.0;    // same value as q_prime, by definition
    double ccs = 0.0;           // 1 - expected internal / m
    double density_gain = 0.0;  // (internal - expected internal) / internal pairs
    double mdensity = 0.0;      // density gain over corrected pairs, times recall
    NullModelKind null_kind = NullModelKind::Configuration;
};

double precision(const CommunityStats& stats);
double recall(const CommunityStats& stats, const Graph& g);
double c_size(const CommunityStats& stats, const Graph& g);
double q_prime(const CommunityStats& stats, const NullExpectation& nullexp, const Graph& g);
double modularity(const CommunityStats& stats, const NullExpectation& nullexp, const Graph& g);
double ccs(const CommunityStats& stats, const NullExpectation& nullexp, const Graph& g);
double density_gain(const CommunityStats& stats, const NullExpectation& nullexp);
double mdensity(const CommunityStats& stats, const NullExpectation& nullexp, const Graph& g);

/// All metrics from one stats + null-expectation pass.
MetricReport metric_report(const Graph& g, const Partition& part, NullModelKind kind);

/// Fixed column order for CSV/JSON report serialization.
inline constexpr std::array<const char*, 8> kMetricColumns = {
    "precision", "recall",  "c_size",       "q_prime",
    "modularity", "ccs",    "density_gain", "mdensity",
};

double metric_by_name(const MetricReport& report, std::string_view name);

}  // namespace parteval
