#pragma once

#include <string_view>
#include <vector>

#include "parteval/graph.hpp"
#include "parteval/partition.hpp"

namespace parteval {

/// Uniform keeps only the edge count: every vertex pair carries m/p expected
/// edges. Configuration preserves the degree sequence: a community with
/// degree sum d expects d^2/(4m) internal edges (Newman-Girvan).
enum class NullModelKind { Uniform, Configuration };

std::string_view to_string(NullModelKind kind);
NullModelKind null_model_from_string(std::string_view name);

/// Expected internal edge counts under a null model, plus the
/// degree-corrected pair count used by the density metrics.
struct NullExpectation {
    NullModelKind kind;
    std::vector<double> expected_internal;  // per community
    double expected_internal_total = 0.0;   // sum over communities
    double corrected_pair_count = 0.0;      // expected_internal_total * p / m
};

/// Throws ValidationError when m = 0 (the models are undefined there).
/// No clamping: under Configuration a heavy community may expect more
/// internal edges than it has pairs.
NullExpectation expected_internal_edges(const Graph& g, const CommunityStats& stats,
                                        NullModelKind kind);

}  // namespace parteval
