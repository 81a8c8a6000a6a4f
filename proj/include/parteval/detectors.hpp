#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "parteval/graph.hpp"
#include "parteval/null_model.hpp"
#include "parteval/partition.hpp"

namespace parteval {

// Baseline detectors. Deliberately simple reference implementations: the
// primary input path of the toolkit is partition files produced elsewhere.

/// Asynchronous label propagation, node order reshuffled each sweep with the
/// seeded generator. Ties keep the current label when it is among the most
/// frequent, otherwise take the smallest tied label. Stops when a sweep
/// changes nothing or after 100 sweeps. Deterministic given the seed.
Partition label_propagation(const Graph& g, std::uint64_t seed);

/// Full agglomerative merge sequence plus the argmax cut.
/// levels[0] is the all-singleton partition, levels.back() one community.
struct MergeHierarchy {
    std::vector<Partition> levels;
    std::vector<double> modularities;  // under the gain's null model
    std::size_t best_index = 0;
};

/// Greedy agglomeration: repeatedly merges the community pair with the
/// largest modularity gain under `kind` until one community remains. Ties
/// pick the smallest community-id pair.
MergeHierarchy greedy_agglomerative(const Graph& g, NullModelKind kind);

/// Two-phase local moving + aggregation, seeded visit order, first
/// maximal-gain community in neighbor-scan order wins ties. Returns the
/// flattened partition of every aggregation level, coarsest last.
std::vector<Partition> louvain_style(const Graph& g, std::uint64_t seed);

}  // namespace parteval
