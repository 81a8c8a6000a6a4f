#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parteval/graph.hpp"
#include "parteval/partition.hpp"

namespace parteval {

/// Edge-removal protocol: a training graph (original minus the removed
/// edges, same node set), the removed edges, and a sample of non-edges. The
/// removed edges plus the non-edge sample form the validation set over which
/// a partition is read as an EDGE/NOTEDGE classifier.
struct EvalSplit {
    Graph training_graph;
    std::vector<Edge> removed_edges;     // subset of the original edges
    std::vector<Edge> sampled_nonedges;  // disjoint from the original edges
    double removal_fraction = 0.0;
    std::uint64_t seed = 0;
};

/// round-half-up, the documented rounding rule for all split sizes.
std::int64_t round_half_up(double x);

/// |removed| = round(P*m), |validation| = round(P*p), non-edge sample fills
/// the difference. Both samples are uniform without replacement and
/// deterministic for a fixed seed. Throws std::invalid_argument for P
/// outside (0,1) and ValidationError when the graph has too few non-edges.
EvalSplit make_split(const Graph& g, double removal_fraction, std::uint64_t seed);

struct PRResult {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;
    double precision = 0.0;  // tp / (tp + fp), 0 when the denominator is 0
    double recall = 0.0;     // tp / (tp + fn), same convention
};

/// A validation pair is predicted EDGE iff its endpoints share a community.
PRResult evaluate_partition(const EvalSplit& split, const Partition& part);

using Detector = std::function<Partition(const Graph& training_graph, std::uint64_t seed)>;

struct TrialRun {
    std::vector<std::uint64_t> seeds;
    std::vector<PRResult> results;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
};

/// One split + detector run + evaluation per seed.
TrialRun run_trials(const Graph& g, double removal_fraction,
                    std::span<const std::uint64_t> seeds, const Detector& detector);

}  // namespace parteval
