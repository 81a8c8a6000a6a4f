#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace parteval {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph. Nodes are dense indices 0..n-1; the original
/// source labels are kept for reporting. Immutable after construction and
/// safe to share across threads.
class Graph {
public:
    /// Builds a graph over `node_count` nodes (isolated nodes allowed).
    /// Edges are normalized to (min,max), sorted, and deduplicated.
    /// `labels` maps index -> source label; empty means decimal labels.
    ///
    /// Throws ValidationError on self-loops or out-of-range endpoints.
    Graph(std::int64_t node_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::int64_t node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    /// Number of unordered vertex pairs, n(n-1)/2. Exact 64-bit arithmetic.
    std::int64_t vertex_pair_count() const { return n_ * (n_ - 1) / 2; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }

    std::int64_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

    bool has_edge(NodeId u, NodeId v) const;

    /// All edges as (min,max) pairs in ascending order.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& label(NodeId u) const { return labels_[u]; }

    std::optional<NodeId> find_node(std::string_view label) const;

private:
    std::int64_t n_;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
};

/// Parses the edge-list format: one edge per line, two whitespace-separated
/// node tokens, '#' or '%' start a comment line. Labels are mapped to dense
/// indices in first-appearance order; duplicate edges are merged.
///
/// Throws ParseError (with line number) on malformed lines and
/// ValidationError on self-loops or an empty edge set.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// One "label label" line per edge, in internal edge order.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace parteval
