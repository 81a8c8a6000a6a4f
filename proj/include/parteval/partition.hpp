#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "parteval/graph.hpp"

namespace parteval {

using CommunityId = std::int32_t;

/// Complete, disjoint assignment of every node to exactly one community.
/// Community ids are dense 0..count-1 with no empty community.
class Partition {
public:
    /// Validates and densifies a raw node->community assignment. Ids are
    /// renumbered in first-appearance order (by node index) so equal
    /// groupings always produce equal partitions.
    static Partition from_assignment(const Graph& g, std::span<const CommunityId> communities);

    static Partition singletons(const Graph& g);
    static Partition single_community(const Graph& g);

    CommunityId community_of(NodeId u) const { return assignment_[u]; }
    std::int32_t community_count() const { return count_; }

    const std::vector<CommunityId>& assignment() const { return assignment_; }

    std::span<const NodeId> members(CommunityId c) const {
        return {members_.data() + member_offsets_[c], members_.data() + member_offsets_[c + 1]};
    }

    bool operator==(const Partition& other) const { return assignment_ == other.assignment_; }

private:
    Partition(std::vector<CommunityId> assignment, std::int32_t count);

    std::vector<CommunityId> assignment_;
    std::int32_t count_;
    std::vector<std::int64_t> member_offsets_;
    std::vector<NodeId> members_;
};

/// Parses "node<TAB>community" lines (any whitespace accepted as separator
/// when the line has no tab). Every graph node must appear exactly once.
/// Throws ValidationError listing missing nodes, on overlapping assignments,
/// and on labels that are not in the graph.
Partition parse_partition(std::istream& in, const Graph& g);
Partition parse_partition(std::string_view text, const Graph& g);

/// JSON alternative: array of arrays of node labels, e.g. [["a","b"],["c"]].
/// Integer labels are accepted and read as their decimal string.
Partition parse_partition_json(std::istream& in, const Graph& g);

/// Dispatches on the first non-space byte ('[' or '{' selects JSON).
Partition parse_partition_auto(std::istream& in, const Graph& g);

void write_partition_tsv(std::ostream& out, const Graph& g, const Partition& part);

/// Exact per-community counts feeding every quality function.
struct CommunityStats {
    struct Community {
        std::int64_t size = 0;            // members
        std::int64_t internal_edges = 0;  // edges with both endpoints inside
        std::int64_t internal_pairs = 0;  // size*(size-1)/2
        std::int64_t degree_sum = 0;      // sum of member degrees
    };

    std::vector<Community> communities;
    std::int64_t internal_edges = 0;  // sum over communities
    std::int64_t internal_pairs = 0;  // sum over communities
};

CommunityStats community_stats(const Graph& g, const Partition& part);

}  // namespace parteval
