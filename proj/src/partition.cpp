#include "parteval/partition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "parteval/errors.hpp"

namespace parteval {

Partition::Partition(std::vector<CommunityId> assignment, std::int32_t count)
    : assignment_(std::move(assignment)), count_(count) {
    member_offsets_.assign(count_ + 1, 0);
    for (const CommunityId c : assignment_) ++member_offsets_[c + 1];
    for (std::int32_t c = 0; c < count_; ++c) member_offsets_[c + 1] += member_offsets_[c];
    members_.resize(assignment_.size());
    std::vector<std::int64_t> cursor(member_offsets_.begin(), member_offsets_.end() - 1);
    for (std::size_t u = 0; u < assignment_.size(); ++u)
        members_[cursor[assignment_[u]]++] = static_cast<NodeId>(u);
}

Partition Partition::from_assignment(const Graph& g, std::span<const CommunityId> communities) {
    if (static_cast<std::int64_t>(communities.size()) != g.node_count())
        throw ValidationError("assignment covers " + std::to_string(communities.size()) +
                              " nodes, graph has " + std::to_string(g.node_count()));

    std::vector<CommunityId> dense(communities.size());
    std::unordered_map<CommunityId, CommunityId> remap;
    CommunityId next = 0;
    for (std::size_t u = 0; u < communities.size(); ++u) {
        const auto [it, inserted] = remap.emplace(communities[u], next);
        if (inserted) ++next;
        dense[u] = it->second;
    }
    return Partition(std::move(dense), next);
}

Partition Partition::singletons(const Graph& g) {
    std::vector<CommunityId> ids(g.node_count());
    for (std::size_t u = 0; u < ids.size(); ++u) ids[u] = static_cast<CommunityId>(u);
    return Partition(std::move(ids), static_cast<std::int32_t>(g.node_count()));
}

Partition Partition::single_community(const Graph& g) {
    return Partition(std::vector<CommunityId>(g.node_count(), 0), 1);
}

namespace {

Partition from_label_groups(const Graph& g,
                            const std::vector<std::pair<std::string, std::string>>& rows) {
    std::vector<CommunityId> assignment(g.node_count(), -1);
    std::unordered_map<std::string, CommunityId> community_ids;
    CommunityId next = 0;

    for (const auto& [node_label, community_label] : rows) {
        const auto node = g.find_node(node_label);
        if (!node) throw ValidationError("unknown node label '" + node_label + "'");
        const auto [it, inserted] = community_ids.emplace(community_label, next);
        if (inserted) ++next;
        if (assignment[*node] != -1 && assignment[*node] != it->second)
            throw ValidationError("node '" + node_label + "' assigned to two communities");
        assignment[*node] = it->second;
    }

    std::string missing;
    int missing_count = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (assignment[u] == -1) {
            if (++missing_count <= 10) {
                if (!missing.empty()) missing += ", ";
                missing += "'" + g.label(u) + "'";
            }
        }
    }
    if (missing_count > 0) {
        if (missing_count > 10) missing += ", ... (" + std::to_string(missing_count) + " total)";
        throw ValidationError("partition misses nodes: " + missing);
    }
    return Partition::from_assignment(g, assignment);
}

}  // namespace

Partition parse_partition(std::istream& in, const Graph& g) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        const auto tab = line.find('\t');
        std::string node, community;
        if (tab != std::string::npos) {
            node = line.substr(0, tab);
            community = line.substr(tab + 1);
        } else {
            std::istringstream tokens(line);
            std::string extra;
            if (!(tokens >> node >> community))
                throw ParseError(line_no, "expected 'node<TAB>community', got '" + line + "'");
            if (tokens >> extra)
                throw ParseError(line_no, "trailing token '" + extra + "'");
        }
        if (node.empty() || community.empty())
            throw ParseError(line_no, "empty node or community field");
        rows.emplace_back(std::move(node), std::move(community));
    }
    return from_label_groups(g, rows);
}

Partition parse_partition(std::string_view text, const Graph& g) {
    std::istringstream in{std::string(text)};
    return parse_partition(in, g);
}

Partition parse_partition_json(std::istream& in, const Graph& g) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON partition: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("JSON partition must be an array of arrays");

    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t community = 0;
    for (const auto& group : doc) {
        if (!group.is_array()) throw ParseError("JSON partition must be an array of arrays");
        for (const auto& member : group) {
            std::string label;
            if (member.is_string())
                label = member.get<std::string>();
            else if (member.is_number_integer())
                label = std::to_string(member.get<std::int64_t>());
            else
                throw ParseError("JSON node labels must be strings or integers");
            rows.emplace_back(std::move(label), std::to_string(community));
        }
        ++community;
    }
    return from_label_groups(g, rows);
}

Partition parse_partition_auto(std::istream& in, const Graph& g) {
    int ch;
    while ((ch = in.peek()) != EOF && (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'))
        in.get();
    if (ch == '[' || ch == '{') return parse_partition_json(in, g);
    return parse_partition(in, g);
}

void write_partition_tsv(std::ostream& out, const Graph& g, const Partition& part) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        out << g.label(u) << '\t' << part.community_of(u) << '\n';
}

CommunityStats community_stats(const Graph& g, const Partition& part) {
    CommunityStats stats;
    stats.communities.resize(part.community_count());

    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto& c = stats.communities[part.community_of(u)];
        c.size += 1;
        c.degree_sum += g.degree(u);
    }
    for (const auto& [u, v] : g.edges()) {
        if (part.community_of(u) == part.community_of(v))
            stats.communities[part.community_of(u)].internal_edges += 1;
    }
    for (auto& c : stats.communities) {
        c.internal_pairs = c.size * (c.size - 1) / 2;
        stats.internal_edges += c.internal_edges;
        stats.internal_pairs += c.internal_pairs;
    }
    return stats;
}

}  // namespace parteval
