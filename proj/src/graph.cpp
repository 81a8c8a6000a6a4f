#include "parteval/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "parteval/errors.hpp"

namespace parteval {

Graph::Graph(std::int64_t node_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 1) throw ValidationError("graph needs at least one node");

    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ValidationError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
        if (u == v) throw ValidationError("self-loop on node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    if (labels_.empty()) {
        labels_.reserve(n_);
        for (std::int64_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    } else if (static_cast<std::int64_t>(labels_.size()) != n_) {
        throw ValidationError("label count does not match node count");
    }
    label_index_.reserve(labels_.size());
    for (std::int64_t i = 0; i < n_; ++i) {
        if (!label_index_.emplace(labels_[i], static_cast<NodeId>(i)).second)
            throw ValidationError("duplicate node label '" + labels_[i] + "'");
    }

    // CSR adjacency
    offsets_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::int64_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    for (std::int64_t i = 0; i < n_; ++i)
        std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    // search from the lower-degree endpoint
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
    const auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;

    const auto intern = [&](std::string&& token) {
        const auto [it, inserted] = index.emplace(std::move(token), static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(it->first);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a >> b))
            throw ParseError(line_no, "expected two node tokens, got '" + line + "'");
        if (tokens >> extra)
            throw ParseError(line_no, "trailing token '" + extra + "' after edge");

        const NodeId u = intern(std::move(a));
        const NodeId v = intern(std::move(b));
        if (u == v)
            throw ValidationError("line " + std::to_string(line_no) + ": self-loop on node '" +
                                  labels[u] + "'");
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw ValidationError("edge list is empty");
    const auto node_count = static_cast<std::int64_t>(labels.size());
    return Graph(node_count, std::move(edges), std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace parteval
