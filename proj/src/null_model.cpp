#include "parteval/null_model.hpp"

#include "parteval/errors.hpp"

namespace parteval {

std::string_view to_string(NullModelKind kind) {
    return kind == NullModelKind::Uniform ? "uniform" : "configuration";
}

NullModelKind null_model_from_string(std::string_view name) {
    if (name == "uniform") return NullModelKind::Uniform;
    if (name == "configuration") return NullModelKind::Configuration;
    throw ValidationError("unknown null model '" + std::string(name) +
                          "' (expected uniform or configuration)");
}

NullExpectation expected_internal_edges(const Graph& g, const CommunityStats& stats,
                                        NullModelKind kind) {
    const auto m = g.edge_count();
    if (m < 1) throw ValidationError("null model undefined for a graph without edges");
    const auto p = g.vertex_pair_count();

    NullExpectation exp;
    exp.kind = kind;
    exp.expected_internal.reserve(stats.communities.size());
    for (const auto& c : stats.communities) {
        double expected;
        if (kind == NullModelKind::Uniform) {
            expected = static_cast<double>(c.internal_pairs) * static_cast<double>(m) /
                       static_cast<double>(p);
        } else {
            expected = static_cast<double>(c.degree_sum) * static_cast<double>(c.degree_sum) /
                       (4.0 * static_cast<double>(m));
        }
        exp.expected_internal.push_back(expected);
        exp.expected_internal_total += expected;
    }
    exp.corrected_pair_count =
        exp.expected_internal_total * static_cast<double>(p) / static_cast<double>(m);
    return exp;
}

}  // namespace parteval
