#include <doctest.h>

#include "parteval/errors.hpp"
#include "parteval/null_model.hpp"
#include "oracles.hpp"

using namespace parteval;

namespace {

constexpr double kTol = 1e-12;

Graph bowtie() { return parse_edge_list("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3"); }

Partition two_triangles(const Graph& g) {
    return parse_partition("0\tA\n1\tA\n2\tA\n3\tB\n4\tB\n5\tB", g);
}

}  // namespace

TEST_CASE("bowtie expectations match the definitional formulas") {
    const Graph g = bowtie();
    const CommunityStats stats = community_stats(g, two_triangles(g));

    const NullExpectation uniform = expected_internal_edges(g, stats, NullModelKind::Uniform);
    CHECK(uniform.expected_internal_total == doctest::Approx(6.0 * 7.0 / 15.0).epsilon(kTol));
    CHECK(uniform.corrected_pair_count == doctest::Approx(6.0).epsilon(kTol));

    const NullExpectation config =
        expected_internal_edges(g, stats, NullModelKind::Configuration);
    CHECK(config.expected_internal_total == doctest::Approx(3.5).epsilon(kTol));
    CHECK(config.corrected_pair_count == doctest::Approx(7.5).epsilon(kTol));
}

TEST_CASE("single community under configuration expects every edge") {
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracles::random_graph(rng);
        const CommunityStats stats = community_stats(g, Partition::single_community(g));
        const NullExpectation config =
            expected_internal_edges(g, stats, NullModelKind::Configuration);
        CHECK(config.expected_internal_total ==
              doctest::Approx(static_cast<double>(g.edge_count())).epsilon(kTol));
    }
}

TEST_CASE("uniform identity: expected recall equals the pair fraction") {
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        const Graph g = oracles::random_graph(rng);
        const Partition part = oracles::random_partition(g, rng);
        const CommunityStats stats = community_stats(g, part);
        const NullExpectation uniform =
            expected_internal_edges(g, stats, NullModelKind::Uniform);
        const double lhs = uniform.expected_internal_total / static_cast<double>(g.edge_count());
        const double rhs = static_cast<double>(stats.internal_pairs) /
                           static_cast<double>(g.vertex_pair_count());
        CHECK(lhs == doctest::Approx(rhs).epsilon(kTol));
        // and the corrected pair count folds back onto the raw one
        if (stats.internal_pairs > 0)
            CHECK(uniform.corrected_pair_count ==
                  doctest::Approx(static_cast<double>(stats.internal_pairs)).epsilon(kTol));
    }
}

TEST_CASE("singleton partition sums the per-degree expectations") {
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracles::random_graph(rng);
        const CommunityStats stats = community_stats(g, Partition::singletons(g));
        const NullExpectation config =
            expected_internal_edges(g, stats, NullModelKind::Configuration);
        double direct = 0.0;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            const double d = static_cast<double>(g.degree(u));
            direct += d * d / (4.0 * static_cast<double>(g.edge_count()));
        }
        CHECK(config.expected_internal_total == doctest::Approx(direct).epsilon(kTol));
    }
}

TEST_CASE("edgeless graphs have no null model") {
    const Graph g(3, {});
    const Partition part = Partition::single_community(g);
    const CommunityStats stats = community_stats(g, part);
    CHECK_THROWS_AS(expected_internal_edges(g, stats, NullModelKind::Uniform), ValidationError);
}
