#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "parteval/errors.hpp"
#include "parteval/metrics.hpp"
#include "oracles.hpp"

using namespace parteval;

namespace {

constexpr double kTol = 1e-12;

Graph bowtie() { return parse_edge_list("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3"); }

Partition two_triangles(const Graph& g) {
    return parse_partition("0\tA\n1\tA\n2\tA\n3\tB\n4\tB\n5\tB", g);
}

}  // namespace

TEST_CASE("bowtie two-triangle report, configuration null") {
    const Graph g = bowtie();
    const MetricReport r = metric_report(g, two_triangles(g), NullModelKind::Configuration);
    CHECK(r.precision == doctest::Approx(1.0).epsilon(kTol));
    CHECK(r.recall == doctest::Approx(6.0 / 7.0).epsilon(kTol));
    CHECK(r.c_size == doctest::Approx(0.6).epsilon(kTol));
    CHECK(r.q_prime == doctest::Approx(2.5 / 7.0).epsilon(kTol));
    CHECK(r.modularity == doctest::Approx(2.5 / 7.0).epsilon(kTol));
    CHECK(r.ccs == doctest::Approx(0.5).epsilon(kTol));
    CHECK(r.density_gain == doctest::Approx(2.5 / 6.0).epsilon(kTol));
    CHECK(r.mdensity == doctest::Approx(2.0 / 7.0).epsilon(kTol));
}

TEST_CASE("bowtie two-triangle report, uniform null") {
    const Graph g = bowtie();
    const MetricReport r = metric_report(g, two_triangles(g), NullModelKind::Uniform);
    CHECK(r.q_prime == doctest::Approx((6.0 - 2.8) / 7.0).epsilon(kTol));
    CHECK(r.modularity == r.q_prime);
    // k' = k under uniform, so mdensity factors into precision * modularity
    CHECK(r.mdensity == doctest::Approx(r.precision * r.modularity).epsilon(kTol));
}

TEST_CASE("degenerate partitions hit the documented conventions") {
    const Graph g = bowtie();

    const MetricReport single =
        metric_report(g, Partition::single_community(g), NullModelKind::Configuration);
    CHECK(single.recall == 1.0);
    CHECK(single.modularity == 0.0);
    CHECK(single.mdensity == 0.0);
    CHECK(single.ccs == 0.0);
    CHECK(single.c_size == 0.0);
    CHECK(single.precision == doctest::Approx(7.0 / 15.0).epsilon(kTol));

    const MetricReport alone =
        metric_report(g, Partition::singletons(g), NullModelKind::Uniform);
    CHECK(alone.precision == 0.0);
    CHECK(alone.recall == 0.0);
    CHECK(alone.c_size == 1.0);
    CHECK(alone.ccs == 1.0);
    CHECK(alone.modularity == 0.0);
    CHECK(alone.density_gain == 0.0);
    CHECK(alone.mdensity == 0.0);
}

TEST_CASE("identities hold on random instances") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracles::random_graph(rng);
        const Partition part = oracles::random_partition(g, rng);
        for (const auto kind : {NullModelKind::Uniform, NullModelKind::Configuration}) {
            const MetricReport r = metric_report(g, part, kind);
            CHECK(r.q_prime == r.modularity);  // one computation, two names
            CHECK(r.ccs == doctest::Approx(1.0 - (r.recall - r.modularity)).epsilon(kTol));
        }
        const MetricReport uniform = metric_report(g, part, NullModelKind::Uniform);
        CHECK(uniform.mdensity ==
              doctest::Approx(uniform.precision * uniform.modularity).epsilon(kTol));
    }
}

TEST_CASE("all-singleton configuration modularity equals the negative degree sum") {
    Rng rng(37);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracles::random_graph(rng);
        const MetricReport r =
            metric_report(g, Partition::singletons(g), NullModelKind::Configuration);
        double direct = 0.0;
        const double m = static_cast<double>(g.edge_count());
        for (NodeId u = 0; u < g.node_count(); ++u) {
            const double d = static_cast<double>(g.degree(u));
            direct -= d * d / (4.0 * m * m);
        }
        CHECK(r.modularity == doctest::Approx(direct).epsilon(kTol));
        CHECK(r.modularity <= 0.0);
    }
}

TEST_CASE("modularity agrees with the per-community summation oracle") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const Graph g = oracles::random_graph(rng);
        const Partition part = oracles::random_partition(g, rng);
        const MetricReport r = metric_report(g, part, NullModelKind::Configuration);
        CHECK(r.modularity ==
              doctest::Approx(oracles::modularity_by_community_sum(g, part)).epsilon(1e-10));
    }
}

TEST_CASE("disjoint cliques under the uniform null") {
    // q disjoint cliques K_s partitioned into the cliques: mdensity = 1 - m/p
    for (const int q : {2, 5, 20}) {
        const int s = 6;
        std::vector<Edge> edges;
        std::vector<CommunityId> clique_of(q * s);
        for (int c = 0; c < q; ++c)
            for (int i = 0; i < s; ++i) {
                clique_of[c * s + i] = c;
                for (int j = i + 1; j < s; ++j)
                    edges.emplace_back(c * s + i, c * s + j);
            }
        const Graph g(q * s, std::move(edges));
        const Partition part = Partition::from_assignment(g, clique_of);
        const MetricReport r = metric_report(g, part, NullModelKind::Uniform);
        const double expected = 1.0 - static_cast<double>(g.edge_count()) /
                                          static_cast<double>(g.vertex_pair_count());
        CHECK(std::abs(r.mdensity - expected) <= kTol);
        CHECK(r.precision == 1.0);
        CHECK(r.recall == 1.0);
    }
}

TEST_CASE("merging adjacent communities trades recall against c_size") {
    Rng rng(43);
    int tested = 0;
    while (tested < 50) {
        const Graph g = oracles::random_graph(rng);
        const Partition part = oracles::random_partition(g, rng);
        // find a community pair joined by at least one edge
        CommunityId a = -1, b = -1;
        for (const auto& [u, v] : g.edges()) {
            if (part.community_of(u) != part.community_of(v)) {
                a = part.community_of(u);
                b = part.community_of(v);
                break;
            }
        }
        if (a < 0) continue;
        std::vector<CommunityId> merged(part.assignment());
        std::replace(merged.begin(), merged.end(), b, a);
        const Partition after = Partition::from_assignment(g, merged);

        const MetricReport before_r = metric_report(g, part, NullModelKind::Configuration);
        const MetricReport after_r = metric_report(g, after, NullModelKind::Configuration);
        CHECK(after_r.recall > before_r.recall);
        CHECK(after_r.c_size <= before_r.c_size);
        ++tested;
    }
}

TEST_CASE("metric_by_name covers every report column") {
    const Graph g = bowtie();
    const MetricReport r = metric_report(g, two_triangles(g), NullModelKind::Configuration);
    for (const auto* col : kMetricColumns) CHECK(std::isfinite(metric_by_name(r, col)));
    CHECK_THROWS_AS(metric_by_name(r, "conductance"), ValidationError);
}

TEST_CASE("recall requires edges") {
    const Graph g(4, {});
    const CommunityStats stats = community_stats(g, Partition::single_community(g));
    CHECK_THROWS_AS(recall(stats, g), ValidationError);
}
