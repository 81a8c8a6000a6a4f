#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "parteval/benchgen.hpp"
#include "parteval/detectors.hpp"
#include "parteval/errors.hpp"
#include "parteval/graph.hpp"
#include "parteval/metrics.hpp"
#include "parteval/null_model.hpp"
#include "parteval/pareto.hpp"
#include "parteval/partition.hpp"
#include "parteval/pr_eval.hpp"

namespace py = pybind11;
using namespace parteval;

namespace {

Graph graph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read graph file '" + path + "'");
    return parse_edge_list(in);
}

Partition partition_from_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read partition file '" + path + "'");
    return parse_partition_auto(in, g);
}

Partition partition_from_groups(const Graph& g,
                                const std::vector<std::vector<std::string>>& groups) {
    std::vector<CommunityId> assignment(g.node_count(), -1);
    CommunityId c = 0;
    for (const auto& group : groups) {
        for (const auto& label : group) {
            const auto node = g.find_node(label);
            if (!node) throw ValidationError("unknown node label '" + label + "'");
            if (assignment[*node] != -1)
                throw ValidationError("node '" + label + "' assigned twice");
            assignment[*node] = c;
        }
        ++c;
    }
    return Partition::from_assignment(g, assignment);
}

std::vector<std::vector<std::string>> partition_groups(const Graph& g, const Partition& part) {
    std::vector<std::vector<std::string>> groups(part.community_count());
    for (CommunityId c = 0; c < part.community_count(); ++c)
        for (const NodeId u : part.members(c)) groups[c].push_back(g.label(u));
    return groups;
}

py::dict report_to_dict(const MetricReport& report) {
    py::dict d;
    for (const auto* col : kMetricColumns) d[col] = metric_by_name(report, col);
    d["null"] = std::string(to_string(report.null_kind));
    return d;
}

py::dict pr_to_dict(const PRResult& r) {
    py::dict d;
    d["tp"] = r.tp;
    d["fp"] = r.fp;
    d["fn"] = r.fn;
    d["tn"] = r.tn;
    d["precision"] = r.precision;
    d["recall"] = r.recall;
    return d;
}

TwoFqMode mode_from_string(const std::string& name) {
    if (name == "convex") return TwoFqMode::Convex;
    if (name == "product") return TwoFqMode::Product;
    throw ValidationError("unknown two_fq mode '" + name + "' (expected convex or product)");
}

}  // namespace

PYBIND11_MODULE(_parteval, m) {
    m.doc() = "multi-criteria evaluation of community partitions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::node_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("vertex_pairs", &Graph::vertex_pair_count)
        .def("degree", &Graph::degree, py::arg("node"))
        .def("label", &Graph::label, py::arg("node"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<std::string, std::string>> out;
                 out.reserve(g.edge_count());
                 for (const auto& [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
                 return out;
             })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.node_count() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<Partition>(m, "Partition")
        .def_property_readonly("communities", &Partition::community_count)
        .def("community_of", &Partition::community_of, py::arg("node"))
        .def("assignment", &Partition::assignment)
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
        .def("__repr__", [](const Partition& part) {
            std::ostringstream s;
            s << "Partition(communities=" << part.community_count() << ")";
            return s.str();
        });

    m.def("load_graph", &graph_from_file, py::arg("path"));
    m.def("parse_graph", [](const std::string& text) { return parse_edge_list(text); },
          py::arg("text"));
    m.def("write_graph", [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
    });

    m.def("load_partition", &partition_from_file, py::arg("path"), py::arg("graph"));
    m.def("parse_partition",
          [](const std::string& text, const Graph& g) { return parse_partition(text, g); },
          py::arg("text"), py::arg("graph"));
    m.def("partition_from_groups", &partition_from_groups, py::arg("graph"), py::arg("groups"));
    m.def("groups", &partition_groups, py::arg("graph"), py::arg("partition"));
    m.def("singletons", &Partition::singletons, py::arg("graph"));
    m.def("single_community", &Partition::single_community, py::arg("graph"));

    m.def(
        "metric_report",
        [](const Graph& g, const Partition& part, const std::string& null_kind) {
            return report_to_dict(metric_report(g, part, null_model_from_string(null_kind)));
        },
        py::arg("graph"), py::arg("partition"), py::arg("null") = "configuration");

    m.def(
        "pareto_frontier",
        [](const std::vector<std::tuple<std::string, double, double>>& raw) {
            std::vector<ScorePoint> points;
            points.reserve(raw.size());
            for (const auto& [id, x, y] : raw) points.push_back({id, x, y});
            std::vector<std::tuple<std::string, double, double>> out;
            for (const auto& pt : pareto_frontier(points)) out.emplace_back(pt.id, pt.x, pt.y);
            return out;
        },
        py::arg("points"));

    m.def(
        "two_fq",
        [](double modularity, double mdensity, double alpha, const std::string& mode) {
            return two_fq(modularity, mdensity, alpha, mode_from_string(mode));
        },
        py::arg("modularity"), py::arg("mdensity"), py::arg("alpha"),
        py::arg("mode") = "convex");

    m.def(
        "alpha_envelope",
        [](const std::vector<std::tuple<std::string, double, double>>& raw) {
            std::vector<EnvelopePoint> points;
            points.reserve(raw.size());
            for (const auto& [id, mod, md] : raw) points.push_back({id, mod, md});
            std::vector<std::tuple<std::string, double, double>> out;
            for (const auto& iv : alpha_envelope(points)) out.emplace_back(iv.id, iv.lo, iv.hi);
            return out;
        },
        py::arg("points"));

    py::class_<EvalSplit>(m, "EvalSplit")
        .def_readonly("training_graph", &EvalSplit::training_graph)
        .def_readonly("removed_edges", &EvalSplit::removed_edges)
        .def_readonly("sampled_nonedges", &EvalSplit::sampled_nonedges)
        .def_readonly("removal_fraction", &EvalSplit::removal_fraction)
        .def_readonly("seed", &EvalSplit::seed);

    m.def("make_split", &make_split, py::arg("graph"), py::arg("p"), py::arg("seed"));
    m.def(
        "evaluate_partition",
        [](const EvalSplit& split, const Partition& part) {
            return pr_to_dict(evaluate_partition(split, part));
        },
        py::arg("split"), py::arg("partition"));

    m.def(
        "gen_sbm",
        [](const std::vector<std::int64_t>& blocks, double p_in, double p_out,
           std::uint64_t seed) {
            auto planted = gen_sbm(blocks, p_in, p_out, seed);
            return py::make_tuple(std::move(planted.graph), std::move(planted.planted));
        },
        py::arg("block_sizes"), py::arg("p_in"), py::arg("p_out"), py::arg("seed"));
    m.def(
        "gen_fixed_clique_mu",
        [](int cliques, int size, double mu, std::uint64_t seed) {
            auto planted = gen_fixed_clique_mu(cliques, size, mu, seed);
            return py::make_tuple(std::move(planted.graph), std::move(planted.planted));
        },
        py::arg("num_cliques"), py::arg("clique_size"), py::arg("mu"), py::arg("seed"));
    m.def(
        "gen_ring_of_cliques",
        [](int cliques, int size) -> py::tuple {
            auto ring = gen_ring_of_cliques(cliques, size);
            py::object paired = py::none();
            if (ring.paired) paired = py::cast(std::move(*ring.paired));
            return py::make_tuple(std::move(ring.graph), std::move(ring.cliques),
                                  std::move(paired));
        },
        py::arg("num_cliques"), py::arg("clique_size"));
    m.def(
        "gen_clique_chain",
        [](int components, int chain_len, int size) {
            auto planted = gen_clique_chain(components, chain_len, size);
            return py::make_tuple(std::move(planted.graph), std::move(planted.planted));
        },
        py::arg("num_components"), py::arg("chain_len"), py::arg("clique_size"));

    m.def("label_propagation", &label_propagation, py::arg("graph"), py::arg("seed"));
    m.def(
        "greedy_agglomerative",
        [](const Graph& g, const std::string& null_kind) {
            auto hierarchy = greedy_agglomerative(g, null_model_from_string(null_kind));
            return py::make_tuple(std::move(hierarchy.levels), hierarchy.modularities,
                                  hierarchy.best_index);
        },
        py::arg("graph"), py::arg("null") = "configuration");
    m.def("louvain", &louvain_style, py::arg("graph"), py::arg("seed"));
}
