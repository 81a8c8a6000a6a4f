#include "parteval/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "parteval/benchgen.hpp"
#include "parteval/detectors.hpp"
#include "parteval/errors.hpp"
#include "parteval/metrics.hpp"
#include "parteval/pareto.hpp"
#include "parteval/pr_eval.hpp"

namespace parteval::commands {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Routes output either to a file or to the fallback stream.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ValidationError("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read graph file '" + path + "'");
    return parse_edge_list(in);
}

Partition load_partition(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read partition file '" + path + "'");
    const bool is_json = path.size() > 5 && path.substr(path.size() - 5) == ".json";
    return is_json ? parse_partition_json(in, g) : parse_partition_auto(in, g);
}

void error_record(std::ostream& err, const std::string& input, const std::string& message) {
    err << json{{"input", input}, {"error", message}}.dump() << '\n';
}

struct ReportRow {
    std::string label;
    std::int64_t communities = 0;
    MetricReport report;
};

void write_rows_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "label,communities";
    for (const auto* col : kMetricColumns) out << ',' << col;
    out << '\n';
    for (const auto& row : rows) {
        out << row.label << ',' << row.communities;
        for (const auto* col : kMetricColumns)
            out << ',' << format_double(metric_by_name(row.report, col));
        out << '\n';
    }
}

json row_to_json(const ReportRow& row) {
    json obj{{"label", row.label}, {"communities", row.communities}};
    for (const auto* col : kMetricColumns) obj[col] = metric_by_name(row.report, col);
    obj["null"] = std::string(to_string(row.report.null_kind));
    return obj;
}

// Minimal CSV table reader for our own outputs: comma-separated, first row
// is the header, no quoting.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw ValidationError("scores file has no column '" + name + "'");
    }
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read scores file '" + path + "'");
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (table.header.empty()) {
            table.header = std::move(fields);
        } else {
            if (fields.size() != table.header.size())
                throw ParseError(line_no, "row has " + std::to_string(fields.size()) +
                                              " fields, header has " +
                                              std::to_string(table.header.size()));
            table.rows.push_back(std::move(fields));
        }
    }
    if (table.header.empty()) throw ValidationError("scores file '" + path + "' is empty");
    return table;
}

double parse_field_double(const std::string& text, std::size_t row_no) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(text, &consumed);
        if (consumed != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ParseError(row_no, "cannot parse number '" + text + "'");
    }
}

int load_rows(const std::string& graph_path, const std::vector<std::string>& partition_paths,
              NullModelKind kind, std::ostream& err, std::vector<ReportRow>& rows) {
    const Graph g = load_graph(graph_path);
    int failures = 0;
    for (const auto& path : partition_paths) {
        try {
            const Partition part = load_partition(path, g);
            rows.push_back({path, part.community_count(), metric_report(g, part, kind)});
        } catch (const std::exception& e) {
            error_record(err, path, e.what());
            ++failures;
        }
    }
    return failures;
}

}  // namespace

OutputFormat format_from_string(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ValidationError("unknown output format '" + std::string(name) + "'");
}

int run_metrics(const MetricsCmd& cmd, std::ostream& out, std::ostream& err) {
    if (cmd.partition_paths.empty()) {
        error_record(err, cmd.graph_path, "no partition files given");
        return 1;
    }
    std::vector<ReportRow> rows;
    int failures = 0;
    try {
        failures = load_rows(cmd.graph_path, cmd.partition_paths, cmd.null_kind, err, rows);
    } catch (const std::exception& e) {
        error_record(err, cmd.graph_path, e.what());
        return 1;
    }

    Output output(cmd.out_path, out);
    if (cmd.format == OutputFormat::Csv) {
        write_rows_csv(output.get(), rows);
    } else {
        json doc = json::array();
        for (const auto& row : rows) doc.push_back(row_to_json(row));
        output.get() << doc.dump(2) << '\n';
    }
    if (rows.empty()) return 1;
    return failures == 0 ? 0 : 2;
}

int run_compare(const CompareCmd& cmd, std::ostream& out, std::ostream& err) {
    const auto slash = cmd.criteria_pair.find('/');
    if (slash == std::string::npos) {
        error_record(err, cmd.criteria_pair, "criteria pair must look like modularity/mdensity");
        return 1;
    }
    const std::string x_name = cmd.criteria_pair.substr(0, slash);
    const std::string y_name = cmd.criteria_pair.substr(slash + 1);
    static const std::vector<std::pair<std::string, std::string>> kAllowed = {
        {"precision", "recall"},
        {"recall", "c_size"},
        {"modularity", "ccs"},
        {"modularity", "mdensity"},
    };
    if (std::find(kAllowed.begin(), kAllowed.end(), std::make_pair(x_name, y_name)) ==
        kAllowed.end()) {
        error_record(err, cmd.criteria_pair, "unsupported criteria pair");
        return 1;
    }
    if (cmd.partition_paths.size() < 2) {
        error_record(err, cmd.graph_path, "compare needs at least two partitions");
        return 1;
    }

    std::vector<ReportRow> rows;
    int failures = 0;
    try {
        failures = load_rows(cmd.graph_path, cmd.partition_paths, cmd.null_kind, err, rows);
    } catch (const std::exception& e) {
        error_record(err, cmd.graph_path, e.what());
        return 1;
    }
    if (rows.empty()) return 1;

    std::vector<ScorePoint> points;
    points.reserve(rows.size());
    for (const auto& row : rows)
        points.push_back({row.label, metric_by_name(row.report, x_name),
                          metric_by_name(row.report, y_name)});
    const auto frontier = pareto_frontier(points);
    const auto on_frontier = [&frontier](const std::string& id) {
        for (const auto& pt : frontier)
            if (pt.id == id) return true;
        return false;
    };

    std::vector<AlphaInterval> intervals;
    if (x_name == "modularity" && y_name == "mdensity") {
        std::vector<EnvelopePoint> env_points;
        env_points.reserve(rows.size());
        for (const auto& pt : points) env_points.push_back({pt.id, pt.x, pt.y});
        intervals = alpha_envelope(env_points);
    }

    Output output(cmd.out_path, out);
    if (cmd.format == OutputFormat::Csv) {
        output.get() << "label,communities," << x_name << ',' << y_name << ",on_frontier\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            output.get() << rows[i].label << ',' << rows[i].communities << ','
                         << format_double(points[i].x) << ',' << format_double(points[i].y) << ','
                         << (on_frontier(rows[i].label) ? 1 : 0) << '\n';
        }
        if (!intervals.empty() && !cmd.envelope_out_path.empty()) {
            std::ofstream env(cmd.envelope_out_path);
            if (!env) {
                error_record(err, cmd.envelope_out_path, "cannot open envelope output");
                return 1;
            }
            env << "label,lo,hi\n";
            for (const auto& iv : intervals)
                env << iv.id << ',' << format_double(iv.lo) << ',' << format_double(iv.hi) << '\n';
        }
    } else {
        json doc;
        doc["scores"] = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json obj{{"label", rows[i].label},
                     {"communities", rows[i].communities},
                     {x_name, points[i].x},
                     {y_name, points[i].y},
                     {"on_frontier", on_frontier(rows[i].label)}};
            doc["scores"].push_back(obj);
        }
        if (x_name == "modularity" && y_name == "mdensity") {
            doc["envelope"] = json::array();
            for (const auto& iv : intervals)
                doc["envelope"].push_back(json{{"label", iv.id}, {"lo", iv.lo}, {"hi", iv.hi}});
        }
        output.get() << doc.dump(2) << '\n';
    }
    return failures == 0 ? 0 : 2;
}

int run_pareto(const ParetoCmd& cmd, std::ostream& out, std::ostream& err) {
    CsvTable table;
    try {
        table = read_csv(cmd.scores_path);
        const std::size_t xcol = table.column(cmd.x_column);
        const std::size_t ycol = table.column(cmd.y_column);

        std::vector<ScorePoint> points;
        points.reserve(table.rows.size());
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            points.push_back({table.rows[r][0], parse_field_double(table.rows[r][xcol], r + 2),
                              parse_field_double(table.rows[r][ycol], r + 2)});
        }
        const auto frontier = pareto_frontier(points);

        Output output(cmd.out_path, out);
        if (cmd.format == OutputFormat::Csv) {
            output.get() << table.header[0] << ',' << cmd.x_column << ',' << cmd.y_column << '\n';
            for (const auto& pt : frontier)
                output.get() << pt.id << ',' << format_double(pt.x) << ','
                             << format_double(pt.y) << '\n';
        } else {
            json doc = json::array();
            for (const auto& pt : frontier)
                doc.push_back(json{{"label", pt.id},
                                   {cmd.x_column, pt.x},
                                   {cmd.y_column, pt.y}});
            output.get() << doc.dump(2) << '\n';
        }
    } catch (const std::exception& e) {
        error_record(err, cmd.scores_path, e.what());
        return 1;
    }
    return 0;
}

int run_envelope(const EnvelopeCmd& cmd, std::ostream& out, std::ostream& err) {
    try {
        const CsvTable table = read_csv(cmd.scores_path);
        const std::size_t mod_col = table.column("modularity");
        const std::size_t md_col = table.column("mdensity");

        std::vector<EnvelopePoint> points;
        points.reserve(table.rows.size());
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            points.push_back({table.rows[r][0],
                              parse_field_double(table.rows[r][mod_col], r + 2),
                              parse_field_double(table.rows[r][md_col], r + 2)});
        }
        const auto intervals = alpha_envelope(points);

        Output output(cmd.out_path, out);
        if (cmd.format == OutputFormat::Csv) {
            output.get() << "label,lo,hi\n";
            for (const auto& iv : intervals)
                output.get() << iv.id << ',' << format_double(iv.lo) << ','
                             << format_double(iv.hi) << '\n';
        } else {
            json doc = json::array();
            for (const auto& iv : intervals)
                doc.push_back(json{{"label", iv.id}, {"lo", iv.lo}, {"hi", iv.hi}});
            output.get() << doc.dump(2) << '\n';
        }
    } catch (const std::exception& e) {
        error_record(err, cmd.scores_path, e.what());
        return 1;
    }
    return 0;
}

namespace {

Detector make_detector(const std::string& spec, const Graph& g, NullModelKind kind,
                       std::ostream& err) {
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot read partition file '" + path + "'");
        // node set is unchanged by edge removal, so one parse serves all trials
        auto part = std::make_shared<Partition>(parse_partition_auto(in, g));
        return [part](const Graph&, std::uint64_t) { return *part; };
    }
    if (spec == "labelprop")
        return [](const Graph& training, std::uint64_t seed) {
            return label_propagation(training, seed);
        };
    if (spec == "greedy")
        return [kind](const Graph& training, std::uint64_t) {
            const auto hierarchy = greedy_agglomerative(training, kind);
            return hierarchy.levels[hierarchy.best_index];
        };
    if (spec == "louvain")
        return [](const Graph& training, std::uint64_t seed) {
            return louvain_style(training, seed).back();
        };
    (void)err;
    throw ValidationError("unknown detector '" + spec +
                          "' (expected file:PATH, labelprop, greedy, or louvain)");
}

}  // namespace

int run_eval_pr(const EvalPrCmd& cmd, std::ostream& out, std::ostream& err) {
    try {
        if (cmd.trials < 1) throw ValidationError("need at least one trial");
        const Graph g = load_graph(cmd.graph_path);
        const Detector detector = make_detector(cmd.detector, g, cmd.null_kind, err);

        std::vector<std::uint64_t> seeds(cmd.trials);
        for (int i = 0; i < cmd.trials; ++i) seeds[i] = cmd.seed + static_cast<std::uint64_t>(i);

        const TrialRun run = run_trials(g, cmd.removal_fraction, seeds, detector);

        Output output(cmd.out_path, out);
        if (cmd.format == OutputFormat::Csv) {
            output.get() << "seed,tp,fp,fn,tn,precision,recall\n";
            for (std::size_t i = 0; i < run.results.size(); ++i) {
                const auto& r = run.results[i];
                output.get() << run.seeds[i] << ',' << r.tp << ',' << r.fp << ',' << r.fn << ','
                             << r.tn << ',' << format_double(r.precision) << ','
                             << format_double(r.recall) << '\n';
            }
            err << "mean_precision=" << format_double(run.mean_precision)
                << " mean_recall=" << format_double(run.mean_recall) << '\n';
        } else {
            json doc;
            doc["p"] = cmd.removal_fraction;
            doc["trials"] = json::array();
            for (std::size_t i = 0; i < run.results.size(); ++i) {
                const auto& r = run.results[i];
                doc["trials"].push_back(json{{"seed", run.seeds[i]},
                                             {"tp", r.tp},
                                             {"fp", r.fp},
                                             {"fn", r.fn},
                                             {"tn", r.tn},
                                             {"precision", r.precision},
                                             {"recall", r.recall}});
            }
            doc["mean_precision"] = run.mean_precision;
            doc["mean_recall"] = run.mean_recall;
            output.get() << doc.dump(2) << '\n';
        }
    } catch (const std::exception& e) {
        error_record(err, cmd.graph_path, e.what());
        return 1;
    }
    return 0;
}

int run_gen(const GenCmd& cmd, std::ostream& err) {
    try {
        if (cmd.out_path.empty()) throw ValidationError("gen needs --out");

        Graph* graph = nullptr;
        Partition* truth = nullptr;
        std::optional<PlantedGraph> planted;
        std::optional<RingOfCliques> ring;

        if (cmd.kind == "sbm") {
            planted = gen_sbm(cmd.blocks, cmd.p_in, cmd.p_out, cmd.seed);
        } else if (cmd.kind == "fixed-clique") {
            planted = gen_fixed_clique_mu(cmd.cliques, cmd.size, cmd.mu, cmd.seed);
        } else if (cmd.kind == "ring") {
            ring = gen_ring_of_cliques(cmd.cliques, cmd.size);
        } else if (cmd.kind == "chain") {
            planted = gen_clique_chain(cmd.components, cmd.chain_len, cmd.size);
        } else {
            throw ValidationError("unknown generator '" + cmd.kind +
                                  "' (expected sbm, fixed-clique, ring, or chain)");
        }

        if (planted) {
            graph = &planted->graph;
            truth = &planted->planted;
        } else {
            graph = &ring->graph;
            truth = &ring->cliques;
        }

        std::ofstream gout(cmd.out_path);
        if (!gout) throw ValidationError("cannot open '" + cmd.out_path + "'");
        write_edge_list(gout, *graph);

        if (!cmd.truth_path.empty()) {
            std::ofstream tout(cmd.truth_path);
            if (!tout) throw ValidationError("cannot open '" + cmd.truth_path + "'");
            write_partition_tsv(tout, *graph, *truth);
        }
        if (!cmd.paired_truth_path.empty()) {
            if (!ring) throw ValidationError("--paired-truth only applies to ring graphs");
            if (!ring->paired)
                throw ValidationError("paired partition needs an even clique count");
            std::ofstream pout(cmd.paired_truth_path);
            if (!pout) throw ValidationError("cannot open '" + cmd.paired_truth_path + "'");
            write_partition_tsv(pout, *graph, *ring->paired);
        }
    } catch (const std::exception& e) {
        error_record(err, cmd.kind, e.what());
        return 1;
    }
    return 0;
}

int run_detect(const DetectCmd& cmd, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = load_graph(cmd.graph_path);

        std::vector<Partition> levels;
        std::size_t chosen = 0;
        if (cmd.method == "labelprop") {
            levels.push_back(label_propagation(g, cmd.seed));
        } else if (cmd.method == "greedy") {
            auto hierarchy = greedy_agglomerative(g, cmd.null_kind);
            chosen = hierarchy.best_index;
            levels = std::move(hierarchy.levels);
        } else if (cmd.method == "louvain") {
            levels = louvain_style(g, cmd.seed);
            chosen = levels.size() - 1;
        } else {
            throw ValidationError("unknown method '" + cmd.method +
                                  "' (expected labelprop, greedy, or louvain)");
        }

        Output output(cmd.out_path, out);
        write_partition_tsv(output.get(), g, levels[chosen]);

        if (!cmd.all_levels_dir.empty()) {
            std::filesystem::create_directories(cmd.all_levels_dir);
            for (std::size_t i = 0; i < levels.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof name, "level_%04zu.tsv", i);
                std::ofstream lout(std::filesystem::path(cmd.all_levels_dir) / name);
                if (!lout) throw ValidationError("cannot write level file in '" +
                                                 cmd.all_levels_dir + "'");
                write_partition_tsv(lout, g, levels[i]);
            }
        }
    } catch (const std::exception& e) {
        error_record(err, cmd.graph_path, e.what());
        return 1;
    }
    return 0;
}

}  // namespace parteval::commands
