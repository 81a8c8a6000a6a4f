#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "parteval/null_model.hpp"

namespace parteval::commands {

// Command implementations behind the CLI, separated from argument parsing so
// they can be driven from tests. Each returns a process exit code: 0 all
// inputs processed, 1 hard error, 2 partial failure (some partitions
// rejected, valid ones still reported). When an output path is empty the
// result goes to `out`; error records are JSON lines on `err`.

enum class OutputFormat { Csv, Json };

OutputFormat format_from_string(std::string_view name);

struct MetricsCmd {
    std::string graph_path;
    std::vector<std::string> partition_paths;
    NullModelKind null_kind = NullModelKind::Configuration;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;  // empty: stream
};

int run_metrics(const MetricsCmd& cmd, std::ostream& out, std::ostream& err);

struct CompareCmd {
    std::string graph_path;
    std::vector<std::string> partition_paths;
    std::string criteria_pair = "modularity/mdensity";  // "x/y" metric names
    NullModelKind null_kind = NullModelKind::Configuration;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;           // scores with frontier column
    std::string envelope_out_path;  // alpha intervals; modularity/mdensity only
};

int run_compare(const CompareCmd& cmd, std::ostream& out, std::ostream& err);

struct ParetoCmd {
    std::string scores_path;
    std::string x_column = "modularity";
    std::string y_column = "mdensity";
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;
};

int run_pareto(const ParetoCmd& cmd, std::ostream& out, std::ostream& err);

struct EnvelopeCmd {
    std::string scores_path;  // needs modularity and mdensity columns
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;
};

int run_envelope(const EnvelopeCmd& cmd, std::ostream& out, std::ostream& err);

struct EvalPrCmd {
    std::string graph_path;
    std::string detector = "louvain";  // file:PATH | labelprop | greedy | louvain
    double removal_fraction = 0.1;
    int trials = 20;
    std::uint64_t seed = 42;  // trial i uses seed + i
    NullModelKind null_kind = NullModelKind::Configuration;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;
};

int run_eval_pr(const EvalPrCmd& cmd, std::ostream& out, std::ostream& err);

struct GenCmd {
    std::string kind;  // sbm | fixed-clique | ring | chain
    std::vector<std::int64_t> blocks;
    double p_in = 0.9;
    double p_out = 0.01;
    int cliques = 0;
    int size = 0;
    double mu = 0.5;
    int components = 0;
    int chain_len = 0;
    std::uint64_t seed = 42;
    std::string out_path;
    std::string truth_path;
    std::string paired_truth_path;  // ring only, needs even clique count
};

int run_gen(const GenCmd& cmd, std::ostream& err);

struct DetectCmd {
    std::string graph_path;
    std::string method = "louvain";  // labelprop | greedy | louvain
    std::uint64_t seed = 42;
    NullModelKind null_kind = NullModelKind::Configuration;
    std::string out_path;
    std::string all_levels_dir;  // empty: skip per-level dump
};

int run_detect(const DetectCmd& cmd, std::ostream& out, std::ostream& err);

}  // namespace parteval::commands
