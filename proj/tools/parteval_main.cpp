#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "parteval/commands.hpp"
#include "parteval/null_model.hpp"

namespace cmds = parteval::commands;

int main(int argc, char** argv) {
    CLI::App app{"parteval - multi-criteria evaluation of community partitions"};
    app.require_subcommand(1);
    // global flags (--null, --format, --seed) may follow the subcommand
    app.fallthrough();

    std::string null_name = "configuration";
    std::string format_name = "csv";
    std::uint64_t seed = 42;
    app.add_option("--null", null_name, "null model: uniform or configuration")
        ->check(CLI::IsMember({"uniform", "configuration"}));
    app.add_option("--format", format_name, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "base random seed");

    // metrics
    cmds::MetricsCmd metrics;
    auto* metrics_cmd = app.add_subcommand("metrics", "score partitions of one graph");
    metrics_cmd->add_option("--graph", metrics.graph_path, "edge-list file")->required();
    metrics_cmd->add_option("--parts", metrics.partition_paths, "partition files (tsv or json)")
        ->required();
    metrics_cmd->add_option("--out", metrics.out_path, "output file (default: stdout)");

    // compare
    cmds::CompareCmd compare;
    auto* compare_cmd =
        app.add_subcommand("compare", "score partitions and mark the Pareto frontier");
    compare_cmd->add_option("--graph", compare.graph_path, "edge-list file")->required();
    compare_cmd->add_option("--parts", compare.partition_paths, "partition files")->required();
    compare_cmd->add_option("--pair", compare.criteria_pair,
                            "criteria pair: precision/recall, recall/c_size, modularity/ccs, "
                            "or modularity/mdensity");
    compare_cmd->add_option("--out", compare.out_path, "scores output (default: stdout)");
    compare_cmd->add_option("--envelope-out", compare.envelope_out_path,
                            "alpha-interval output (modularity/mdensity pair only)");

    // pareto
    cmds::ParetoCmd pareto;
    auto* pareto_cmd = app.add_subcommand("pareto", "non-dominated rows of a scores file");
    pareto_cmd->add_option("--scores", pareto.scores_path, "scores csv")->required();
    pareto_cmd->add_option("--x", pareto.x_column, "first criterion column");
    pareto_cmd->add_option("--y", pareto.y_column, "second criterion column");
    pareto_cmd->add_option("--out", pareto.out_path, "output file (default: stdout)");

    // envelope
    cmds::EnvelopeCmd envelope;
    auto* envelope_cmd =
        app.add_subcommand("envelope", "alpha intervals of maximal two-fold quality");
    envelope_cmd->add_option("--scores", envelope.scores_path, "scores csv")->required();
    envelope_cmd->add_option("--out", envelope.out_path, "output file (default: stdout)");

    // eval-pr
    cmds::EvalPrCmd eval_pr;
    auto* eval_cmd =
        app.add_subcommand("eval-pr", "edge-removal precision/recall protocol");
    eval_cmd->add_option("--graph", eval_pr.graph_path, "edge-list file")->required();
    eval_cmd->add_option("--detector", eval_pr.detector,
                         "file:PATH, labelprop, greedy, or louvain");
    eval_cmd->add_option("--p", eval_pr.removal_fraction, "fraction of edges to remove");
    eval_cmd->add_option("--trials", eval_pr.trials, "number of test sets");
    eval_cmd->add_option("--out", eval_pr.out_path, "output file (default: stdout)");

    // gen
    cmds::GenCmd gen;
    auto* gen_cmd = app.add_subcommand("gen", "benchmark graph generators");
    gen_cmd->add_option("kind", gen.kind, "sbm, fixed-clique, ring, or chain")->required();
    gen_cmd->add_option("--blocks", gen.blocks, "sbm block sizes");
    gen_cmd->add_option("--p-in", gen.p_in, "sbm intra-block edge probability");
    gen_cmd->add_option("--p-out", gen.p_out, "sbm inter-block edge probability");
    gen_cmd->add_option("--cliques", gen.cliques, "clique count (fixed-clique, ring)");
    gen_cmd->add_option("--size", gen.size, "clique size");
    gen_cmd->add_option("--mu", gen.mu, "mixing fraction (fixed-clique)");
    gen_cmd->add_option("--components", gen.components, "component count (chain)");
    gen_cmd->add_option("--chain-len", gen.chain_len, "path length (chain)");
    gen_cmd->add_option("--out", gen.out_path, "edge-list output")->required();
    gen_cmd->add_option("--truth", gen.truth_path, "planted partition output (tsv)");
    gen_cmd->add_option("--paired-truth", gen.paired_truth_path,
                        "paired partition output (ring, even clique count)");

    // detect
    cmds::DetectCmd detect;
    auto* detect_cmd = app.add_subcommand("detect", "run a baseline detector");
    detect_cmd->add_option("--graph", detect.graph_path, "edge-list file")->required();
    detect_cmd->add_option("--method", detect.method, "labelprop, greedy, or louvain");
    detect_cmd->add_option("--out", detect.out_path, "partition output (default: stdout)");
    detect_cmd->add_option("--all-levels", detect.all_levels_dir,
                           "directory for one file per level");

    CLI11_PARSE(app, argc, argv);

    const auto null_kind = parteval::null_model_from_string(null_name);
    const auto format = cmds::format_from_string(format_name);

    if (*metrics_cmd) {
        metrics.null_kind = null_kind;
        metrics.format = format;
        return cmds::run_metrics(metrics, std::cout, std::cerr);
    }
    if (*compare_cmd) {
        compare.null_kind = null_kind;
        compare.format = format;
        return cmds::run_compare(compare, std::cout, std::cerr);
    }
    if (*pareto_cmd) {
        pareto.format = format;
        return cmds::run_pareto(pareto, std::cout, std::cerr);
    }
    if (*envelope_cmd) {
        envelope.format = format;
        return cmds::run_envelope(envelope, std::cout, std::cerr);
    }
    if (*eval_cmd) {
        eval_pr.null_kind = null_kind;
        eval_pr.format = format;
        eval_pr.seed = seed;
        return cmds::run_eval_pr(eval_pr, std::cout, std::cerr);
    }
    if (*gen_cmd) {
        gen.seed = seed;
        return cmds::run_gen(gen, std::cerr);
    }
    if (*detect_cmd) {
        detect.null_kind = null_kind;
        detect.seed = seed;
        return cmds::run_detect(detect, std::cout, std::cerr);
    }
    return 1;
}
