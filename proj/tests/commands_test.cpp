#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "parteval/commands.hpp"
#include "parteval/metrics.hpp"

#include <json.hpp>

namespace fs = std::filesystem;
namespace cmds = parteval::commands;

namespace {

std::string fixture(const char* name) {
    return std::string(PARTEVAL_FIXTURES_DIR) + "/" + name;
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "parteval_cmd_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream fline(line);
        std::string field;
        while (std::getline(fline, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_CASE("metrics command emits the oracle row for the bowtie") {
    cmds::MetricsCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.partition_paths = {fixture("bowtie_triangles.tsv")};

    std::ostringstream out, err;
    const int rc = cmds::run_metrics(cmd, out, err);
    CHECK(rc == 0);
    CHECK(err.str().empty());

    const auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == "label");
    CHECK(rows[0][2] == "precision");
    REQUIRE(rows[1].size() == 10);
    CHECK(rows[1][1] == "2");
    CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0));          // precision
    CHECK(std::stod(rows[1][3]) == doctest::Approx(6.0 / 7.0));    // recall
    CHECK(std::stod(rows[1][6]) == doctest::Approx(2.5 / 7.0));    // modularity
    CHECK(std::stod(rows[1][9]) == doctest::Approx(2.0 / 7.0));    // mdensity
}

TEST_CASE("metrics command keeps row order and reports per-file failures") {
    const fs::path dir = temp_dir();
    const fs::path bad = dir / "bad_partition.tsv";
    std::ofstream(bad) << "0\tA\n";  // misses five nodes

    cmds::MetricsCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.partition_paths = {fixture("bowtie_triangles.tsv"), bad.string(),
                           fixture("bowtie_single.tsv")};

    std::ostringstream out, err;
    const int rc = cmds::run_metrics(cmd, out, err);
    CHECK(rc == 2);

    const auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 3);  // header + two valid rows, input order kept
    CHECK(rows[1][0] == fixture("bowtie_triangles.tsv"));
    CHECK(rows[2][0] == fixture("bowtie_single.tsv"));

    const auto record = nlohmann::json::parse(err.str());
    CHECK(record["input"] == bad.string());
}

TEST_CASE("metrics command writes json when asked") {
    cmds::MetricsCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.partition_paths = {fixture("bowtie_triangles.tsv")};
    cmd.format = cmds::OutputFormat::Json;

    std::ostringstream out, err;
    CHECK(cmds::run_metrics(cmd, out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["communities"] == 2);
    CHECK(doc[0]["precision"].get<double>() == doctest::Approx(1.0));
    CHECK(doc[0]["null"] == "configuration");
}

TEST_CASE("compare marks both ring partitions as the frontier") {
    const fs::path dir = temp_dir();
    const fs::path graph = dir / "ring40.edges";
    const fs::path singles = dir / "ring40_singles.tsv";
    const fs::path paired = dir / "ring40_paired.tsv";

    cmds::GenCmd gen;
    gen.kind = "ring";
    gen.cliques = 40;
    gen.size = 5;
    gen.out_path = graph.string();
    gen.truth_path = singles.string();
    gen.paired_truth_path = paired.string();
    std::ostringstream gen_err;
    REQUIRE(cmds::run_gen(gen, gen_err) == 0);

    cmds::CompareCmd cmd;
    cmd.graph_path = graph.string();
    cmd.partition_paths = {singles.string(), paired.string()};
    cmd.envelope_out_path = (dir / "ring40_envelope.csv").string();

    std::ostringstream out, err;
    REQUIRE(cmds::run_compare(cmd, out, err) == 0);

    const auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][4] == "on_frontier");
    CHECK(rows[1][4] == "1");
    CHECK(rows[2][4] == "1");

    const auto envelope = csv_rows(slurp(dir / "ring40_envelope.csv"));
    REQUIRE(envelope.size() >= 2);
    CHECK(std::stod(envelope[1][1]) == 0.0);
    CHECK(std::stod(envelope.back()[2]) == 1.0);
}

TEST_CASE("compare rejects unknown criteria pairs") {
    cmds::CompareCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.partition_paths = {fixture("bowtie_triangles.tsv"), fixture("bowtie_single.tsv")};
    cmd.criteria_pair = "recall/precision";
    std::ostringstream out, err;
    CHECK(cmds::run_compare(cmd, out, err) == 1);
}

TEST_CASE("pareto and envelope run off a scores file") {
    const fs::path dir = temp_dir();
    const fs::path scores = dir / "scores.csv";
    std::ofstream(scores) << "label,modularity,mdensity\n"
                             "coarse,0.5,0.2\n"
                             "fine,0.3,0.6\n"
                             "bad,0.2,0.1\n";

    cmds::ParetoCmd pareto;
    pareto.scores_path = scores.string();
    std::ostringstream pout, perr;
    REQUIRE(cmds::run_pareto(pareto, pout, perr) == 0);
    const auto prows = csv_rows(pout.str());
    REQUIRE(prows.size() == 3);  // header + the two undominated rows
    CHECK(prows[1][0] == "coarse");
    CHECK(prows[2][0] == "fine");

    cmds::EnvelopeCmd envelope;
    envelope.scores_path = scores.string();
    std::ostringstream eout, eerr;
    REQUIRE(cmds::run_envelope(envelope, eout, eerr) == 0);
    const auto erows = csv_rows(eout.str());
    REQUIRE(erows.size() == 3);
    CHECK(erows[1][0] == "fine");
    CHECK(std::stod(erows[1][2]) == doctest::Approx(2.0 / 3.0));
    CHECK(erows[2][0] == "coarse");
}

TEST_CASE("eval-pr is byte-reproducible") {
    cmds::EvalPrCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.detector = "file:" + fixture("bowtie_triangles.tsv");
    cmd.removal_fraction = 0.2;
    cmd.trials = 5;
    cmd.seed = 42;

    std::ostringstream out1, err1, out2, err2;
    REQUIRE(cmds::run_eval_pr(cmd, out1, err1) == 0);
    REQUIRE(cmds::run_eval_pr(cmd, out2, err2) == 0);
    CHECK(out1.str() == out2.str());

    const auto rows = csv_rows(out1.str());
    REQUIRE(rows.size() == 6);
    CHECK(rows[0][0] == "seed");
    CHECK(rows[1][0] == "42");
    CHECK(rows[5][0] == "46");
}

TEST_CASE("eval-pr json carries the trial means") {
    cmds::EvalPrCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.detector = "labelprop";
    cmd.removal_fraction = 0.2;
    cmd.trials = 3;
    cmd.format = cmds::OutputFormat::Json;

    std::ostringstream out, err;
    REQUIRE(cmds::run_eval_pr(cmd, out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["trials"].size() == 3);
    CHECK(doc.contains("mean_precision"));
    CHECK(doc.contains("mean_recall"));
}

TEST_CASE("gen output parses back with a valid truth file") {
    const fs::path dir = temp_dir();
    cmds::GenCmd gen;
    gen.kind = "sbm";
    gen.blocks = {10, 10};
    gen.p_in = 0.9;
    gen.p_out = 0.05;
    gen.seed = 9;
    gen.out_path = (dir / "sbm.edges").string();
    gen.truth_path = (dir / "sbm_truth.tsv").string();
    std::ostringstream err;
    REQUIRE(cmds::run_gen(gen, err) == 0);

    cmds::MetricsCmd metrics;
    metrics.graph_path = gen.out_path;
    metrics.partition_paths = {gen.truth_path};
    std::ostringstream out, merr;
    CHECK(cmds::run_metrics(metrics, out, merr) == 0);
    CHECK(csv_rows(out.str()).size() == 2);
}

TEST_CASE("gen refuses a paired truth for an odd ring") {
    const fs::path dir = temp_dir();
    cmds::GenCmd gen;
    gen.kind = "ring";
    gen.cliques = 5;
    gen.size = 4;
    gen.out_path = (dir / "odd_ring.edges").string();
    gen.paired_truth_path = (dir / "odd_ring_paired.tsv").string();
    std::ostringstream err;
    CHECK(cmds::run_gen(gen, err) == 1);
}

TEST_CASE("json partition files work through the metrics command") {
    const fs::path dir = temp_dir();
    const fs::path json_part = dir / "bowtie_triangles.json";
    std::ofstream(json_part) << R"([["0","1","2"],["3","4","5"]])";

    cmds::MetricsCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.partition_paths = {json_part.string()};
    std::ostringstream out, err;
    REQUIRE(cmds::run_metrics(cmd, out, err) == 0);
    const auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][6]) == doctest::Approx(2.5 / 7.0));  // modularity
}

TEST_CASE("detect can dump every hierarchy level") {
    const fs::path dir = temp_dir() / "levels";
    fs::remove_all(dir);

    cmds::DetectCmd detect;
    detect.graph_path = fixture("two_triangles.edges");
    detect.method = "greedy";
    detect.out_path = (temp_dir() / "greedy_best.tsv").string();
    detect.all_levels_dir = dir.string();

    std::ostringstream out, err;
    REQUIRE(cmds::run_detect(detect, out, err) == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        (void)entry;
        ++files;
    }
    CHECK(files == 6);  // one per merge level on a six-node graph
}

TEST_CASE("detect writes a partition that scores like the library result") {
    const fs::path dir = temp_dir();
    cmds::DetectCmd detect;
    detect.graph_path = fixture("karate.edges");
    detect.method = "louvain";
    detect.seed = 42;
    detect.out_path = (dir / "karate_louvain.tsv").string();

    std::ostringstream out, err;
    REQUIRE(cmds::run_detect(detect, out, err) == 0);

    cmds::MetricsCmd metrics;
    metrics.graph_path = fixture("karate.edges");
    metrics.partition_paths = {detect.out_path};
    std::ostringstream mout, merr;
    REQUIRE(cmds::run_metrics(metrics, mout, merr) == 0);
    const auto rows = csv_rows(mout.str());
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][6]) >= 0.38);  // modularity column
}

TEST_CASE("identical invocations produce identical bytes") {
    cmds::MetricsCmd cmd;
    cmd.graph_path = fixture("bowtie.edges");
    cmd.partition_paths = {fixture("bowtie_triangles.tsv"), fixture("bowtie_single.tsv")};
    std::ostringstream a, b, err;
    REQUIRE(cmds::run_metrics(cmd, a, err) == 0);
    REQUIRE(cmds::run_metrics(cmd, b, err) == 0);
    CHECK(a.str() == b.str());
}
