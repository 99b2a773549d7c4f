// Copyright 2026 The lmgsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lmgsum: summarize labeled multi-graphs, evaluate labelings, verify and benchmark.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or input error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lmgsum/generators.hpp"
#include "lmgsum/graph.hpp"
#include "lmgsum/io.hpp"
#include "lmgsum/summarizer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputFlags {
    std::string input;
    std::string labels;
    bool undirected = false;
};

struct RunFlags {
    std::size_t rows = 8;
    std::size_t bands = 10;
    std::vector<std::size_t> checkpoints;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    std::size_t cluster_cap = 5000;
    bool no_completion = false;

    lmgsum::RunConfig config() const {
        lmgsum::RunConfig c;
        c.rows = rows;
        c.max_bands = bands;
        c.checkpoints = checkpoints;
        c.seed = seed;
        c.threads = threads;
        c.cluster_cap = cluster_cap;
        c.completion = !no_completion;
        try {
            c.validate();
        } catch (const lmgsum::Error &e) {
            throw UsageError(e.what());
        }
        return c;
    }
};

std::uint64_t default_seed() {
    if (const char *env = std::getenv("LMGSUM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw UsageError(std::string("LMGSUM_SEED is not a number: ") + env);
        }
    }
    return 1;
}

void add_input_flags(CLI::App *cmd, InputFlags &f, bool labels_required = false) {
    cmd->add_option("-i,--input", f.input, "Edge list: src dst [mult] per line")->required();
    auto *l = cmd->add_option("-l,--labels", f.labels, "Label list: node label per line");
    if (labels_required) l->required();
    cmd->add_flag("--undirected", f.undirected, "Materialize every edge in both directions");
}

void add_run_flags(CLI::App *cmd, RunFlags &f) {
    cmd->add_option("-r,--rows", f.rows, "Minhash rows per band")->check(CLI::PositiveNumber);
    cmd->add_option("-b,--bands", f.bands, "Number of LSH bands")->check(CLI::PositiveNumber);
    cmd->add_option("--checkpoints", f.checkpoints, "Band counts to snapshot, e.g. 2,5,10")->delimiter(',');
    cmd->add_option("--seed", f.seed, "Hash seed (default: LMGSUM_SEED or 1)");
    cmd->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--cluster-cap", f.cluster_cap, "Maximum LSH cluster size")->check(CLI::Range(2, 1 << 30));
    cmd->add_flag("--no-completion", f.no_completion, "Price LSH candidates only, without structure completion");
}

lmgsum::LabeledMultiGraph load(const InputFlags &f) {
    std::ifstream edges(f.input);
    if (!edges) throw IoError("cannot open input '" + f.input + "'");
    lmgsum::LoadOptions opts;
    opts.undirected = f.undirected;
    if (f.labels.empty()) return lmgsum::load_graph(edges, nullptr, opts, f.input);
    std::ifstream labels(f.labels);
    if (!labels) throw IoError("cannot open label file '" + f.labels + "'");
    return lmgsum::load_graph(edges, &labels, opts, f.input, f.labels);
}

std::ofstream open_out(const std::string &path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write '" + path + "'");
    return os;
}

std::string percent(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << 100.0 * x << '%';
    return os.str();
}

int cmd_summarize(const InputFlags &in, const RunFlags &rf, const std::string &json_path, const std::string &dot_dir,
                  const std::string &report_path, const std::string &corrections_path) {
    const auto g = load(in);
    const auto report = lmgsum::run(g, rf.config());
    const auto &s = report.summary();
    if (!json_path.empty()) {
        auto os = open_out(json_path);
        os << lmgsum::summary_to_json(s, lmgsum::total_cost(g, s)).dump(2) << '\n';
    }
    if (!dot_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dot_dir, ec);
        if (ec) throw IoError("cannot create '" + dot_dir + "': " + ec.message());
        for (const auto &cp : report.checkpoints) {
            auto os = open_out((std::filesystem::path(dot_dir) / ("summary_b" + std::to_string(cp.bands) + ".dot")).string());
            lmgsum::write_dot(os, cp.summary);
        }
    }
    if (!report_path.empty()) {
        auto os = open_out(report_path);
        os << lmgsum::report_to_json(report).dump(2) << '\n';
    }
    if (!corrections_path.empty()) {
        auto os = open_out(corrections_path);
        lmgsum::write_corrections(os, lmgsum::compute_corrections(g, s), g.node_names());
    }
    std::cout << "nodes " << g.node_count() << "  edges " << g.edge_count() << "  super-nodes "
              << s.super_nodes.size() << "  super-edges " << s.super_edges.size() << '\n';
    std::cout << std::fixed << std::setprecision(3) << "bits before " << report.bits_before << "  after "
              << report.bits_after << "  compression " << percent(report.compression_ratio) << '\n';
    for (const auto &cp : report.checkpoints)
        std::cout << "  b=" << cp.bands << "  bits " << cp.bits << "  compression " << percent(cp.compression_ratio)
                  << "  commits " << cp.commits << '\n';
    return kExitOk;
}

int cmd_eval(const InputFlags &in, const RunFlags &rf, std::size_t shuffles, const std::vector<double> &replay) {
    if (!replay.empty()) {
        if (replay.size() != 2) throw UsageError("--replay takes SHUFFLED,ACTUAL");
        std::cout << "actual " << replay[1] << "  shuffled " << replay[0] << "  normalized gain "
                  << percent(lmgsum::normalized_gain(replay[1], replay[0])) << '\n';
        return kExitOk;
    }
    if (in.input.empty() || in.labels.empty()) throw UsageError("eval-labels needs --input and --labels");
    const auto g = load(in);
    auto cfg = rf.config();
    const auto ev = lmgsum::shuffled_label_eval(g, cfg, shuffles);
    std::cout << std::fixed << std::setprecision(4) << "actual " << ev.actual;
    if (!ev.normalized_gain) {
        std::cout << '\n';
        std::cerr << "warning: single-label input, normalized gain is undefined\n";
        return kExitOk;
    }
    std::cout << "  shuffled " << ev.shuffled_mean << " (" << shuffles << " shuffles)  normalized gain "
              << percent(*ev.normalized_gain) << '\n';
    return kExitOk;
}

int cmd_verify(const InputFlags &in, const std::string &summary_path, const std::string &corrections_path) {
    if (!std::filesystem::exists(corrections_path))
        throw UsageError("correction file '" + corrections_path + "' does not exist");
    const auto g = load(in);
    std::ifstream sj(summary_path);
    if (!sj) throw IoError("cannot open summary '" + summary_path + "'");
    lmgsum::SummaryGraph s;
    try {
        s = lmgsum::summary_from_json(lmgsum::Json::parse(sj));
    } catch (const lmgsum::Json::exception &e) {
        throw lmgsum::Error(std::string("summary is not valid JSON: ") + e.what());
    }
    std::ifstream cs(corrections_path);
    if (!cs) throw IoError("cannot open corrections '" + corrections_path + "'");
    const auto c = lmgsum::read_corrections(cs, s.node_names, corrections_path);
    std::vector<std::string> rebuilt;
    try {
        rebuilt = lmgsum::canonical_dump(lmgsum::reconstruct(s, c));
    } catch (const lmgsum::Error &e) {
        std::cout << "FAIL: reconstruction rejected: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    const auto original = lmgsum::canonical_dump(g);
    for (std::size_t i = 0; i < std::max(original.size(), rebuilt.size()); ++i) {
        const std::string a = i < original.size() ? original[i] : "<end>";
        const std::string b = i < rebuilt.size() ? rebuilt[i] : "<end>";
        if (a != b) {
            std::cout << "FAIL: first divergence at line " << i + 1 << "\n  input:         " << a
                      << "\n  reconstructed: " << b << '\n';
            return kExitVerifyFailed;
        }
    }
    std::cout << "OK: lossless (" << g.node_count() << " nodes, " << g.edge_count() << " edges)\n";
    return kExitOk;
}

int cmd_bench(const InputFlags &in, const RunFlags &rf, std::vector<std::size_t> sizes, std::size_t k,
              std::vector<double> fractions, const std::string &csv_path) {
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!csv_path.empty()) {
        file = open_out(csv_path);
        out = &file;
    }
    *out << "nodes,edges,seconds,ratio\n";
    auto row = [&](const lmgsum::LabeledMultiGraph &g) {
        const auto start = std::chrono::steady_clock::now();
        const auto report = lmgsum::run(g, rf.config());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        *out << g.node_count() << ',' << g.edge_count() << ',' << std::setprecision(6) << secs << ','
             << report.compression_ratio << '\n';
        out->flush();
    };
    if (!in.input.empty()) {
        const auto g = load(in);
        if (fractions.empty()) fractions = {0.2, 0.4, 0.6, 0.8, 1.0};
        for (std::size_t i = 0; i < fractions.size(); ++i) row(lmgsum::sample_edges(g, fractions[i], rf.seed + i));
        return kExitOk;
    }
    if (sizes.empty()) sizes = {1000, 3000, 10000, 30000, 100000};
    for (auto n : sizes) row(lmgsum::kout_graph(n, k, rf.seed));
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Lossless MDL summarization of labeled multi-graphs"};
    app.require_subcommand(1);

    InputFlags in;
    RunFlags rf;
    try {
        rf.seed = default_seed();
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    auto *summarize = app.add_subcommand("summarize", "Summarize a graph");
    std::string json_path, dot_dir, report_path, corrections_path;
    add_input_flags(summarize, in);
    add_run_flags(summarize, rf);
    summarize->add_option("--json", json_path, "Write the final summary JSON here");
    summarize->add_option("--dot", dot_dir, "Write one DOT file per checkpoint into this directory");
    summarize->add_option("--report", report_path, "Write the run report JSON here");
    summarize->add_option("--corrections", corrections_path, "Write the correction list here");

    auto *eval = app.add_subcommand("eval-labels", "Normalized gain of a labeling over shuffled labels");
    std::size_t shuffles = 20;
    std::vector<double> replay;
    eval->add_option("-i,--input", in.input, "Edge list");
    eval->add_option("-l,--labels", in.labels, "Label list");
    eval->add_flag("--undirected", in.undirected, "Materialize every edge in both directions");
    add_run_flags(eval, rf);
    eval->add_option("--shuffles", shuffles, "Number of label shuffles")->check(CLI::PositiveNumber);
    eval->add_option("--replay", replay, "Only evaluate the gain formula on SHUFFLED,ACTUAL")->delimiter(',');

    auto *verify = app.add_subcommand("verify", "Check that a summary plus corrections reproduces the input");
    std::string summary_in, corrections_in;
    add_input_flags(verify, in);
    verify->add_option("--summary", summary_in, "Summary JSON")->required();
    verify->add_option("--corrections", corrections_in, "Correction list")->required();

    auto *bench = app.add_subcommand("bench", "Time summarization on k-out graphs or edge samples");
    std::vector<std::size_t> sizes;
    std::size_t k = 10;
    std::vector<double> fractions;
    std::string csv_path;
    bench->add_option("-i,--input", in.input, "Sample edges of this graph instead of generating");
    bench->add_option("-l,--labels", in.labels, "Label list for --input");
    bench->add_flag("--undirected", in.undirected, "Materialize every edge in both directions");
    add_run_flags(bench, rf);
    bench->add_option("--sizes", sizes, "k-out node counts")->delimiter(',');
    bench->add_option("--k", k, "Out-links per new node")->check(CLI::PositiveNumber);
    bench->add_option("--fractions", fractions, "Edge fractions to sample from --input")->delimiter(',');
    bench->add_option("--csv", csv_path, "Write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*summarize) return cmd_summarize(in, rf, json_path, dot_dir, report_path, corrections_path);
        if (*eval) return cmd_eval(in, rf, shuffles, replay);
        if (*verify) return cmd_verify(in, summary_in, corrections_in);
        if (*bench) return cmd_bench(in, rf, sizes, k, fractions, csv_path);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const lmgsum::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
